#ifndef PERMCOH_COHERENCE_HPP
#define PERMCOH_COHERENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "permcoh/semantics.hpp"
#include "permcoh/term.hpp"

namespace permcoh {

/// The outcome of deciding equality of two formal morphisms. Parallel terms
/// are compared one generator at a time: underlying permutations for plain
/// generators, parities for invertible ones. Every disagreeing generator
/// becomes a witness.
struct Verdict {
  enum class Status { Equal, NotParallel, Differs };

  struct Witness {
    std::string generator;
    enum class Kind { Parity, Permutation } kind;
    std::string lhs;
    std::string rhs;
  };

  struct BoundaryMismatch {
    Word lhs_src, lhs_tgt;
    Word rhs_src, rhs_tgt;
  };

  Status status = Status::Equal;
  std::vector<Witness> witnesses;
  std::optional<BoundaryMismatch> boundary;

  bool equal() const { return status == Status::Equal; }

  std::string status_str() const {
    switch (status) {
      case Status::Equal: return "equal";
      case Status::NotParallel: return "not-parallel";
      case Status::Differs: return "differs";
    }
    return {};
  }
};

inline std::string to_string(Verdict::Witness::Kind k) {
  return k == Verdict::Witness::Kind::Parity ? "parity" : "permutation";
}

/// Decides whether two parallel formal morphisms are equal, by comparing the
/// g-permutation at every plain generator and the g-parity at every
/// invertible generator. Boundaries are compared as literal words; terms
/// with different boundaries are not parallel and never equal.
inline Verdict check_equal(const Term& s, const Term& t) {
  require_same_registry(s.registry(), t.registry());
  require_well_typed(s);
  require_well_typed(t);

  Verdict v;
  if (!(s.src() == t.src()) || !(s.tgt() == t.tgt())) {
    v.status = Verdict::Status::NotParallel;
    v.boundary = Verdict::BoundaryMismatch{s.src(), s.tgt(), t.src(), t.tgt()};
    return v;
  }

  const Registry& reg = *s.registry();
  for (int g = 0; g < reg.size(); ++g) {
    if (reg.invertible(g)) {
      Parity ps = a_parity(s, g);
      Parity pt = a_parity(t, g);
      if (ps != pt)
        v.witnesses.push_back({reg.name(g), Verdict::Witness::Kind::Parity,
                               to_string(ps), to_string(pt)});
    } else {
      Permutation ps = a_permutation(s, g);
      Permutation pt = a_permutation(t, g);
      if (!(ps == pt))
        v.witnesses.push_back({reg.name(g), Verdict::Witness::Kind::Permutation,
                               ps.str(), pt.str()});
    }
  }
  v.status = v.witnesses.empty() ? Verdict::Status::Equal : Verdict::Status::Differs;
  return v;
}

/// True iff t is an endomorphism equal to the identity on its boundary.
inline bool is_identity(const Term& t) {
  require_well_typed(t);
  if (!(t.src() == t.tgt())) return false;
  return check_equal(t, Term::id(t.src())).equal();
}

/// All-pairs commutativity report for a family of named paths. Pairs with
/// mismatched boundaries are reported not-parallel rather than failing the
/// whole check.
struct DiagramReport {
  struct PairResult {
    std::string lhs_name;
    std::string rhs_name;
    Verdict verdict;
  };
  std::vector<PairResult> pairs;
  bool commutes = true;
};

inline DiagramReport verify_diagram(const std::vector<std::pair<std::string, Term>>& paths) {
  if (paths.size() < 2) throw Error("a diagram needs at least two paths");
  for (const auto& [name, term] : paths) require_well_typed(term);
  DiagramReport report;
  for (size_t i = 0; i < paths.size(); ++i) {
    for (size_t j = i + 1; j < paths.size(); ++j) {
      Verdict v = check_equal(paths[i].second, paths[j].second);
      if (!v.equal()) report.commutes = false;
      report.pairs.push_back({paths[i].first, paths[j].first, std::move(v)});
    }
  }
  return report;
}

} // namespace permcoh

#endif
