#ifndef PERMCOH_TERM_HPP
#define PERMCOH_TERM_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permcoh/registry.hpp"

namespace permcoh {

enum class TermKind { Id, Beta, Eta, Eps, Sum, Comp, Inv };

struct TypeError {
  enum class Kind { CompositionMismatch, UnknownGenerator, NotInvertible };
  Kind kind;
  std::vector<int> location;                  // child indices from the root
  std::optional<std::pair<Word, Word>> words; // the two unequal boundary words

  std::string message() const {
    std::string loc;
    for (int i : location) loc += "/" + std::to_string(i);
    if (loc.empty()) loc = "/";
    switch (kind) {
      case Kind::CompositionMismatch:
        return "composition mismatch at " + loc + ": " + words->first.str() +
               " vs " + words->second.str();
      case Kind::UnknownGenerator:
        return "unknown generator at " + loc;
      case Kind::NotInvertible:
        return "generator not invertible at " + loc;
    }
    return "type error";
  }
};

class TypeCheckError : public Error {
public:
  explicit TypeCheckError(TypeError err) : Error(err.message()), err_(std::move(err)) {}
  const TypeError& type_error() const { return err_; }

private:
  TypeError err_;
};

/// A formal morphism of the free permutative category, as a closed term over
/// id, beta, eta, eps, monoidal sum, composition, and inverse. Terms are
/// immutable and structurally shared. Normalizations applied at construction:
/// nested sums and composites flatten, singletons collapse, inv(inv(t)) is t,
/// and beta with an empty side is an identity.
///
/// Composites store their stages in diagrammatic order: stage i's target is
/// stage i+1's source, and the first stage applies first.
class Term {
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Node {
    TermKind kind;
    RegistryPtr reg;
    Word left, right;         // Id: left. Beta: both sides.
    int gen = -1;             // Eta/Eps
    std::vector<Term> children;
    Word src, tgt;            // cached boundaries
  };

public:
  static Term id(Word w) {
    Node n;
    n.kind = TermKind::Id;
    n.reg = w.registry();
    n.src = n.tgt = w;
    n.left = std::move(w);
    return wrap(std::move(n));
  }

  /// The symmetry x+y -> y+x at arbitrary word boundaries. An empty side
  /// collapses to the identity (beta_{0,x} = id_x in any permutative
  /// category).
  static Term beta(Word x, Word y) {
    if (x.is_empty()) return id(std::move(y));
    if (y.is_empty()) return id(std::move(x));
    require_same_registry(x.registry(), y.registry());
    Node n;
    n.kind = TermKind::Beta;
    n.reg = x.registry();
    n.src = x + y;
    n.tgt = y + x;
    n.left = std::move(x);
    n.right = std::move(y);
    return wrap(std::move(n));
  }

  /// eta_g : 0 -> g' g, the unit of g's invertible pair.
  static Term eta(const RegistryPtr& reg, int gen) {
    require_invertible(reg, gen);
    Node n;
    n.kind = TermKind::Eta;
    n.reg = reg;
    n.gen = gen;
    n.src = Word::empty(reg);
    n.tgt = Word(reg, {{gen, true}, {gen, false}});
    return wrap(std::move(n));
  }
  static Term eta(const RegistryPtr& reg, const std::string& gen) {
    return eta(reg, reg->index_of(gen));
  }

  /// eps_g : g g' -> 0, the counit of g's invertible pair.
  static Term eps(const RegistryPtr& reg, int gen) {
    require_invertible(reg, gen);
    Node n;
    n.kind = TermKind::Eps;
    n.reg = reg;
    n.gen = gen;
    n.src = Word(reg, {{gen, false}, {gen, true}});
    n.tgt = Word::empty(reg);
    return wrap(std::move(n));
  }
  static Term eps(const RegistryPtr& reg, const std::string& gen) {
    return eps(reg, reg->index_of(gen));
  }

  static Term sum(std::vector<Term> parts) {
    if (parts.empty()) throw Error("monoidal sum of no terms");
    std::vector<Term> flat;
    for (Term& p : parts) {
      if (p.kind() == TermKind::Sum)
        flat.insert(flat.end(), p.children().begin(), p.children().end());
      else
        flat.push_back(std::move(p));
    }
    if (flat.size() == 1) return flat.front();
    Node n;
    n.kind = TermKind::Sum;
    n.reg = flat.front().registry();
    n.src = Word::empty(n.reg);
    n.tgt = Word::empty(n.reg);
    for (const Term& p : flat) {
      require_same_registry(n.reg, p.registry());
      n.src = n.src + p.src();
      n.tgt = n.tgt + p.tgt();
    }
    n.children = std::move(flat);
    return wrap(std::move(n));
  }

  static Term comp(std::vector<Term> stages) {
    if (stages.empty()) throw Error("composite of no terms");
    std::vector<Term> flat;
    for (Term& s : stages) {
      if (s.kind() == TermKind::Comp)
        flat.insert(flat.end(), s.children().begin(), s.children().end());
      else
        flat.push_back(std::move(s));
    }
    if (flat.size() == 1) return flat.front();
    Node n;
    n.kind = TermKind::Comp;
    n.reg = flat.front().registry();
    for (const Term& s : flat) require_same_registry(n.reg, s.registry());
    n.src = flat.front().src();
    n.tgt = flat.back().tgt();
    n.children = std::move(flat);
    return wrap(std::move(n));
  }

  static Term inv(Term t) {
    if (t.kind() == TermKind::Inv) return t.children().front();
    Node n;
    n.kind = TermKind::Inv;
    n.reg = t.registry();
    n.src = t.tgt();
    n.tgt = t.src();
    n.children.push_back(std::move(t));
    return wrap(std::move(n));
  }

  TermKind kind() const { return node_->kind; }
  const RegistryPtr& registry() const { return node_->reg; }
  const Word& src() const { return node_->src; }
  const Word& tgt() const { return node_->tgt; }
  const Word& beta_left() const { return node_->left; }
  const Word& beta_right() const { return node_->right; }
  const Word& id_word() const { return node_->left; }
  int generator() const { return node_->gen; }
  const std::vector<Term>& children() const { return node_->children; }

  /// Structural equality after construction-time normalization.
  friend bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case TermKind::Id: return a.id_word() == b.id_word();
      case TermKind::Beta:
        return a.beta_left() == b.beta_left() && a.beta_right() == b.beta_right();
      case TermKind::Eta:
      case TermKind::Eps:
        return a.generator() == b.generator() && same_registry(a.registry(), b.registry());
      default: break;
    }
    if (a.children().size() != b.children().size()) return false;
    for (size_t i = 0; i < a.children().size(); ++i)
      if (!(a.children()[i] == b.children()[i])) return false;
    return true;
  }

  /// Canonical rendering in the script syntax: id(w), beta(x | y), eta(g),
  /// eps(g), inv(t), `+` for sums, `;` for diagrammatic composition. `;`
  /// binds tighter than `+`, so sum parts inside a composite need parens.
  std::string str() const {
    switch (kind()) {
      case TermKind::Id: return "id(" + id_word().str() + ")";
      case TermKind::Beta:
        return "beta(" + beta_left().str() + " | " + beta_right().str() + ")";
      case TermKind::Eta: return "eta(" + registry()->name(generator()) + ")";
      case TermKind::Eps: return "eps(" + registry()->name(generator()) + ")";
      case TermKind::Inv: {
        const Term& t = children().front();
        bool atomic = t.kind() != TermKind::Sum && t.kind() != TermKind::Comp;
        return atomic ? "inv(" + t.str() + ")" : "inv((" + t.str() + "))";
      }
      case TermKind::Sum: {
        std::string out;
        for (size_t i = 0; i < children().size(); ++i) {
          if (i) out += " + ";
          out += children()[i].str();
        }
        return out;
      }
      case TermKind::Comp: {
        std::string out;
        for (size_t i = 0; i < children().size(); ++i) {
          if (i) out += " ; ";
          const Term& s = children()[i];
          out += s.kind() == TermKind::Sum ? "(" + s.str() + ")" : s.str();
        }
        return out;
      }
    }
    return {};
  }

  /// Total number of generating nodes: leaves count one each, inv adds one,
  /// sums and composites cost just their parts.
  int size() const {
    switch (kind()) {
      case TermKind::Id:
      case TermKind::Beta:
      case TermKind::Eta:
      case TermKind::Eps: return 1;
      case TermKind::Inv: return 1 + children().front().size();
      default: {
        int s = 0;
        for (const Term& c : children()) s += c.size();
        return s;
      }
    }
  }

private:
  NodePtr node_;

  static Term wrap(Node n) {
    Term t;
    t.node_ = std::make_shared<const Node>(std::move(n));
    return t;
  }
  Term() = default;

  static void require_invertible(const RegistryPtr& reg, int gen) {
    if (gen < 0 || gen >= reg->size()) throw UnknownGeneratorError(std::to_string(gen));
    if (!reg->invertible(gen)) throw NotInvertibleError(reg->name(gen));
  }
};

inline const Word& src(const Term& t) { return t.src(); }
inline const Word& tgt(const Term& t) { return t.tgt(); }

namespace detail {

inline std::optional<TypeError> typecheck_at(const Term& t, std::vector<int>& path) {
  for (size_t i = 0; i < t.children().size(); ++i) {
    path.push_back(static_cast<int>(i));
    if (auto err = typecheck_at(t.children()[i], path)) return err;
    path.pop_back();
  }
  if (t.kind() == TermKind::Comp) {
    const auto& stages = t.children();
    for (size_t i = 0; i + 1 < stages.size(); ++i) {
      if (!(stages[i].tgt() == stages[i + 1].src())) {
        std::vector<int> loc = path;
        loc.push_back(static_cast<int>(i));
        return TypeError{TypeError::Kind::CompositionMismatch, std::move(loc),
                         std::make_pair(stages[i].tgt(), stages[i + 1].src())};
      }
    }
  }
  return std::nullopt;
}

} // namespace detail

/// Well-typedness check: every composite junction must match as literal word
/// equality. Returns the first failure in leftmost-innermost order.
inline std::optional<TypeError> typecheck(const Term& t) {
  std::vector<int> path;
  return detail::typecheck_at(t, path);
}

inline void require_well_typed(const Term& t) {
  if (auto err = typecheck(t)) throw TypeCheckError(*err);
}

} // namespace permcoh

#endif
