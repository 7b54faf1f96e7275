#ifndef PERMCOH_ORACLE_HPP
#define PERMCOH_ORACLE_HPP

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "permcoh/coherence.hpp"
#include "permcoh/term.hpp"

namespace permcoh {

class BoundExceededError : public Error {
public:
  BoundExceededError() : Error("enumeration bound exceeded; oracle runs at desk scale only") {}
};

/// Labelled-token simulation state. Tokens carry the letter they currently
/// spell plus a unique label; the sign vector accumulates one graded sign
/// per generator.
struct TokenState {
  std::vector<std::pair<Letter, int>> tokens;
  std::vector<int> signs; // indexed by generator, +1 or -1

  std::vector<int> labels() const {
    std::vector<int> out;
    out.reserve(tokens.size());
    for (const auto& [letter, label] : tokens) out.push_back(label);
    return out;
  }

  /// For plain-fragment runs: the permutation sending each initial token
  /// position to its final position.
  Permutation permutation() const {
    std::vector<int> img(tokens.size());
    for (size_t pos = 0; pos < tokens.size(); ++pos) {
      int label = tokens[pos].second;
      if (label < 0 || label >= static_cast<int>(tokens.size()))
        throw Error("token labels were created or destroyed; no underlying permutation");
      img[static_cast<size_t>(label)] = static_cast<int>(pos);
    }
    return Permutation::from_zero_based(std::move(img));
  }
};

namespace detail {

struct TokenSim {
  TokenState state;
  int next_label = 0;

  void expect_letter(size_t pos, const Letter& want) {
    if (pos >= state.tokens.size() || !(state.tokens[pos].first == want))
      throw Error("token simulation desynchronized from term boundaries");
  }

  // Returns the width the term occupies after simulation.
  int run(const Term& t, bool reversed, size_t offset) {
    switch (t.kind()) {
      case TermKind::Id:
        return t.id_word().length();
      case TermKind::Beta: {
        const Word& first = reversed ? t.beta_right() : t.beta_left();
        const Word& second = reversed ? t.beta_left() : t.beta_right();
        int m = first.length(), k = second.length();
        std::rotate(state.tokens.begin() + static_cast<long>(offset),
                    state.tokens.begin() + static_cast<long>(offset) + m,
                    state.tokens.begin() + static_cast<long>(offset) + m + k);
        for (int g = 0; g < static_cast<int>(state.signs.size()); ++g) {
          int c = letter_count(first, g), d = letter_count(second, g);
          if (c % 2 != 0 && d % 2 != 0) state.signs[static_cast<size_t>(g)] *= -1;
        }
        return m + k;
      }
      case TermKind::Eta:
      case TermKind::Eps: {
        int g = t.generator();
        bool inserts = (t.kind() == TermKind::Eta) != reversed;
        // eta creates the pair (g', g); eps consumes the pair (g, g').
        Letter a{g, t.kind() == TermKind::Eta};
        Letter b{g, t.kind() == TermKind::Eps};
        if (inserts) {
          state.tokens.insert(state.tokens.begin() + static_cast<long>(offset),
                              {{a, next_label++}, {b, next_label++}});
          return 2;
        }
        expect_letter(offset, a);
        expect_letter(offset + 1, b);
        state.tokens.erase(state.tokens.begin() + static_cast<long>(offset),
                           state.tokens.begin() + static_cast<long>(offset) + 2);
        return 0;
      }
      case TermKind::Inv:
        return run(t.children().front(), !reversed, offset);
      case TermKind::Sum: {
        int width = 0;
        for (const Term& part : t.children())
          width += run(part, reversed, offset + static_cast<size_t>(width));
        return width;
      }
      case TermKind::Comp: {
        const auto& stages = t.children();
        int width = 0;
        if (reversed) {
          for (auto it = stages.rbegin(); it != stages.rend(); ++it)
            width = run(*it, true, offset);
        } else {
          for (const Term& s : stages) width = run(s, false, offset);
        }
        return width;
      }
    }
    throw Error("unreachable");
  }
};

} // namespace detail

/// Simulates a well-typed term on labelled tokens of its source word. Betas
/// physically move token blocks and multiply the per-generator signs by the
/// graded sign rule; eta inserts a fresh (g', g) pair; eps consumes an
/// adjacent (g, g') pair. For plain-fragment terms the final label order is
/// the underlying permutation; the sign vector reproduces each g-parity.
inline TokenState token_trace(const Term& t) {
  require_well_typed(t);
  detail::TokenSim sim;
  const Word& source = t.src();
  sim.state.signs.assign(static_cast<size_t>(t.registry()->size()), 1);
  sim.state.tokens.reserve(static_cast<size_t>(source.length()));
  for (const Letter& l : source.letters()) sim.state.tokens.push_back({l, sim.next_label++});
  sim.run(t, false, 0);
  const Word& target = t.tgt();
  if (static_cast<int>(sim.state.tokens.size()) != target.length())
    throw Error("token simulation desynchronized from term boundaries");
  for (int i = 0; i < target.length(); ++i)
    sim.expect_letter(static_cast<size_t>(i), target.at(i));
  return sim.state;
}

/// Which constructors an enumeration may use.
struct ConstructorMask {
  bool id = true, beta = true, eta = true, eps = true;
  bool sum = true, comp = true, inv = true;

  static ConstructorMask all() { return {}; }
  static ConstructorMask plain() {
    return {true, true, false, false, true, true, false};
  }
};

/// Exhaustive generation of well-typed normal-form terms between fixed
/// boundary words, memoized so that many hom-sets over one registry share
/// their sub-enumerations. Generated terms are already in constructor normal
/// form: sums and composites are flat with at least two parts, inverses
/// never nest, and betas have nonempty sides.
class TermEnumerator {
public:
  TermEnumerator(RegistryPtr reg, int max_size, ConstructorMask mask = ConstructorMask::all())
      : reg_(std::move(reg)), max_size_(max_size), mask_(mask) {
    if (max_size_ > 9) throw BoundExceededError();
  }

  std::vector<Term> parallel_terms(const Word& u, const Word& v, int max_size) {
    if (max_size > max_size_ || u.length() > 4 || v.length() > 4) throw BoundExceededError();
    std::vector<Term> out;
    for (int s = 1; s <= max_size; ++s) {
      const auto& bucket = terms(u, v, s);
      out.insert(out.end(), bucket.begin(), bucket.end());
    }
    return out;
  }

  std::vector<Term> parallel_terms(const Word& u, const Word& v) {
    return parallel_terms(u, v, max_size_);
  }

private:
  RegistryPtr reg_;
  int max_size_;
  ConstructorMask mask_;
  std::unordered_map<std::string, std::vector<Term>> memo_;
  std::unordered_map<std::string, std::vector<Word>> word_pool_;

  static std::string word_key(const Word& w) {
    std::string k;
    for (const Letter& l : w.letters()) {
      k += static_cast<char>('0' + l.gen);
      if (l.primed) k += '\'';
    }
    return k;
  }

  static bool head_is(const Term& t, TermKind k) { return t.kind() == k; }

  const std::vector<Term>& terms(const Word& u, const Word& v, int s) {
    std::string key = word_key(u) + "|" + word_key(v) + "|" + std::to_string(s);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Term> out;
    if (grading(u) == grading(v)) build(u, v, s, out);
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

  void build(const Word& u, const Word& v, int s, std::vector<Term>& out) {
    if (s == 1) {
      if (mask_.id && u == v) out.push_back(Term::id(u));
      if (mask_.beta && u.length() >= 2) {
        for (int p = 1; p < u.length(); ++p) {
          Word x = u.slice(0, p), y = u.slice(p, u.length());
          if (y + x == v) out.push_back(Term::beta(x, y));
        }
      }
      if (mask_.eta && u.is_empty() && v.length() == 2) {
        const Letter& a = v.at(0);
        const Letter& b = v.at(1);
        if (a.gen == b.gen && a.primed && !b.primed && reg_->invertible(a.gen))
          out.push_back(Term::eta(reg_, a.gen));
      }
      if (mask_.eps && v.is_empty() && u.length() == 2) {
        const Letter& a = u.at(0);
        const Letter& b = u.at(1);
        if (a.gen == b.gen && !a.primed && b.primed && reg_->invertible(a.gen))
          out.push_back(Term::eps(reg_, a.gen));
      }
      return;
    }
    if (mask_.inv) {
      for (const Term& t : terms(v, u, s - 1))
        if (!head_is(t, TermKind::Inv)) out.push_back(Term::inv(t));
    }
    if (mask_.sum) {
      std::vector<Term> parts;
      sum_parts(u, 0, v, 0, s, parts, out);
    }
    if (mask_.comp) {
      std::vector<Term> stages;
      comp_stages(u, v, s, stages, out);
    }
  }

  // Extends `parts` with every way to finish a flattened sum covering the
  // suffixes u[up..] -> v[vp..] with exactly `budget` remaining size.
  void sum_parts(const Word& u, int up, const Word& v, int vp, int budget,
                 std::vector<Term>& parts, std::vector<Term>& out) {
    bool last_ok = parts.size() >= 1;
    if (last_ok) {
      Word ur = u.slice(up, u.length()), vr = v.slice(vp, v.length());
      for (const Term& t : terms(ur, vr, budget)) {
        if (head_is(t, TermKind::Sum)) continue;
        parts.push_back(t);
        out.push_back(Term::sum(parts));
        parts.pop_back();
      }
    }
    // First/next part: any boundary prefix pair and size, leaving >= 1 size
    // for the rest.
    for (int s1 = 1; s1 < budget; ++s1) {
      for (int ue = up; ue <= u.length(); ++ue) {
        for (int ve = vp; ve <= v.length(); ++ve) {
          Word u1 = u.slice(up, ue), v1 = v.slice(vp, ve);
          for (const Term& t : terms(u1, v1, s1)) {
            if (head_is(t, TermKind::Sum)) continue;
            parts.push_back(t);
            sum_parts(u, ue, v, ve, budget - s1, parts, out);
            parts.pop_back();
          }
        }
      }
    }
  }

  void comp_stages(const Word& u, const Word& v, int budget,
                   std::vector<Term>& stages, std::vector<Term>& out) {
    if (stages.size() >= 1) {
      for (const Term& t : terms(u, v, budget)) {
        if (head_is(t, TermKind::Comp)) continue;
        stages.push_back(t);
        out.push_back(Term::comp(stages));
        stages.pop_back();
      }
    }
    for (int s1 = 1; s1 < budget; ++s1) {
      int rest = budget - s1;
      int cap = std::min(u.length() + 2 * s1, v.length() + 2 * rest);
      for (const Word& m : middle_words(grading(u), cap)) {
        for (const Term& t : terms(u, m, s1)) {
          if (head_is(t, TermKind::Comp)) continue;
          stages.push_back(t);
          comp_stages(m, v, rest, stages, out);
          stages.pop_back();
        }
      }
    }
  }

  const std::vector<Word>& middle_words(const GradingVector& g, int max_len) {
    std::string key;
    for (int x : g) key += std::to_string(x) + ",";
    key += "|" + std::to_string(max_len);
    auto it = word_pool_.find(key);
    if (it != word_pool_.end()) return it->second;

    std::vector<Word> pool;
    std::vector<Letter> prefix;
    grow_words(g, max_len, prefix, pool);
    return word_pool_.emplace(std::move(key), std::move(pool)).first->second;
  }

  void grow_words(const GradingVector& target, int max_len, std::vector<Letter>& prefix,
                  std::vector<Word>& pool) {
    GradingVector need = target;
    for (const Letter& l : prefix) need[static_cast<size_t>(l.gen)] -= l.primed ? -1 : 1;
    int min_needed = 0;
    for (int x : need) min_needed += x < 0 ? -x : x;
    int remaining = max_len - static_cast<int>(prefix.size());
    if (min_needed > remaining) return;
    if (min_needed == 0)
      pool.push_back(Word(reg_, prefix));
    if (remaining == 0) return;
    for (int gen = 0; gen < reg_->size(); ++gen) {
      prefix.push_back({gen, false});
      grow_words(target, max_len, prefix, pool);
      prefix.pop_back();
      if (reg_->invertible(gen)) {
        prefix.push_back({gen, true});
        grow_words(target, max_len, prefix, pool);
        prefix.pop_back();
      }
    }
  }
};

/// Exhaustively generates every well-typed normal-form term src -> tgt whose
/// size stays within max_size, using only the constructors the mask allows.
/// Desk-scale bounds are enforced; this is test support, not a search
/// procedure.
inline std::vector<Term> enumerate_parallel_terms(const Word& src, const Word& tgt,
                                                  int max_size,
                                                  ConstructorMask mask = ConstructorMask::all()) {
  require_same_registry(src.registry(), tgt.registry());
  TermEnumerator en(src.registry(), max_size, mask);
  return en.parallel_terms(src, tgt);
}

/// Representatives of the hom-set's equality classes among enumerated terms.
inline std::vector<Term> classify_homset(const Word& src, const Word& tgt, int max_size,
                                         ConstructorMask mask = ConstructorMask::all()) {
  std::vector<Term> reps;
  for (const Term& t : enumerate_parallel_terms(src, tgt, max_size, mask)) {
    bool fresh = true;
    for (const Term& r : reps) {
      if (check_equal(t, r).equal()) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(t);
  }
  return reps;
}

/// Reproducible generator of random well-typed terms, used to fuzz the
/// evaluators against each other.
class RandomTermGenerator {
public:
  RandomTermGenerator(RegistryPtr reg, unsigned seed)
      : reg_(std::move(reg)), rng_(seed) {}

  Word random_word(int max_len) {
    int len = pick(0, max_len);
    std::vector<Letter> letters;
    letters.reserve(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) {
      int g = pick(0, reg_->size() - 1);
      bool primed = reg_->invertible(g) && pick(0, 1) == 1;
      letters.push_back({g, primed});
    }
    return Word(reg_, std::move(letters));
  }

  Term random_term(int depth = 3) {
    if (depth <= 0) return leaf();
    switch (pick(0, 4)) {
      case 0: return leaf();
      case 1: {
        std::vector<Term> parts;
        int n = pick(2, 3);
        for (int i = 0; i < n; ++i) parts.push_back(random_term(depth - 1));
        return Term::sum(std::move(parts));
      }
      case 2: return random_chain(random_word(3), pick(1, 4));
      case 3: return Term::inv(random_term(depth - 1));
      default: return random_chain(random_term(depth - 1), pick(1, 3));
    }
  }

private:
  RegistryPtr reg_;
  std::mt19937 rng_;

  int pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  int random_invertible() {
    std::vector<int> inv;
    for (int g = 0; g < reg_->size(); ++g)
      if (reg_->invertible(g)) inv.push_back(g);
    if (inv.empty()) return -1;
    return inv[static_cast<size_t>(pick(0, static_cast<int>(inv.size()) - 1))];
  }

  Term leaf() {
    int g = random_invertible();
    switch (pick(0, g >= 0 ? 3 : 1)) {
      case 0: return Term::id(random_word(4));
      case 1: {
        Word x = random_word(2), y = random_word(2);
        return Term::beta(x, y);
      }
      case 2: return Term::eta(reg_, g);
      default: return Term::eps(reg_, g);
    }
  }

  Term random_chain(const Word& start, int stages) {
    return random_chain(Term::id(start), stages);
  }

  // Extends a term with randomly chosen composable stages.
  Term random_chain(Term t, int stages) {
    std::vector<Term> chain{std::move(t)};
    for (int i = 0; i < stages; ++i) {
      Term stage = random_stage(chain.back().tgt());
      chain.push_back(std::move(stage));
    }
    return Term::comp(std::move(chain));
  }

  Term random_stage(const Word& w) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      switch (pick(0, 2)) {
        case 0: { // insert eta or inverted eps
          int g = random_invertible();
          if (g < 0) break;
          int p = pick(0, w.length());
          Term mid = pick(0, 1) == 0 ? Term::eta(reg_, g) : Term::inv(Term::eps(reg_, g));
          return flanked(w, p, p, mid);
        }
        case 1: { // consume an adjacent cancelling pair
          std::vector<std::pair<int, bool>> sites; // position, primed-first
          for (int p = 0; p + 1 < w.length(); ++p) {
            const Letter& x = w.at(p);
            const Letter& y = w.at(p + 1);
            if (x.gen == y.gen && x.primed != y.primed)
              sites.push_back({p, x.primed});
          }
          if (sites.empty()) break;
          auto [p, primed_first] = sites[static_cast<size_t>(pick(0, static_cast<int>(sites.size()) - 1))];
          Term mid = primed_first ? Term::inv(Term::eta(reg_, w.at(p).gen))
                                  : Term::eps(reg_, w.at(p).gen);
          return flanked(w, p, p + 2, mid);
        }
        default: { // braid two adjacent blocks
          if (w.length() < 2) break;
          int i = pick(0, w.length() - 2);
          int p = pick(i + 1, w.length() - 1);
          int j = pick(p + 1, w.length());
          return flanked(w, i, j, Term::beta(w.slice(i, p), w.slice(p, j)));
        }
      }
    }
    return Term::id(w);
  }

  Term flanked(const Word& w, int from, int to, Term mid) {
    std::vector<Term> parts;
    if (from > 0) parts.push_back(Term::id(w.slice(0, from)));
    parts.push_back(std::move(mid));
    if (to < w.length()) parts.push_back(Term::id(w.slice(to, w.length())));
    return Term::sum(std::move(parts));
  }
};

} // namespace permcoh

#endif
