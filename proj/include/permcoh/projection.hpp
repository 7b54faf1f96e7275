#ifndef PERMCOH_PROJECTION_HPP
#define PERMCOH_PROJECTION_HPP

#include <string>
#include <vector>

#include "permcoh/term.hpp"

namespace permcoh {

class FragmentError : public Error {
public:
  FragmentError()
      : Error("term contains eta, eps, or primed letters; not in the plain fragment") {}
};

/// Registry with the single generator g, keeping its invertibility flag.
inline RegistryPtr projection_registry(const RegistryPtr& reg, int gen) {
  return make_registry({{reg->name(gen), reg->invertible(gen)}});
}

namespace detail {

inline Word project_word_onto(const Word& w, int gen, const RegistryPtr& target) {
  std::vector<Letter> letters;
  for (const Letter& l : w.letters())
    if (l.gen == gen) letters.push_back({0, l.primed});
  return Word(target, std::move(letters));
}

inline Term project_term_onto(const Term& t, int gen, const RegistryPtr& target) {
  switch (t.kind()) {
    case TermKind::Id:
      return Term::id(project_word_onto(t.id_word(), gen, target));
    case TermKind::Beta:
      return Term::beta(project_word_onto(t.beta_left(), gen, target),
                        project_word_onto(t.beta_right(), gen, target));
    case TermKind::Eta:
      return t.generator() == gen ? Term::eta(target, 0) : Term::id(Word::empty(target));
    case TermKind::Eps:
      return t.generator() == gen ? Term::eps(target, 0) : Term::id(Word::empty(target));
    case TermKind::Inv:
      return Term::inv(project_term_onto(t.children().front(), gen, target));
    case TermKind::Sum:
    case TermKind::Comp: {
      std::vector<Term> kids;
      kids.reserve(t.children().size());
      for (const Term& c : t.children()) kids.push_back(project_term_onto(c, gen, target));
      return t.kind() == TermKind::Sum ? Term::sum(std::move(kids))
                                       : Term::comp(std::move(kids));
    }
  }
  throw Error("unreachable");
}

} // namespace detail

/// The subword of letters belonging to g, keeping primes and order; the
/// result lives over the single-generator registry {g}.
inline Word project_word(const Word& w, int gen) {
  return detail::project_word_onto(w, gen, projection_registry(w.registry(), gen));
}
inline Word project_word(const Word& w, const std::string& gen) {
  return project_word(w, w.registry()->index_of(gen));
}

/// The projection I_g on terms: letters of other generators are erased, eta
/// and eps of other generators become identities on the unit, and beta keeps
/// its shape on the projected boundary words.
inline Term project_term(const Term& t, int gen) {
  return detail::project_term_onto(t, gen, projection_registry(t.registry(), gen));
}
inline Term project_term(const Term& t, const std::string& gen) {
  return project_term(t, t.registry()->index_of(gen));
}

namespace detail {

inline bool plain_fragment(const Term& t) {
  switch (t.kind()) {
    case TermKind::Eta:
    case TermKind::Eps: return false;
    case TermKind::Id: {
      for (const Letter& l : t.id_word().letters())
        if (l.primed) return false;
      return true;
    }
    case TermKind::Beta: {
      for (const Letter& l : t.src().letters())
        if (l.primed) return false;
      return true;
    }
    default:
      for (const Term& c : t.children())
        if (!plain_fragment(c)) return false;
      return true;
  }
}

inline Word collapse_word(const Word& w, const RegistryPtr& target) {
  std::vector<Letter> letters(static_cast<size_t>(w.length()), Letter{0, false});
  return Word(target, std::move(letters));
}

inline Term collapse_term(const Term& t, const RegistryPtr& target) {
  switch (t.kind()) {
    case TermKind::Id: return Term::id(collapse_word(t.id_word(), target));
    case TermKind::Beta:
      return Term::beta(collapse_word(t.beta_left(), target),
                        collapse_word(t.beta_right(), target));
    case TermKind::Inv: return Term::inv(collapse_term(t.children().front(), target));
    case TermKind::Sum:
    case TermKind::Comp: {
      std::vector<Term> kids;
      kids.reserve(t.children().size());
      for (const Term& c : t.children()) kids.push_back(collapse_term(c, target));
      return t.kind() == TermKind::Sum ? Term::sum(std::move(kids))
                                       : Term::comp(std::move(kids));
    }
    default: throw FragmentError();
  }
}

} // namespace detail

/// The collapse-to-one-generator functor on the plain fragment: every letter
/// is renamed to a single generator x. Rejects terms that mention eta, eps,
/// or primed letters.
inline Term omega(const Term& t) {
  if (!detail::plain_fragment(t)) throw FragmentError();
  return detail::collapse_term(t, make_registry({{"x", false}}));
}

} // namespace permcoh

#endif
