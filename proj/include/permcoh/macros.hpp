#ifndef PERMCOH_MACROS_HPP
#define PERMCOH_MACROS_HPP

#include <string>
#include <vector>

#include "permcoh/permutation.hpp"
#include "permcoh/term.hpp"

namespace permcoh {

namespace detail {
inline Word letter_word(const RegistryPtr& reg, int gen, bool primed) {
  return Word(reg, {{gen, primed}});
}
} // namespace detail

/// k-fold iterated monoidal sum of a word; 0 copies give the unit.
inline Word n_dot(int k, const Word& w) {
  Word out = Word::empty(w.registry());
  for (int i = 0; i < k; ++i) out = out + w;
  return out;
}

/// k-fold iterated monoidal sum of a morphism; 0 copies give id on the unit.
inline Term n_dot_mor(int k, const Term& t) {
  if (k == 0) return Term::id(Word::empty(t.registry()));
  std::vector<Term> parts(static_cast<size_t>(k), t);
  return Term::sum(std::move(parts));
}

/// The figure eight: eps o beta_{g',g} o eta, an automorphism of the unit.
inline Term figure_eight(const RegistryPtr& reg, int gen) {
  Word gp = detail::letter_word(reg, gen, true);
  Word g = detail::letter_word(reg, gen, false);
  return Term::comp({Term::eta(reg, gen), Term::beta(gp, g), Term::eps(reg, gen)});
}
inline Term figure_eight(const RegistryPtr& reg, const std::string& gen) {
  return figure_eight(reg, reg->index_of(gen));
}

/// The five-stage figure C, built from eta and its inverse only.
inline Term figure_c(const RegistryPtr& reg, int gen) {
  Word gp = detail::letter_word(reg, gen, true);
  Word g = detail::letter_word(reg, gen, false);
  Term eta = Term::eta(reg, gen);
  return Term::comp({
      eta,
      Term::sum({Term::id(gp), eta, Term::id(g)}),
      Term::sum({Term::id(gp), Term::id(gp), Term::beta(g, g)}),
      Term::sum({Term::id(gp), Term::inv(eta), Term::id(g)}),
      Term::inv(eta),
  });
}
inline Term figure_c(const RegistryPtr& reg, const std::string& gen) {
  return figure_c(reg, reg->index_of(gen));
}

/// The three-stage figure H: (eta + eps^-1), then 1 + beta_{g,g} + 1, then
/// (eta^-1 + eps).
inline Term figure_h(const RegistryPtr& reg, int gen) {
  Word gp = detail::letter_word(reg, gen, true);
  Word g = detail::letter_word(reg, gen, false);
  Term eta = Term::eta(reg, gen);
  Term eps = Term::eps(reg, gen);
  return Term::comp({
      Term::sum({eta, Term::inv(eps)}),
      Term::sum({Term::id(gp), Term::beta(g, g), Term::id(gp)}),
      Term::sum({Term::inv(eta), eps}),
  });
}
inline Term figure_h(const RegistryPtr& reg, const std::string& gen) {
  return figure_h(reg, reg->index_of(gen));
}

/// For an isomorphism f : g -> h between invertible generators, the unique
/// companion g' -> h' that makes (f, dagger(f)) a map of invertible pairs:
///
///   g' --(eta_h + 1)--> h' h g' --(1 + inv f + 1)--> h' g g' --(1 + eps_g)--> h'
inline Term dagger(const Term& f, int gen_a, int gen_b) {
  const RegistryPtr& reg = f.registry();
  Word ga = detail::letter_word(reg, gen_a, false);
  Word gap = detail::letter_word(reg, gen_a, true);
  Word gb = detail::letter_word(reg, gen_b, false);
  Word gbp = detail::letter_word(reg, gen_b, true);
  if (!(f.src() == ga) || !(f.tgt() == gb))
    throw TypeCheckError(TypeError{TypeError::Kind::CompositionMismatch,
                                   {},
                                   std::make_pair(f.src(), ga + gb)});
  return Term::comp({
      Term::sum({Term::eta(reg, gen_b), Term::id(gap)}),
      Term::sum({Term::id(gbp), Term::inv(f), Term::id(gap)}),
      Term::sum({Term::id(gbp), Term::eps(reg, gen_a)}),
  });
}
inline Term dagger(const Term& f, const std::string& gen_a, const std::string& gen_b) {
  const RegistryPtr& reg = f.registry();
  return dagger(f, reg->index_of(gen_a), reg->index_of(gen_b));
}

/// Conjugation by an invertible generator on objects: w |-> g' + w + g.
inline Word conj_obj(int gen, const Word& w) {
  const RegistryPtr& reg = w.registry();
  if (!reg->invertible(gen)) throw NotInvertibleError(reg->name(gen));
  return detail::letter_word(reg, gen, true) + w + detail::letter_word(reg, gen, false);
}
inline Word conj_obj(const std::string& gen, const Word& w) {
  return conj_obj(w.registry()->index_of(gen), w);
}

/// Conjugation on morphisms: t |-> id_{g'} + t + id_g.
inline Term conj_mor(int gen, const Term& t) {
  const RegistryPtr& reg = t.registry();
  if (!reg->invertible(gen)) throw NotInvertibleError(reg->name(gen));
  return Term::sum({Term::id(detail::letter_word(reg, gen, true)), t,
                    Term::id(detail::letter_word(reg, gen, false))});
}
inline Term conj_mor(const std::string& gen, const Term& t) {
  return conj_mor(t.registry()->index_of(gen), t);
}

/// The monoidal constraint of conjugation: collapse the middle counit,
/// (g' w1 g) + (g' w2 g) -> g' w1 w2 g.
inline Term conj_constraint(int gen, const Word& w1, const Word& w2) {
  const RegistryPtr& reg = w1.registry();
  require_same_registry(reg, w2.registry());
  if (!reg->invertible(gen)) throw NotInvertibleError(reg->name(gen));
  Word gp = detail::letter_word(reg, gen, true);
  Word g = detail::letter_word(reg, gen, false);
  return Term::sum({Term::id(gp + w1), Term::eps(reg, gen), Term::id(w2 + g)});
}
inline Term conj_constraint(const std::string& gen, const Word& w1, const Word& w2) {
  return conj_constraint(w1.registry()->index_of(gen), w1, w2);
}

/// The canonical object k |-> k copies of g (k >= 0) or |k| copies of g'.
inline Word signed_power(const RegistryPtr& reg, int gen, int k) {
  if (!reg->invertible(gen) && k < 0) throw NotInvertibleError(reg->name(gen));
  std::vector<Letter> letters(static_cast<size_t>(k >= 0 ? k : -k),
                              Letter{gen, k < 0});
  return Word(reg, std::move(letters));
}

/// The canonical constraint morphism k.g + j.g -> (k+j).g: the identity when
/// k and j share a sign, and otherwise the inductive composite of
/// min(|k|,|j|) middle cancellations (eps for k>0>j, inverted eta for
/// k<0<j).
inline Term chi_tilde_constraint(int k, int j, const RegistryPtr& reg, int gen) {
  if (!reg->invertible(gen)) throw NotInvertibleError(reg->name(gen));
  if ((k >= 0 && j >= 0) || (k <= 0 && j <= 0))
    return Term::id(signed_power(reg, gen, k) + signed_power(reg, gen, j));
  std::vector<Term> stages;
  int kk = k, jj = j;
  while (kk > 0 && jj < 0) {
    std::vector<Term> parts;
    if (kk - 1 > 0) parts.push_back(Term::id(signed_power(reg, gen, kk - 1)));
    parts.push_back(Term::eps(reg, gen));
    if (jj + 1 < 0) parts.push_back(Term::id(signed_power(reg, gen, jj + 1)));
    stages.push_back(Term::sum(std::move(parts)));
    --kk;
    ++jj;
  }
  while (kk < 0 && jj > 0) {
    std::vector<Term> parts;
    if (kk + 1 < 0) parts.push_back(Term::id(signed_power(reg, gen, kk + 1)));
    parts.push_back(Term::inv(Term::eta(reg, gen)));
    if (jj - 1 > 0) parts.push_back(Term::id(signed_power(reg, gen, jj - 1)));
    stages.push_back(Term::sum(std::move(parts)));
    ++kk;
    --jj;
  }
  return Term::comp(std::move(stages));
}
inline Term chi_tilde_constraint(int k, int j, const RegistryPtr& reg,
                                 const std::string& gen) {
  return chi_tilde_constraint(k, j, reg, reg->index_of(gen));
}

/// Realizes a permutation as a composite of adjacent block symmetries acting
/// on the letters of w: the token at position i of w ends at position
/// sigma(i). On k copies of a single generator this is the image of sigma
/// under the characteristic functor of that generator.
inline Term permutation_term(const Permutation& sigma, const Word& w) {
  if (sigma.degree() != w.length()) throw Error("permutation degree does not match word length");
  const RegistryPtr& reg = w.registry();
  int n = w.length();
  std::vector<int> current(static_cast<size_t>(n));
  std::vector<int> target(static_cast<size_t>(n));
  Permutation inv = sigma.inverse();
  for (int i = 0; i < n; ++i) {
    current[static_cast<size_t>(i)] = i;
    target[static_cast<size_t>(i)] = inv(i);
  }
  std::vector<Letter> cur_letters = w.letters();
  std::vector<Term> stages;
  for (int j = 0; j < n; ++j) {
    int p = j;
    while (current[static_cast<size_t>(p)] != target[static_cast<size_t>(j)]) ++p;
    for (; p > j; --p) {
      std::vector<Term> parts;
      if (p - 1 > 0)
        parts.push_back(Term::id(Word(reg, std::vector<Letter>(cur_letters.begin(),
                                                               cur_letters.begin() + p - 1))));
      parts.push_back(Term::beta(Word(reg, {cur_letters[static_cast<size_t>(p - 1)]}),
                                 Word(reg, {cur_letters[static_cast<size_t>(p)]})));
      if (p + 1 < n)
        parts.push_back(Term::id(Word(reg, std::vector<Letter>(cur_letters.begin() + p + 1,
                                                               cur_letters.end()))));
      stages.push_back(Term::sum(std::move(parts)));
      std::swap(cur_letters[static_cast<size_t>(p - 1)], cur_letters[static_cast<size_t>(p)]);
      std::swap(current[static_cast<size_t>(p - 1)], current[static_cast<size_t>(p)]);
    }
  }
  if (stages.empty()) return Term::id(w);
  return Term::comp(std::move(stages));
}

} // namespace permcoh

#endif
