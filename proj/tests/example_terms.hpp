// Term encodings of the worked examples: the four-object symmetry square,
// iterated invertible pairs, additivity of the figure eight, and the
// conjugation diagrams. Shared between the unit tests and the acceptance
// runner.
#ifndef PERMCOH_TESTS_EXAMPLE_TERMS_HPP
#define PERMCOH_TESTS_EXAMPLE_TERMS_HPP

#include "permcoh/macros.hpp"
#include "permcoh/term.hpp"

namespace permcoh::examples {

inline Word pw(const RegistryPtr& r, const std::string& s) { return Word::parse(r, s); }

// Unit of the iterated pair (k copies): 0 -> k.g' + k.g.
inline Term eta_iter(const RegistryPtr& reg, int gen, int k) {
  if (k == 0) return Term::id(Word::empty(reg));
  Term acc = Term::eta(reg, gen);
  Word gp(reg, {{gen, true}});
  Word g(reg, {{gen, false}});
  for (int i = 1; i < k; ++i)
    acc = Term::comp({acc, Term::sum({Term::id(n_dot(i, gp)), Term::eta(reg, gen),
                                      Term::id(n_dot(i, g))})});
  return acc;
}

// Counit of the iterated pair: k.g + k.g' -> 0.
inline Term eps_iter(const RegistryPtr& reg, int gen, int k) {
  if (k == 0) return Term::id(Word::empty(reg));
  Word gp(reg, {{gen, true}});
  Word g(reg, {{gen, false}});
  Term acc = Term::eps(reg, gen);
  for (int i = 1; i < k; ++i)
    acc = Term::comp({Term::sum({Term::id(n_dot(i, g)), Term::eps(reg, gen),
                                 Term::id(n_dot(i, gp))}),
                      acc});
  return acc;
}

// Figure eight of the iterated pair (k.g, k.g').
inline Term figure_eight_iter(const RegistryPtr& reg, int gen, int k) {
  Word gp(reg, {{gen, true}});
  Word g(reg, {{gen, false}});
  return Term::comp({eta_iter(reg, gen, k),
                     Term::beta(n_dot(k, gp), n_dot(k, g)),
                     eps_iter(reg, gen, k)});
}

// The two-generator square a+a+b+b -> b+a+b+a whose commutativity follows
// componentwise: both generators plain.
struct SymmetrySquare {
  Term top_right;
  Term left_bottom;
};

inline SymmetrySquare mult2_square(const RegistryPtr& reg) {
  Word a = pw(reg, "a"), b = pw(reg, "b");
  Term top = Term::comp({Term::beta(pw(reg, "a a"), pw(reg, "b b")),
                         Term::sum({Term::id(b), Term::beta(b, a), Term::id(a)})});
  Term bottom = Term::comp({Term::sum({Term::id(a), Term::beta(a, b), Term::id(b)}),
                            Term::sum({Term::beta(a, b), Term::beta(a, b)})});
  return {top, bottom};
}

// Unit and counit candidates for the composite pair (a+b, b'+a') over
// {a!, b!}, each given by the two composites of its defining square.
struct AdditivityTerms {
  Term zeta_upper, zeta_lower;   // 0 -> b' a' a b
  Term theta_upper, theta_lower; // a b b' a' -> 0
  Term eight_ab;                 // via zeta/theta
  Term eight_sum;                // 8_a + 8_b
};

inline AdditivityTerms additivity_terms(const RegistryPtr& reg) {
  Word b = pw(reg, "b"), bp = pw(reg, "b'"), ap = pw(reg, "a'"), a = pw(reg, "a");
  Term eta_a = Term::eta(reg, "a"), eta_b = Term::eta(reg, "b");
  Term eps_a = Term::eps(reg, "a"), eps_b = Term::eps(reg, "b");

  AdditivityTerms out{
      // upper route: (eta_a + eta_b) then beta_{a'+a, b'} + id_b
      Term::comp({Term::sum({eta_a, eta_b}),
                  Term::sum({Term::beta(pw(reg, "a' a"), bp), Term::id(b)})}),
      // lower route: eta_b then id_{b'} + eta_a + id_b
      Term::comp({eta_b, Term::sum({Term::id(bp), eta_a, Term::id(b)})}),
      // upper route: id_a + eps_b + id_{a'} then eps_a
      Term::comp({Term::sum({Term::id(a), eps_b, Term::id(ap)}), eps_a}),
      // lower route: beta_{a, b+b'} + id_{a'} then eps_b + eps_a
      Term::comp({Term::sum({Term::beta(a, pw(reg, "b b'")), Term::id(ap)}),
                  Term::sum({eps_b, eps_a})}),
      Term::id(Word::empty(reg)),
      Term::id(Word::empty(reg))};

  out.eight_ab = Term::comp({out.zeta_upper,
                             Term::beta(pw(reg, "b' a'"), pw(reg, "a b")),
                             out.theta_upper});
  out.eight_sum = Term::sum({figure_eight(reg, "a"), figure_eight(reg, "b")});
  return out;
}

// Conjugation by a over {z, w, a!}: the symmetric-functor square, the
// monoidal-unit-transformation hexagon, and the square comparing conjugation
// by a with conjugation by a' that fails on parity.
struct ConjugationTerms {
  Term symmetry_top, symmetry_bottom;   // (z)^a + (w)^a -> a' w z a
  Term unit_top, unit_bottom;           // (z)^a + (w)^a -> z w
  Term noncommuting_top;                // (z)^a + (w)^a -> a z w a'
  Term noncommuting_bottom;
};

inline ConjugationTerms conjugation_terms(const RegistryPtr& reg) {
  Word z = pw(reg, "z"), wd = pw(reg, "w"), a = pw(reg, "a"), ap = pw(reg, "a'");
  Term eta = Term::eta(reg, "a");

  ConjugationTerms out{
      // constraint then id + beta_{z,w} + id
      Term::comp({conj_constraint("a", z, wd),
                  Term::sum({Term::id(ap), Term::beta(z, wd), Term::id(a)})}),
      // beta of the conjugated blocks then the flipped constraint
      Term::comp({Term::beta(pw(reg, "a' z a"), pw(reg, "a' w a")),
                  conj_constraint("a", wd, z)}),
      // constraint, slide z+w past a, cancel eta
      Term::comp({conj_constraint("a", z, wd),
                  Term::sum({Term::id(ap), Term::beta(pw(reg, "z w"), a)}),
                  Term::sum({Term::inv(eta), Term::id(pw(reg, "z w"))})}),
      // slide each block separately, cancel both etas
      Term::comp({Term::sum({Term::id(ap), Term::beta(z, a), Term::id(ap),
                             Term::beta(wd, a)}),
                  Term::sum({Term::inv(eta), Term::id(z), Term::inv(eta), Term::id(wd)})}),
      Term::id(Word::empty(reg)),
      Term::id(Word::empty(reg))};

  // top-right: constraint, slide z+w, then beta_{a', a+z+w}
  out.noncommuting_top =
      Term::comp({conj_constraint("a", z, wd),
                  Term::sum({Term::id(ap), Term::beta(pw(reg, "z w"), a)}),
                  Term::beta(ap, pw(reg, "a z w"))});
  // left-bottom: slide blocks, swap a' past each conjugate, collapse middle
  out.noncommuting_bottom =
      Term::comp({Term::sum({Term::id(ap), Term::beta(z, a), Term::id(ap),
                             Term::beta(wd, a)}),
                  Term::sum({Term::beta(ap, pw(reg, "a z")), Term::beta(ap, pw(reg, "a w"))}),
                  Term::sum({Term::id(pw(reg, "a z")), Term::inv(eta), Term::id(pw(reg, "w a'"))})});
  return out;
}

} // namespace permcoh::examples

#endif
