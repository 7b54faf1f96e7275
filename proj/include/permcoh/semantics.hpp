#ifndef PERMCOH_SEMANTICS_HPP
#define PERMCOH_SEMANTICS_HPP

#include <concepts>
#include <string>
#include <vector>

#include "permcoh/permutation.hpp"
#include "permcoh/projection.hpp"
#include "permcoh/superz.hpp"
#include "permcoh/term.hpp"

namespace permcoh {

class ProjectionRequiredError : public Error {
public:
  ProjectionRequiredError()
      : Error("evaluation into the super integers needs a single-generator term; "
              "project first") {}
};

/// Underlying permutation of a term in the plain one-generator fragment.
/// beta on blocks of lengths m and k is the block transposition; composites
/// multiply with the earlier stage applied first; sums act blockwise.
inline Permutation perm_of(const Term& t) {
  switch (t.kind()) {
    case TermKind::Id: return Permutation::identity(t.id_word().length());
    case TermKind::Beta: {
      for (const Letter& l : t.src().letters())
        if (l.primed) throw FragmentError();
      return Permutation::block_swap(t.beta_left().length(), t.beta_right().length());
    }
    case TermKind::Eta:
    case TermKind::Eps: throw FragmentError();
    case TermKind::Inv: return perm_of(t.children().front()).inverse();
    case TermKind::Sum: {
      Permutation p = Permutation::identity(0);
      for (const Term& c : t.children()) p = p.block_sum(perm_of(c));
      return p;
    }
    case TermKind::Comp: {
      Permutation acc = Permutation::identity(t.src().length());
      for (const Term& s : t.children()) acc = perm_of(s) * acc;
      return acc;
    }
  }
  throw Error("unreachable");
}

namespace detail {

// Fused projection-and-evaluation: the permutation induced on the g-letters
// alone, without materializing the projected term.
inline Permutation a_permutation_fast(const Term& t, int gen) {
  switch (t.kind()) {
    case TermKind::Id: {
      for (const Letter& l : t.id_word().letters())
        if (l.gen == gen && l.primed) throw FragmentError();
      return Permutation::identity(letter_count(t.id_word(), gen));
    }
    case TermKind::Beta: {
      for (const Letter& l : t.src().letters())
        if (l.gen == gen && l.primed) throw FragmentError();
      return Permutation::block_swap(letter_count(t.beta_left(), gen),
                                     letter_count(t.beta_right(), gen));
    }
    case TermKind::Eta:
    case TermKind::Eps:
      if (t.generator() == gen) throw FragmentError();
      return Permutation::identity(0);
    case TermKind::Inv:
      return a_permutation_fast(t.children().front(), gen).inverse();
    case TermKind::Sum: {
      Permutation p = Permutation::identity(0);
      for (const Term& c : t.children()) p = p.block_sum(a_permutation_fast(c, gen));
      return p;
    }
    case TermKind::Comp: {
      Permutation acc = Permutation::identity(letter_count(t.src(), gen));
      for (const Term& s : t.children()) acc = a_permutation_fast(s, gen) * acc;
      return acc;
    }
  }
  throw Error("unreachable");
}

} // namespace detail

/// The g-permutation: underlying permutation of the projection onto g's
/// factor, collapsed to a single generator.
inline Permutation a_permutation(const Term& t, int gen) {
  return detail::a_permutation_fast(t, gen);
}
inline Permutation a_permutation(const Term& t, const std::string& gen) {
  return a_permutation(t, t.registry()->index_of(gen));
}

/// Reference path for the g-permutation, following the definition literally:
/// project onto g, collapse to one generator, read off the permutation.
inline Permutation a_permutation_reference(const Term& t, int gen) {
  return perm_of(omega(project_term(t, gen)));
}
inline Permutation a_permutation_reference(const Term& t, const std::string& gen) {
  return a_permutation_reference(t, t.registry()->index_of(gen));
}

/// Evaluation of a single-invertible-generator term in the super integers.
/// Objects evaluate by signed letter count; eta and eps are identities of 0;
/// beta follows the graded sign rule.
inline SuperMorphism eval_superz(const Term& t) {
  const RegistryPtr& reg = t.registry();
  if (reg->size() != 1) throw ProjectionRequiredError();
  switch (t.kind()) {
    case TermKind::Id: return super_identity(signed_count(t.id_word(), 0));
    case TermKind::Beta:
      return super_braiding(signed_count(t.beta_left(), 0),
                            signed_count(t.beta_right(), 0));
    case TermKind::Eta:
    case TermKind::Eps: return super_identity(0);
    case TermKind::Inv: return eval_superz(t.children().front());
    case TermKind::Sum: {
      SuperMorphism acc = super_identity(0);
      for (const Term& c : t.children()) acc = super_sum(acc, eval_superz(c));
      return acc;
    }
    case TermKind::Comp: {
      SuperMorphism acc = super_identity(signed_count(t.src(), 0));
      for (const Term& s : t.children()) acc = super_compose(eval_superz(s), acc);
      return acc;
    }
  }
  throw Error("unreachable");
}

/// Parity of a single-invertible-generator term, via the super integers.
inline Parity parity(const Term& t) {
  if (t.registry()->size() != 1) throw ProjectionRequiredError();
  if (!t.registry()->invertible(0)) throw NotInvertibleError(t.registry()->name(0));
  return parity_of_sign(eval_superz(t).sign);
}

namespace detail {

/// Closed recursion for g-parity: only beta contributes, and only through the
/// mod-2 total letter counts of its two sides.
inline Parity a_parity_fast(const Term& t, int gen) {
  switch (t.kind()) {
    case TermKind::Id:
    case TermKind::Eta:
    case TermKind::Eps: return Parity::Even;
    case TermKind::Beta: {
      bool odd = (letter_count(t.beta_left(), gen) % 2 != 0) &&
                 (letter_count(t.beta_right(), gen) % 2 != 0);
      return odd ? Parity::Odd : Parity::Even;
    }
    case TermKind::Inv: return a_parity_fast(t.children().front(), gen);
    default: {
      Parity acc = Parity::Even;
      for (const Term& c : t.children()) acc += a_parity_fast(c, gen);
      return acc;
    }
  }
}

} // namespace detail

/// The g-parity of a term over any registry, for invertible g.
inline Parity a_parity(const Term& t, int gen) {
  if (!t.registry()->invertible(gen))
    throw NotInvertibleError(t.registry()->name(gen));
  return detail::a_parity_fast(t, gen);
}
inline Parity a_parity(const Term& t, const std::string& gen) {
  return a_parity(t, t.registry()->index_of(gen));
}

/// Reference path for g-parity: project onto g, evaluate in the super
/// integers, read off the sign. Tests pin this against a_parity pointwise.
inline Parity a_parity_reference(const Term& t, int gen) {
  if (!t.registry()->invertible(gen))
    throw NotInvertibleError(t.registry()->name(gen));
  return parity(project_term(t, gen));
}
inline Parity a_parity_reference(const Term& t, const std::string& gen) {
  return a_parity_reference(t, t.registry()->index_of(gen));
}

class UnassignedGeneratorError : public Error {
public:
  explicit UnassignedGeneratorError(const std::string& name)
      : Error("model assigns no carrier to generator: " + name) {}
};

/// An interpretation of the term language in a user permutative category:
/// one carrier object per generator, an invertible-pair assignment for the
/// invertible ones, and handlers for the structural operations. Handlers are
/// trusted to satisfy the permutative axioms and, where `thread_safe` is
/// declared false, are only ever invoked from one thread at a time.
template <typename M>
concept PermutativeModel = requires(const M& m, const typename M::Object& x,
                                    const typename M::Morphism& f, int gen) {
  { m.unit() } -> std::convertible_to<typename M::Object>;
  { m.carrier(gen) } -> std::convertible_to<typename M::Object>;
  { m.inverse_carrier(gen) } -> std::convertible_to<typename M::Object>;
  { m.sum_objects(x, x) } -> std::convertible_to<typename M::Object>;
  { m.identity(x) } -> std::convertible_to<typename M::Morphism>;
  { m.braiding(x, x) } -> std::convertible_to<typename M::Morphism>;
  { m.unit_morphism(gen) } -> std::convertible_to<typename M::Morphism>;
  { m.counit_morphism(gen) } -> std::convertible_to<typename M::Morphism>;
  { m.sum(f, f) } -> std::convertible_to<typename M::Morphism>;
  { m.compose_after(f, f) } -> std::convertible_to<typename M::Morphism>;
  { m.invert(f) } -> std::convertible_to<typename M::Morphism>;
  { M::thread_safe } -> std::convertible_to<bool>;
};

template <PermutativeModel M>
typename M::Object interpret_object(const Word& w, const M& m) {
  typename M::Object acc = m.unit();
  for (const Letter& l : w.letters())
    acc = m.sum_objects(acc, l.primed ? m.inverse_carrier(l.gen) : m.carrier(l.gen));
  return acc;
}

/// Structural evaluation of a well-typed term through a model's handlers.
/// compose_after(g, f) means f applies first.
template <PermutativeModel M>
typename M::Morphism interpret(const Term& t, const M& m) {
  switch (t.kind()) {
    case TermKind::Id: return m.identity(interpret_object(t.id_word(), m));
    case TermKind::Beta:
      return m.braiding(interpret_object(t.beta_left(), m),
                        interpret_object(t.beta_right(), m));
    case TermKind::Eta: return m.unit_morphism(t.generator());
    case TermKind::Eps: return m.counit_morphism(t.generator());
    case TermKind::Inv: return m.invert(interpret(t.children().front(), m));
    case TermKind::Sum: {
      typename M::Morphism acc = interpret(t.children().front(), m);
      for (size_t i = 1; i < t.children().size(); ++i)
        acc = m.sum(acc, interpret(t.children()[i], m));
      return acc;
    }
    case TermKind::Comp: {
      typename M::Morphism acc = interpret(t.children().front(), m);
      for (size_t i = 1; i < t.children().size(); ++i)
        acc = m.compose_after(interpret(t.children()[i], m), acc);
      return acc;
    }
  }
  throw Error("unreachable");
}

} // namespace permcoh

#endif
