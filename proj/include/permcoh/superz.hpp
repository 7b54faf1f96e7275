#ifndef PERMCOH_SUPERZ_HPP
#define PERMCOH_SUPERZ_HPP

#include <string>

#include "permcoh/registry.hpp"

namespace permcoh {

/// An element of the order-two group written additively: even is the unit.
enum class Parity { Even, Odd };

inline Parity operator+(Parity a, Parity b) {
  return a == b ? Parity::Even : Parity::Odd;
}
inline Parity& operator+=(Parity& a, Parity b) { return a = a + b; }

inline std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

inline Parity parity_of_sign(int sign) { return sign == 1 ? Parity::Even : Parity::Odd; }
inline int sign_of_parity(Parity p) { return p == Parity::Even ? 1 : -1; }

/// An automorphism in the skeletal category of super integers: an object k
/// (an integer) together with a sign. Composition multiplies signs on a
/// fixed object; the monoidal sum adds objects and multiplies signs; the
/// symmetry between k and j carries the graded sign (-1)^{kj}.
struct SuperMorphism {
  int object = 0;
  int sign = 1;

  friend bool operator==(const SuperMorphism&, const SuperMorphism&) = default;

  std::string str() const {
    return "(" + std::to_string(object) + ", " + (sign == 1 ? "+1" : "-1") + ")";
  }
};

inline SuperMorphism super_identity(int k) { return {k, 1}; }

inline SuperMorphism super_sum(const SuperMorphism& f, const SuperMorphism& g) {
  return {f.object + g.object, f.sign * g.sign};
}

inline SuperMorphism super_compose(const SuperMorphism& second, const SuperMorphism& first) {
  if (second.object != first.object)
    throw Error("super integer morphisms compose only on equal objects");
  return {first.object, first.sign * second.sign};
}

/// The graded sign rule: beta_{k,j} = ((-1)^{kj})_{k+j}.
inline SuperMorphism super_braiding(int k, int j) {
  bool odd = (k % 2 != 0) && (j % 2 != 0);
  return {k + j, odd ? -1 : 1};
}

} // namespace permcoh

#endif
