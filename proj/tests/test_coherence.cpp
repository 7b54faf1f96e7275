#include <catch2/catch_amalgamated.hpp>

#include "example_terms.hpp"
#include "permcoh/coherence.hpp"
#include "permcoh/macros.hpp"
#include "permcoh/oracle.hpp"

using namespace permcoh;
using namespace permcoh::examples;

namespace {
RegistryPtr reg_a() { return make_registry({{"a", true}}); }
Word w(const RegistryPtr& r, const std::string& s) { return Word::parse(r, s); }
}

TEST_CASE("the three unit automorphisms are equal") {
  auto reg = reg_a();
  CHECK(check_equal(figure_eight(reg, "a"), figure_c(reg, "a")).equal());
  CHECK(check_equal(figure_eight(reg, "a"), figure_h(reg, "a")).equal());
  CHECK(check_equal(figure_c(reg, "a"), figure_h(reg, "a")).equal());
}

TEST_CASE("the figure eight is 2-torsion but not trivial") {
  auto reg = reg_a();
  Term e8 = figure_eight(reg, "a");
  CHECK(is_identity(Term::comp({e8, e8})));
  CHECK(!is_identity(e8));
  CHECK(!is_identity(Term::beta(w(reg, "a"), w(reg, "a'"))));
}

TEST_CASE("beta on a cancelling block is an identity; the flipped one is not parallel") {
  auto reg = reg_a();
  Word aap = w(reg, "a a'");
  Verdict same = check_equal(Term::beta(aap, aap), Term::id(w(reg, "a a' a a'")));
  CHECK(same.equal());

  Verdict flipped = check_equal(Term::beta(w(reg, "a a"), w(reg, "a' a'")),
                                Term::id(w(reg, "a a a' a'")));
  CHECK(flipped.status == Verdict::Status::NotParallel);
  REQUIRE(flipped.boundary.has_value());
  CHECK(flipped.boundary->lhs_tgt == w(reg, "a' a' a a"));
  CHECK(flipped.boundary->rhs_tgt == w(reg, "a a a' a'"));
}

TEST_CASE("triangle identities for the canonical pair") {
  auto reg = reg_a();
  Word a = w(reg, "a"), ap = w(reg, "a'");
  Term tri1 = Term::comp({Term::sum({Term::id(a), Term::eta(reg, "a")}),
                          Term::sum({Term::eps(reg, "a"), Term::id(a)})});
  CHECK(check_equal(tri1, Term::id(a)).equal());

  Term tri2 = Term::comp({Term::sum({Term::eta(reg, "a"), Term::id(ap)}),
                          Term::sum({Term::id(ap), Term::eps(reg, "a")})});
  CHECK(check_equal(tri2, Term::id(ap)).equal());
}

TEST_CASE("beta_{a,a} and beta_{a',a'} factor through the figure eight") {
  auto reg = reg_a();
  Word a = w(reg, "a"), ap = w(reg, "a'");
  CHECK(check_equal(Term::beta(a, a),
                    Term::sum({figure_eight(reg, "a"), Term::id(w(reg, "a a"))}))
            .equal());
  CHECK(check_equal(Term::beta(ap, ap),
                    Term::sum({figure_eight(reg, "a"), Term::id(w(reg, "a' a'"))}))
            .equal());
}

TEST_CASE("the iterated figure eight is the iterated sum") {
  auto reg = reg_a();
  for (int k = 0; k <= 4; ++k) {
    Term lhs = figure_eight_iter(reg, 0, k);
    Term rhs = n_dot_mor(k, figure_eight(reg, "a"));
    CHECK(check_equal(lhs, rhs).equal());
  }
}

TEST_CASE("the two cyclic block symmetries agree") {
  auto reg = reg_a();
  Term lhs = Term::beta(w(reg, "a a' a"), w(reg, "a'"));
  Term rhs = Term::beta(w(reg, "a"), w(reg, "a' a a'"));
  CHECK(check_equal(lhs, rhs).equal());
}

TEST_CASE("weak inverses fail the triangle: the braided counit differs from eps") {
  auto reg = reg_a();
  Term xi = Term::comp({Term::beta(w(reg, "a"), w(reg, "a'")), Term::inv(Term::eta(reg, "a"))});
  Verdict v = check_equal(xi, Term::eps(reg, "a"));
  CHECK(v.status == Verdict::Status::Differs);
  REQUIRE(v.witnesses.size() == 1);
  CHECK(v.witnesses[0].generator == "a");
  CHECK(v.witnesses[0].kind == Verdict::Witness::Kind::Parity);
  CHECK(v.witnesses[0].lhs == "odd");
  CHECK(v.witnesses[0].rhs == "even");
}

TEST_CASE("even permutations act trivially on invertible powers") {
  auto reg = reg_a();
  for (int n = 2; n <= 4; ++n) {
    Word word = n_dot(n, w(reg, "a"));
    std::vector<int> images(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<size_t>(i)] = i;
    do {
      Permutation sigma = Permutation::from_zero_based(images);
      Term t = permutation_term(sigma, word);
      CHECK(is_identity(t) == sigma.even());
    } while (std::next_permutation(images.begin(), images.end()));
  }
}

TEST_CASE("Eckmann-Hilton collapse on unit endomorphisms") {
  auto reg = reg_a();
  Term e8 = figure_eight(reg, "a");
  Term idu = Term::id(Word::empty(reg));
  Term ee = Term::comp({Term::eta(reg, "a"), Term::inv(Term::eta(reg, "a"))});
  std::vector<Term> endos{e8, idu, ee, Term::sum({e8, e8})};
  for (const Term& u : endos) {
    for (const Term& v : endos) {
      Term uv = Term::comp({u, v});
      Term vu = Term::comp({v, u});
      Term su = Term::sum({u, v});
      CHECK(check_equal(uv, vu).equal());
      CHECK(check_equal(uv, su).equal());
    }
  }
}

TEST_CASE("the two-generator symmetry square commutes") {
  auto reg = make_registry({{"a", false}, {"b", false}});
  auto square = mult2_square(reg);
  Verdict v = check_equal(square.top_right, square.left_bottom);
  CHECK(v.equal());

  DiagramReport rep = verify_diagram({{"top", square.top_right}, {"bottom", square.left_bottom}});
  CHECK(rep.commutes);
  REQUIRE(rep.pairs.size() == 1);
  CHECK(rep.pairs[0].verdict.equal());
}

TEST_CASE("additivity of the figure eight over two invertible generators") {
  auto reg = make_registry({{"a", true}, {"b", true}});
  auto add = additivity_terms(reg);
  CHECK(check_equal(add.zeta_upper, add.zeta_lower).equal());
  CHECK(check_equal(add.theta_upper, add.theta_lower).equal());
  CHECK(check_equal(add.eight_ab, add.eight_sum).equal());

  DiagramReport zeta = verify_diagram({{"upper", add.zeta_upper}, {"lower", add.zeta_lower}});
  CHECK(zeta.commutes);
}

TEST_CASE("conjugation: two monoidal diagrams commute, the third fails on parity") {
  auto reg = make_registry({{"z", false}, {"w", false}, {"a", true}});
  auto conj = conjugation_terms(reg);
  CHECK(check_equal(conj.symmetry_top, conj.symmetry_bottom).equal());
  CHECK(check_equal(conj.unit_top, conj.unit_bottom).equal());

  Verdict v = check_equal(conj.noncommuting_top, conj.noncommuting_bottom);
  CHECK(v.status == Verdict::Status::Differs);
  REQUIRE(v.witnesses.size() == 1);
  CHECK(v.witnesses[0].generator == "a");
  CHECK(v.witnesses[0].kind == Verdict::Witness::Kind::Parity);
  CHECK(v.witnesses[0].lhs == "odd");
  CHECK(v.witnesses[0].rhs == "even");
}

TEST_CASE("canonical constraint associativity instances reduce to the triangles") {
  auto reg = reg_a();
  Word a = w(reg, "a"), ap = w(reg, "a'");
  // (1,-1,1): both routes a + a' + a -> a
  Term left1 = Term::comp({Term::sum({chi_tilde_constraint(1, -1, reg, 0), Term::id(a)}),
                           chi_tilde_constraint(0, 1, reg, 0)});
  Term right1 = Term::comp({Term::sum({Term::id(a), chi_tilde_constraint(-1, 1, reg, 0)}),
                            chi_tilde_constraint(1, 0, reg, 0)});
  CHECK(check_equal(left1, right1).equal());

  // (-1,1,-1): both routes a' + a + a' -> a'
  Term left2 = Term::comp({Term::sum({chi_tilde_constraint(-1, 1, reg, 0), Term::id(ap)}),
                           chi_tilde_constraint(0, -1, reg, 0)});
  Term right2 = Term::comp({Term::sum({Term::id(ap), chi_tilde_constraint(1, -1, reg, 0)}),
                            chi_tilde_constraint(-1, 0, reg, 0)});
  CHECK(check_equal(left2, right2).equal());

  // and each route equals the matching triangle composite collapsed to id
  Term tri1 = Term::comp({Term::sum({Term::id(a), Term::eta(reg, "a")}), left1});
  CHECK(check_equal(tri1, Term::id(a)).equal());
}

TEST_CASE("check_equal is an equivalence and a congruence on a small hom-set") {
  auto reg = reg_a();
  auto terms = enumerate_parallel_terms(w(reg, "a a'"), Word::empty(reg), 4);
  REQUIRE(terms.size() >= 2);
  Term fixed = Term::id(w(reg, "a"));
  Term post = figure_eight(reg, "a"); // a unit endo to compose after
  for (size_t i = 0; i < terms.size(); i += 3) {
    CHECK(check_equal(terms[i], terms[i]).equal());
    for (size_t j = 0; j < terms.size(); j += 5) {
      bool eq = check_equal(terms[i], terms[j]).equal();
      CHECK(eq == check_equal(terms[j], terms[i]).equal());
      if (!eq) continue;
      CHECK(check_equal(Term::sum({terms[i], fixed}), Term::sum({terms[j], fixed})).equal());
      CHECK(check_equal(Term::comp({terms[i], post}), Term::comp({terms[j], post})).equal());
      CHECK(check_equal(Term::inv(terms[i]), Term::inv(terms[j])).equal());
    }
  }
}

TEST_CASE("verify_diagram needs two paths and tolerates mismatched boundaries") {
  auto reg = reg_a();
  Term e8 = figure_eight(reg, "a");
  CHECK_THROWS_AS(verify_diagram({{"only", e8}}), Error);

  DiagramReport rep = verify_diagram({{"p", e8}, {"q", e8}, {"r", Term::eps(reg, "a")}});
  CHECK(!rep.commutes);
  REQUIRE(rep.pairs.size() == 3);
  CHECK(rep.pairs[0].verdict.equal());
  CHECK(rep.pairs[1].verdict.status == Verdict::Status::NotParallel);
  CHECK(rep.pairs[2].verdict.status == Verdict::Status::NotParallel);
}

TEST_CASE("check_equal propagates type errors and registry mismatches") {
  auto reg = reg_a();
  Term bad = Term::comp({Term::eta(reg, "a"), Term::eps(reg, "a")});
  CHECK_THROWS_AS(check_equal(bad, bad), TypeCheckError);
  auto other = make_registry({{"b", true}});
  CHECK_THROWS_AS(check_equal(Term::id(Word::empty(reg)), Term::id(Word::empty(other))),
                  RegistryMismatchError);
}

TEST_CASE("the companion of the identity is the identity") {
  auto reg = reg_a();
  Term d = dagger(Term::id(w(reg, "a")), 0, 0);
  CHECK(check_equal(d, Term::id(w(reg, "a'"))).equal());
}

TEST_CASE("the companion of a braid-free isomorphism has even parity") {
  auto reg = reg_a();
  Word a = w(reg, "a");
  Term f = Term::comp({Term::sum({Term::id(a), Term::eta(reg, "a")}),
                       Term::sum({Term::eps(reg, "a"), Term::id(a)})});
  Term d = dagger(f, 0, 0);
  CHECK(a_parity(d, 0) == Parity::Even);
  CHECK(check_equal(d, Term::id(w(reg, "a'"))).equal());
}
