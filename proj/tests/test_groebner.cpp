#include <doctest.h>

#include "support.hpp"
#include "weyl/commutative.hpp"
#include "weyl/error.hpp"
#include "weyl/groebner.hpp"

using namespace weyl;
using namespace weyl::testing;

namespace {

std::vector<WeylElement> gens(std::initializer_list<const char*> texts, std::size_t n) {
  std::vector<WeylElement> out;
  for (const char* t : texts) out.push_back(E(t, n));
  return out;
}

// Random generator sets small enough that Weyl completion stays cheap.
std::vector<WeylElement> random_generators(Random& rng, std::size_t n) {
  std::vector<WeylElement> F;
  for (int j = rng.uniform(1, 2); j > 0; --j) F.push_back(rng.element(n, 2, 2));
  return F;
}

}  // namespace

TEST_CASE("s_pair examples") {
  const auto lex = OrderingSpec::lex();
  CHECK(s_pair(E("x1", 1), E("d1", 1), lex) == E("1", 1));
  const WeylElement u = E("x1*d1^2 - 3*x1 + d1", 1);
  CHECK(s_pair(u, u, lex).is_zero());
  const WeylElement s = s_pair(E("x1^2", 2), E("x1*x2", 2), lex);
  CHECK(s.is_zero());
  // Commutative S-polynomial of X1^2, X1 X2 is X2 X1^2 - X1 X1 X2 = 0 as well.
  const CommutativePolynomial cs =
      phi(E("x2", 2)) * phi(E("x1^2", 2)) - phi(E("x1", 2)) * phi(E("x1*x2", 2));
  CHECK(phi(s) == cs);
  CHECK_THROWS_AS(s_pair(WeylElement(1), E("x1", 1), lex), WeylError);
}

TEST_CASE("leading terms cancel in s_pair") {
  Random rng(41);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    const OrderingSpec ord = rng.ordering(n);
    const WeylElement u = rng.element(n, 3);
    const WeylElement v = rng.element(n, 3);
    const WeylElement s = s_pair(u, v, ord);
    const auto m = monomial_lcm(leading(u, ord).monomial, leading(v, ord).monomial);
    if (!s.is_zero()) CHECK(compare(ord, leading(s, ord).monomial, m) < 0);
  }
}

TEST_CASE("buchberger examples") {
  const auto lex = OrderingSpec::lex();
  CHECK(buchberger(gens({"x1", "d1"}, 1), lex).elements == gens({"1"}, 1));
  for (const auto& ord : {OrderingSpec::lex(), OrderingSpec::graded_lex(),
                          OrderingSpec::weight({0, 1})}) {
    CHECK(buchberger(gens({"d1"}, 1), ord).elements == gens({"d1"}, 1));
    CHECK(buchberger(gens({"3*d1"}, 1), ord).elements == gens({"d1"}, 1));
  }
  // Reduced bases frozen from an external commutative engine (sympy), valid
  // for the Weyl engine because only xi variables occur.
  CHECK(buchberger(gens({"x1^2 - x2", "x1*x2 - 1"}, 2), lex).elements ==
        gens({"x1 - x2^2", "x2^3 - 1"}, 2));
  CHECK(buchberger(gens({"x1^2 - x2", "x1*x2 - 1"}, 2), OrderingSpec::graded_lex()).elements ==
        gens({"x1^2 - x2", "x1*x2 - 1", "x2^2 - x1"}, 2));
  CHECK(buchberger(gens({"0"}, 1), lex).elements.empty());
}

TEST_CASE("weyl-specific bases") {
  const auto grlex = OrderingSpec::graded_lex();
  // x d - 1 and d: 1 = x*d - (x d - 1) lies in the ideal.
  CHECK(buchberger(gens({"x1*d1 - 1", "d1"}, 1), grlex).elements == gens({"1"}, 1));
  // The annihilator of exp(x): W(d - 1) is principal.
  CHECK(buchberger(gens({"d1 - 1", "x1*d1 - x1"}, 1), grlex).elements == gens({"d1 - 1"}, 1));
}

TEST_CASE("coprime leading monomials do not imply a zero S-pair remainder") {
  // Buchberger's coprime criterion is unsound in W: x1 and d1 are coprime
  // but their S-pair is 1.
  const auto F = gens({"x1", "d1"}, 1);
  const auto lex = OrderingSpec::lex();
  CHECK(coprime(leading(F[0], lex).monomial, leading(F[1], lex).monomial));
  CHECK_FALSE(normal_form(s_pair(F[0], F[1], lex), F, lex).is_zero());
}

TEST_CASE("reduce_basis") {
  const auto lex = OrderingSpec::lex();
  GroebnerBasis b{gens({"1", "x1"}, 1), lex, gens({"1", "x1"}, 1), {}};
  CHECK(reduce_basis(b).elements == gens({"1"}, 1));
  GroebnerBasis dup{gens({"d1", "2*d1"}, 1), lex, gens({"d1", "2*d1"}, 1), {}};
  CHECK(reduce_basis(dup).elements == gens({"d1"}, 1));

  Random rng(43);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
    const OrderingSpec ord = rng.ordering(n);
    const GroebnerBasis gb = buchberger(random_generators(rng, n), ord, {false, true});
    const GroebnerBasis once = reduce_basis(gb);
    const GroebnerBasis twice = reduce_basis(once);
    CHECK(once.elements == twice.elements);
    for (std::size_t i = 0; i < once.elements.size(); ++i) {
      const LeadingData head = leading(once.elements[i], ord);
      CHECK(head.coefficient == 1);
      if (i > 0) CHECK(compare(ord, leading(once.elements[i - 1], ord).monomial, head.monomial) > 0);
      for (std::size_t j = 0; j < once.elements.size(); ++j) {
        if (i == j) continue;
        for (const auto& [m, c] : once.elements[j].terms()) {
          CHECK_FALSE(monomial_divides(head.monomial, m));
        }
      }
    }
    // Same ideal: each reduced element lies in the unreduced ideal and back.
    for (const auto& e : once.elements) CHECK(normal_form(e, gb.elements, ord).is_zero());
    for (const auto& e : gb.elements) CHECK(normal_form(e, once.elements, ord).is_zero());
  }
}

TEST_CASE("is_groebner") {
  const auto lex = OrderingSpec::lex();
  CHECK(is_groebner(gens({"d1"}, 1), lex));
  CHECK_FALSE(is_groebner(gens({"x1", "d1"}, 1), lex));
  CHECK(is_groebner(std::vector<WeylElement>{}, lex));
  Random rng(44);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
    const OrderingSpec ord = rng.ordering(n);
    const auto F = random_generators(rng, n);
    CHECK(is_groebner(buchberger(F, ord).elements, ord));
    CHECK(is_groebner(buchberger(F, ord, {false, false}).elements, ord));
  }
}

TEST_CASE("restriction_stable examples") {
  const auto lex = OrderingSpec::lex();
  const auto B1 = gens({"d1"}, 1);
  CHECK(restriction_stable(B1, lex, OrderingSpec::weight({0, 1})));
  CHECK(is_groebner(B1, OrderingSpec::weight({0, 1})));
  const auto B2 = gens({"x1 + d1"}, 1);
  CHECK_FALSE(restriction_stable(B2, lex, OrderingSpec::weight({0, 1})));
  CHECK(restriction_stable(B2, lex, OrderingSpec::weight({2, 1})));
  CHECK(is_groebner(B2, lex));
  CHECK(is_groebner(B2, OrderingSpec::weight({2, 1})));
}

TEST_CASE("ideal_member") {
  const auto lex = OrderingSpec::lex();
  CHECK(ideal_member(E("x1*d1 + 1", 1), buchberger(gens({"x1", "d1"}, 1), lex)));
  CHECK_FALSE(ideal_member(E("1", 1), buchberger(gens({"d1"}, 1), lex)));
  CHECK(ideal_member(WeylElement(1), buchberger(gens({"d1"}, 1), lex)));
  CHECK(ideal_member(WeylElement(2), buchberger(gens({"x1^2 - x2"}, 2), lex)));
  CHECK(ideal_member(E("x1^3 - x1*x2", 2), buchberger(gens({"x1^2 - x2"}, 2), lex)));
}

TEST_CASE("cofactors reconstruct every basis element") {
  Random rng(45);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
    const OrderingSpec ord = rng.ordering(n);
    const auto F = random_generators(rng, n);
    for (bool reduce : {false, true}) {
      const GroebnerBasis gb = buchberger(F, ord, {reduce, true});
      REQUIRE(gb.cofactors.size() == gb.elements.size());
      for (std::size_t e = 0; e < gb.elements.size(); ++e) {
        WeylElement sum(n);
        for (std::size_t g = 0; g < F.size(); ++g) sum += gb.cofactors[e][g] * F[g];
        CHECK(sum == gb.elements[e]);
      }
    }
  }
}

TEST_CASE("leading monomials of ideal elements are divisible by basis leading monomials") {
  // Definitional check of the S-pair criterion: LT(L) = <LT(b)>.
  Random rng(46);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
    const OrderingSpec ord = rng.ordering(n);
    const auto F = random_generators(rng, n);
    const GroebnerBasis gb = buchberger(F, ord);
    for (int t = 0; t < 10; ++t) {
      WeylElement w(n);
      for (const auto& g : F) w += rng.element(n, 2, 2) * g;
      if (w.is_zero()) continue;
      const auto lt = leading(w, ord).monomial;
      const bool divisible = std::any_of(gb.elements.begin(), gb.elements.end(), [&](const auto& b) {
        return monomial_divides(leading(b, ord).monomial, lt);
      });
      CHECK(divisible);
      CHECK(ideal_member(w, gb));
    }
  }
}

TEST_CASE("Gröbner bases transfer between orderings agreeing on the support") {
  Random rng(47);
  int transfers = 0;
  for (int k = 0; k < 300 && transfers < 40; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
    const OrderingSpec ord1 = rng.ordering(n);
    const OrderingSpec ord2 = rng.ordering(n);
    const auto B = buchberger(random_generators(rng, n), ord1).elements;
    if (!restriction_stable(B, ord1, ord2)) continue;
    ++transfers;
    CHECK(is_groebner(B, ord2));
  }
  CHECK(transfers > 0);
}

TEST_CASE("adding ideal elements to a Gröbner basis keeps it one") {
  Random rng(48);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 2));
    const OrderingSpec ord = rng.ordering(n);
    const auto F = random_generators(rng, n);
    auto B = buchberger(F, ord).elements;
    for (int t = rng.uniform(1, 2); t > 0; --t) {
      WeylElement w(n);
      for (const auto& g : F) w += rng.element(n, 1, 2) * g;
      if (!w.is_zero()) B.push_back(w);
    }
    CHECK(is_groebner(B, ord));
  }
}
