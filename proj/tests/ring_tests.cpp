#include <doctest.h>

#include "polyarea/io.hpp"
#include "polyarea/ring.hpp"
#include "support/oracles.hpp"

using namespace polyarea;

namespace {
Poly L(const std::string& s, int vars = 0) { return parse_poly(s, Mode::laurent, vars); }
Poly P(const std::string& s, int vars = 0) { return parse_poly(s, Mode::polynomial, vars); }
}  // namespace

TEST_CASE("canonicalization merges, cancels and rejects bad exponents") {
  auto merged = Poly::from_terms(Mode::polynomial, 1, {{1, ExpVec({1})}, {1, ExpVec({1})}});
  CHECK(merged == P("2*x1"));

  auto cancelled = Poly::from_terms(Mode::polynomial, 1, {{1, ExpVec({0})}, {-1, ExpVec({0})}});
  CHECK(cancelled.is_zero());

  auto laurent = Poly::from_terms(Mode::laurent, 2, {{2, ExpVec({1, -1})}, {3, ExpVec({0, 0})}});
  CHECK(laurent == L("2*x1*x2^-1 + 3", 2));
  CHECK(laurent.term_count() == 2);

  CHECK_THROWS_AS(Poly::from_terms(Mode::polynomial, 1, {{1, ExpVec({-1})}}),
                  NegativeExponentError);
}

TEST_CASE("ring arithmetic identities") {
  CHECK(P("x1 + 1") * P("x1 - 1") == P("x1^2 - 1"));
  auto g = L("2*x1^3 - x1^-1 + 5");
  CHECK((g + (-g)).is_zero());
  CHECK(P("x1 - 1").as_laurent().monomial_mul(1, ExpVec({-1})) == L("1 - x1^-1"));
}

TEST_CASE("norm and degree") {
  auto g = L("2*x1 - 3*x2^-1", 2);
  CHECK(g.norm() == 5);
  CHECK(g.degree() == 1);

  CHECK(L("2*x1^3*x2^-1", 2).degree() == 4);

  Poly zero(Mode::laurent, 2);
  CHECK(zero.norm() == 0);
  CHECK(zero.degree() == std::nullopt);
  CHECK(zero.degree() < std::optional<std::int64_t>(-100));  // sentinel below all integers
}

TEST_CASE("support geometry") {
  auto s = P("x1^2 - 1").support();
  REQUIRE(s.size() == 2);
  CHECK(diameter(s) == 2);
  CHECK(diameter(P("x1^5").support()) == 0);
  CHECK(support_distance(P("x1^5").support(), s) == 3);

  auto f = L("x1^2 + x1^-1");
  CHECK(diameter(f.support()) == 3);
  CHECK(diameter(f.support()) <= 2 * *f.degree());

  CHECK_THROWS_AS(diameter({}), EmptySupportError);
  CHECK_THROWS_AS(support_distance({}, s), EmptySupportError);
}

TEST_CASE("laurent-to-polynomial lift") {
  CHECK(lift_to_polynomial(L("x1^-2 + x1")) == P("x2^2 + x1", 2));
  CHECK(lift_to_polynomial(L("x1 - 1")) == P("x1 - 1", 2));
  CHECK(lift_to_polynomial(Poly(Mode::laurent, 1)).is_zero());
  CHECK_THROWS_AS(lift_to_polynomial(P("x1")), ModeMismatchError);

  // Folding back is a left inverse.
  auto g = L("3*x1^2*x2^-3 - x2 + 7", 2);
  CHECK(laurent_from_lifted(lift_to_polynomial(g), 2) == g);
}

TEST_CASE("norm and degree bounds on random instances") {
  oracles::Rng rng(20260811);
  for (int iter = 0; iter < 200; ++iter) {
    const Mode mode = iter % 2 == 0 ? Mode::polynomial : Mode::laurent;
    const int k = 1 + static_cast<int>(iter % 2);
    auto g = rng.poly(mode, k, 4, 3, 5);
    auto h = rng.poly(mode, k, 4, 3, 5);

    CHECK((g + h).norm() <= g.norm() + h.norm());
    CHECK((g * h).norm() <= g.norm() * h.norm());
    if (!g.is_zero() && !h.is_zero()) {
      CHECK(*(g * h).degree() <= *g.degree() + *h.degree());
      CHECK(diameter(g.support()) <= 2 * *g.degree());
    }
  }
}

TEST_CASE("degree of a product is additive in one polynomial variable") {
  oracles::Rng rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    auto g = rng.poly(Mode::polynomial, 1, 3, 4, 4, false);
    auto h = rng.poly(Mode::polynomial, 1, 3, 4, 4, false);
    CHECK(*(g * h).degree() == *g.degree() + *h.degree());
  }
}

TEST_CASE("canonical form is a fixed point and +,* are commutative/associative") {
  oracles::Rng rng(99);
  for (int iter = 0; iter < 100; ++iter) {
    const int k = 1 + static_cast<int>(iter % 2);
    auto g = rng.poly(Mode::laurent, k, 4, 2, 3);
    auto h = rng.poly(Mode::laurent, k, 4, 2, 3);
    auto w = rng.poly(Mode::laurent, k, 4, 2, 3);

    std::vector<std::pair<Int, ExpVec>> raw;
    for (const auto& [d, c] : g.terms()) raw.emplace_back(c, d);
    CHECK(Poly::from_terms(Mode::laurent, k, raw) == g);

    CHECK(g + h == h + g);
    CHECK(g * h == h * g);
    CHECK((g + h) + w == g + (h + w));
    CHECK((g * h) * w == g * (h * w));
    CHECK(g * (h + w) == g * h + g * w);
  }
}

TEST_CASE("monomial multiplication shifts the support and keeps norms") {
  oracles::Rng rng(1234);
  for (int iter = 0; iter < 100; ++iter) {
    auto g = rng.poly(Mode::laurent, 2, 4, 3, 4, false);
    ExpVec d({rng.uniform(-3, 3), rng.uniform(-3, 3)});
    const int sign = rng.uniform(0, 1) == 0 ? 1 : -1;
    auto shifted = g.monomial_mul(sign, d);

    CHECK(shifted.norm() == g.norm());
    CHECK(diameter(shifted.support()) == diameter(g.support()));
    auto s = g.support();
    auto t = shifted.support();
    REQUIRE(s.size() == t.size());
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] + d == t[i]);
  }
}
