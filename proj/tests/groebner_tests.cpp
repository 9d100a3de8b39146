#include <doctest.h>

#include "polyarea/groebner.hpp"
#include "polyarea/io.hpp"
#include "support/oracles.hpp"

using namespace polyarea;

namespace {

Poly L(const std::string& s, int vars = 0) { return parse_poly(s, Mode::laurent, vars); }
Poly P(const std::string& s, int vars = 0) { return parse_poly(s, Mode::polynomial, vars); }

Ideal ideal(std::vector<Poly> gens) { return Ideal::make(std::move(gens)); }

// input == sum cofactor_j * element_j + remainder, exactly.
void check_division_identity(const Poly& input, const GroebnerBasis& B,
                             const NormalFormResult& nf) {
  Poly lifted = input.mode() == Mode::laurent ? lift_to_polynomial(input) : input;
  Poly rebuilt = nf.remainder;
  for (std::size_t j = 0; j < B.elements.size(); ++j) rebuilt += nf.cofactors[j] * B.elements[j];
  CHECK(rebuilt == lifted);
}

}  // namespace

TEST_CASE("s- and gcd-polynomials") {
  MonomialOrder order;
  CHECK(s_polynomial(P("2*x1", 2), P("3*x2", 2), order).is_zero());
  auto f = P("2*x1^2 + x1", 2);
  CHECK(s_polynomial(f, f, order).is_zero());
  CHECK(gcd_polynomial(P("2*x1"), P("3*x1"), order) == P("x1"));
  CHECK_THROWS_AS(s_polynomial(Poly(Mode::polynomial, 1), P("x1"), order), ZeroInputError);
  CHECK_THROWS_AS(gcd_polynomial(P("x1"), Poly(Mode::polynomial, 1), order), ZeroInputError);
}

TEST_CASE("buchberger on small inputs") {
  auto single = buchberger_z(ideal({P("x1")}));
  REQUIRE(single.elements.size() == 1);
  CHECK(single.elements[0] == P("x1"));

  auto two = buchberger_z(ideal({P("2"), P("x1")}));
  REQUIRE(two.elements.size() == 2);
  CHECK(two.elements[0] == P("2"));
  CHECK(two.elements[1] == P("x1"));

  // {x-1, x+1} generates the same ideal as {2, x-1}: mutual normal forms
  // vanish in both directions.
  auto pm = buchberger_z(ideal({P("x1 - 1"), P("x1 + 1")}));
  auto ref = buchberger_z(ideal({P("2"), P("x1 - 1")}));
  for (const auto& e : pm.elements) CHECK(normal_form(e, ref).remainder.is_zero());
  for (const auto& e : ref.elements) CHECK(normal_form(e, pm).remainder.is_zero());
}

TEST_CASE("basis invariants: critical pairs reduce to zero, provenance is exact") {
  oracles::Rng rng(42);
  std::vector<Ideal> ideals = {
      ideal({P("x1 - 1"), P("x1 + 1")}),
      ideal({P("2*x1", 2), P("3*x2", 2)}),
      ideal({P("2*x1^2 - x2", 2), P("x1*x2 + 3", 2), P("2", 2)}),
      ideal({L("x1 - 1")}),
  };
  for (int iter = 0; iter < 8; ++iter) {
    std::vector<Poly> gens;
    const int k = 1 + (iter % 2);
    const int s = 1 + static_cast<int>(rng.uniform(0, 2));
    for (int i = 0; i < s; ++i) {
      auto f = rng.poly(iter % 3 == 0 ? Mode::laurent : Mode::polynomial, k, 3, 2, 3, false);
      if (!f.is_zero()) gens.push_back(f);
    }
    if (!gens.empty()) ideals.push_back(ideal(std::move(gens)));
  }

  for (const auto& I : ideals) {
    auto B = buchberger_z(I);
    MonomialOrder order = B.order;
    for (std::size_t i = 0; i < B.elements.size(); ++i) {
      // provenance row reproduces the element from the source generators
      Poly rebuilt(Mode::polynomial, B.ambient_vars);
      for (std::size_t t = 0; t < B.source.size(); ++t)
        rebuilt += B.provenance[i][t] * B.source[t];
      CHECK(rebuilt == B.elements[i]);

      for (std::size_t j = 0; j < i; ++j) {
        auto sp = s_polynomial(B.elements[i], B.elements[j], order);
        if (!sp.is_zero()) CHECK(normal_form(sp, B).remainder.is_zero());
        auto gp = gcd_polynomial(B.elements[i], B.elements[j], order);
        if (!gp.is_zero()) CHECK(normal_form(gp, B).remainder.is_zero());
      }
    }
  }
}

TEST_CASE("normal forms") {
  auto B1 = buchberger_z(ideal({P("x1 - 1")}));
  auto nf1 = normal_form(P("x1^2 - 1"), B1);
  CHECK(nf1.remainder.is_zero());
  REQUIRE(nf1.cofactors.size() == 1);
  CHECK(nf1.cofactors[0] == P("x1 + 1"));

  auto B2 = buchberger_z(ideal({P("2"), P("x1")}));
  auto nf2 = normal_form(P("3"), B2);
  CHECK(nf2.remainder == P("1"));
  check_division_identity(P("3"), B2, nf2);

  auto nf0 = normal_form(Poly(Mode::polynomial, 1), B1);
  CHECK(nf0.remainder.is_zero());
  CHECK(nf0.cofactors[0].is_zero());

  CHECK_THROWS_AS(normal_form(P("x1 + x2", 2), B1), ModeMismatchError);
}

TEST_CASE("normal form is idempotent and the identity always re-expands") {
  oracles::Rng rng(4242);
  auto I = ideal({P("2*x1 - x2", 2), P("x2^2 + 1", 2)});
  auto B = buchberger_z(I);
  for (int iter = 0; iter < 60; ++iter) {
    auto g = rng.poly(Mode::polynomial, 2, 5, 3, 6);
    auto nf = normal_form(g, B);
    check_division_identity(g, B, nf);
    auto again = normal_form(nf.remainder, B);
    CHECK(again.remainder == nf.remainder);
    for (const auto& c : again.cofactors) CHECK(c.is_zero());
  }
}

TEST_CASE("membership: worked examples") {
  auto Ipoly = ideal({P("x1 - 1")});
  CHECK(is_member(P("x1^2 - 1"), Ipoly));

  auto Ilaurent = ideal({L("x1 - 1")});
  auto B = buchberger_z(Ilaurent);
  CHECK_FALSE(is_member(L("1"), Ilaurent, B));
  CHECK(is_member(L("1 - x1^-1"), Ilaurent, B));
  CHECK(is_member(Poly(Mode::laurent, 1), Ilaurent, B));
  CHECK_THROWS_AS(is_member(P("x1"), Ilaurent, B), ModeMismatchError);
}

TEST_CASE("membership is closed under addition and ring multiples") {
  oracles::Rng rng(777);
  auto I = ideal({L("x1*x2 - 1", 2), L("x1 - x2", 2)});
  auto B = buchberger_z(I);
  int verified = 0;
  for (int iter = 0; iter < 40; ++iter) {
    auto h1 = rng.poly(Mode::laurent, 2, 3, 2, 3);
    auto h2 = rng.poly(Mode::laurent, 2, 3, 2, 3);
    auto g = h1 * I.generators[0] + h2 * I.generators[1];
    auto h = rng.poly(Mode::laurent, 2, 3, 2, 3) * I.generators[static_cast<std::size_t>(
                 rng.uniform(0, 1))];
    REQUIRE(is_member(g, I, B));
    REQUIRE(is_member(h, I, B));
    CHECK(is_member(g + h, I, B));
    CHECK(is_member(rng.poly(Mode::laurent, 2, 2, 2, 2) * g, I, B));
    ++verified;
  }
  CHECK(verified == 40);
}

TEST_CASE("laurent membership is invariant under unit monomials") {
  oracles::Rng rng(31337);
  auto I = ideal({L("x1 - 1"), L("2*x1^2 + x1")});
  auto B = buchberger_z(I);
  for (int iter = 0; iter < 60; ++iter) {
    auto g = rng.poly(Mode::laurent, 1, 3, 2, 3);
    ExpVec d({rng.uniform(-4, 4)});
    const int sign = rng.uniform(0, 1) == 0 ? 1 : -1;
    CHECK(is_member(g, I, B) == is_member(g.monomial_mul(sign, d), I, B));
  }
}

TEST_CASE("representations over the original generators") {
  auto I = ideal({P("x1 - 1")});
  auto B = buchberger_z(I);
  auto rep = representation_from_cofactors(P("x1^2 - 1"), I, B);
  REQUIRE(rep.cofactors.size() == 1);
  CHECK(rep.cofactors[0] == P("x1 + 1"));
  CHECK(rep.norm_bound == 2);

  auto self = representation_from_cofactors(P("x1 - 1"), I, B);
  CHECK(self.cofactors[0] == P("1"));
  CHECK(self.norm_bound == 1);

  auto zero = representation_from_cofactors(Poly(Mode::polynomial, 1), I, B);
  CHECK(zero.cofactors[0].is_zero());
  CHECK(zero.norm_bound == 0);

  CHECK_THROWS_AS(representation_from_cofactors(P("1"), I, B), NotMemberError);
}

TEST_CASE("representations re-expand exactly, including through the laurent lift") {
  oracles::Rng rng(5150);
  auto I = ideal({L("x1 - 1"), L("x1^2 + 2*x1^-1")});
  auto B = buchberger_z(I);
  for (int iter = 0; iter < 25; ++iter) {
    auto h1 = rng.poly(Mode::laurent, 1, 3, 2, 3);
    auto h2 = rng.poly(Mode::laurent, 1, 3, 2, 3);
    auto g = h1 * I.generators[0] + h2 * I.generators[1];
    auto rep = representation_from_cofactors(g, I, B);
    Poly rebuilt(Mode::laurent, 1);
    Int bound = 0;
    for (std::size_t i = 0; i < rep.cofactors.size(); ++i) {
      rebuilt += rep.cofactors[i] * I.generators[i];
      bound += rep.cofactors[i].norm();
    }
    CHECK(rebuilt == g);
    CHECK(rep.norm_bound == bound);
  }
}

TEST_CASE("membership matches the evaluation oracle on certified non-members") {
  oracles::Rng rng(60601);
  int negatives = 0;
  for (int iter = 0; iter < 30; ++iter) {
    const Mode mode = iter % 2 == 0 ? Mode::polynomial : Mode::laurent;
    const int k = 1 + (iter % 2);
    std::vector<Poly> gens;
    const int s = 1 + static_cast<int>(rng.uniform(0, 1));
    for (int i = 0; i < s; ++i) {
      auto f = rng.poly(mode, k, 2, 2, 3, false);
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    auto I = ideal(std::move(gens));
    auto pt = oracles::find_vanishing_point(I);
    if (!pt) continue;
    auto B = buchberger_z(I);
    for (int probe = 0; probe < 5; ++probe) {
      auto g = rng.poly(mode, k, 3, 2, 3);
      if (!oracles::certifies_nonmember(*pt, g)) continue;
      CHECK_FALSE(is_member(g, I, B));
      ++negatives;
    }
  }
  CHECK(negatives > 20);  // the oracle actually exercised the check
}

TEST_CASE("autoreduction does not change membership answers") {
  oracles::Rng rng(2024);
  auto I = ideal({P("2*x1 + x2", 2), P("x1^2 - x2", 2), P("3*x2^2", 2)});
  BuchbergerConfig plain;
  plain.autoreduce = false;
  auto B1 = buchberger_z(I);
  auto B2 = buchberger_z(I, {}, plain);
  CHECK(B1.elements.size() <= B2.elements.size());
  for (int iter = 0; iter < 60; ++iter) {
    auto g = rng.poly(Mode::polynomial, 2, 4, 3, 4);
    CHECK(normal_form(g, B1).remainder.is_zero() == normal_form(g, B2).remainder.is_zero());
  }
}

TEST_CASE("step budget is enforced") {
  BuchbergerConfig tight;
  tight.step_budget = 1;
  auto I = ideal({P("2*x1^2 - x2", 2), P("3*x1*x2 + 1", 2), P("5*x2^3 - x1", 2)});
  CHECK_THROWS_AS(buchberger_z(I, {}, tight), BudgetExceededError);
}
