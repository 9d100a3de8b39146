#include "polyarea/groebner.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "polyarea/errors.hpp"

namespace polyarea {

namespace {

// Extended Euclid on magnitudes, then signs folded back in:
// u*a + v*b == g with g = gcd(|a|,|b|) > 0.
std::tuple<Int, Int, Int> extended_gcd(const Int& a, const Int& b) {
  if (b == 0) {
    if (a < 0) return {-a, Int(-1), Int(0)};
    return {a, Int(1), Int(0)};
  }
  Int q = a / b;  // truncated division
  auto [g, u, v] = extended_gcd(b, a - q * b);
  return {g, v, u - q * v};
}

// Floor-style remainder in [0, |b|): the deterministic convention used by
// the division algorithm.
Int nonneg_mod(const Int& a, const Int& b) {
  Int m = abs(b);
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

struct LeadInfo {
  Int coeff;
  ExpVec mono;
};

LeadInfo lead(const Poly& f, const MonomialOrder& order) {
  auto [c, m] = leading_term(f, order);
  return {c, m};
}

struct Basis {
  const MonomialOrder& order;
  std::vector<Poly> elems;
  std::vector<LeadInfo> leads;
  std::vector<std::vector<Poly>> prov;

  void push(Poly p, std::vector<Poly> row) {
    leads.push_back(lead(p, order));
    elems.push_back(std::move(p));
    prov.push_back(std::move(row));
  }
};

// Full division of g by the basis with cofactor tracking. Reduces the
// currently largest term; coefficients are brought into [0, |lc|) so the
// result is a function of (g, basis, order) alone.
NormalFormResult divide(const Poly& g, const Basis& B) {
  const Mode mode = g.mode();
  const int vars = g.vars();
  Poly h = g;
  Poly remainder(mode, vars);
  std::vector<Poly> cof(B.elems.size(), Poly(mode, vars));

  while (!h.is_zero()) {
    auto [c, m] = leading_term(h, B.order);
    bool reduced = false;
    for (std::size_t j = 0; j < B.elems.size(); ++j) {
      const auto& lt = B.leads[j];
      if (!monomial_divides(lt.mono, m)) continue;
      Int r = nonneg_mod(c, lt.coeff);
      Int q = (c - r) / lt.coeff;
      if (q == 0) continue;
      ExpVec shift = m - lt.mono;
      h -= B.elems[j].monomial_mul(q, shift);
      cof[j] += Poly::monomial(mode, vars, q, shift);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder += Poly::monomial(mode, vars, c, m);
      h -= Poly::monomial(mode, vars, c, m);
    }
  }
  return {std::move(remainder), std::move(cof)};
}

std::vector<Poly> zero_row(Mode mode, int vars, std::size_t n) {
  return std::vector<Poly>(n, Poly(mode, vars));
}

void row_add_scaled(std::vector<Poly>& acc, const Poly& factor, const std::vector<Poly>& row) {
  for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += factor * row[t];
}

}  // namespace

Poly s_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw ZeroInputError("s_polynomial of zero input");
  auto lf = lead(f, order);
  auto lg = lead(g, order);
  ExpVec m = monomial_lcm(lf.mono, lg.mono);
  Int c = lcm(lf.coeff, lg.coeff);
  if (c < 0) c = -c;
  return f.monomial_mul(c / lf.coeff, m - lf.mono) - g.monomial_mul(c / lg.coeff, m - lg.mono);
}

Poly gcd_polynomial(const Poly& f, const Poly& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw ZeroInputError("gcd_polynomial of zero input");
  auto lf = lead(f, order);
  auto lg = lead(g, order);
  ExpVec m = monomial_lcm(lf.mono, lg.mono);
  auto [d, u, v] = extended_gcd(lf.coeff, lg.coeff);
  (void)d;
  return f.monomial_mul(u, m - lf.mono) + g.monomial_mul(v, m - lg.mono);
}

GroebnerBasis buchberger_z(const Ideal& I, const MonomialOrder& order,
                           const BuchbergerConfig& config) {
  const bool laurent = I.mode == Mode::laurent;
  const int k = I.vars;
  const int ambient = laurent ? 2 * k : k;

  std::vector<Poly> source;
  for (const auto& f : I.generators) source.push_back(laurent ? lift_to_polynomial(f) : f);
  if (laurent) {
    for (int i = 0; i < k; ++i) {
      std::vector<std::int64_t> xy(static_cast<std::size_t>(ambient), 0);
      xy[static_cast<std::size_t>(i)] = 1;
      xy[static_cast<std::size_t>(k + i)] = 1;
      Poly rel = Poly::monomial(Mode::polynomial, ambient, 1, ExpVec(xy)) -
                 Poly::constant(Mode::polynomial, ambient, 1);
      source.push_back(rel);
    }
  }

  Basis B{order, {}, {}, {}};
  for (std::size_t i = 0; i < source.size(); ++i) {
    auto row = zero_row(Mode::polynomial, ambient, source.size());
    row[i] = Poly::constant(Mode::polynomial, ambient, 1);
    B.push(source[i], std::move(row));
  }

  // Critical pairs, processed smallest lcm first. kind 0 = S-pair, 1 = GCD-pair.
  struct Pair {
    std::size_t i, j;
    int kind;
    ExpVec lcm;
  };
  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (!(a.lcm == b.lcm)) return order.less(a.lcm, b.lcm);
    return std::tie(a.i, a.j, a.kind) < std::tie(b.i, b.j, b.kind);
  };
  std::deque<Pair> queue;
  auto enqueue_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      ExpVec m = monomial_lcm(B.leads[i].mono, B.leads[j].mono);
      queue.push_back({i, j, 0, m});
      const Int &a = B.leads[i].coeff, &b = B.leads[j].coeff;
      // The gcd combination is redundant when one leading coefficient
      // already divides the other.
      if (a % b != 0 && b % a != 0) queue.push_back({i, j, 1, m});
    }
  };
  for (std::size_t j = 1; j < B.elems.size(); ++j) enqueue_pairs(j);

  std::int64_t steps = 0;
  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), pair_less);
    Pair p = *it;
    queue.erase(it);
    if (++steps > config.step_budget)
      throw BudgetExceededError("buchberger_z exceeded its step budget");

    Poly candidate = p.kind == 0 ? s_polynomial(B.elems[p.i], B.elems[p.j], order)
                                 : gcd_polynomial(B.elems[p.i], B.elems[p.j], order);
    std::vector<Poly> row = zero_row(Mode::polynomial, ambient, source.size());
    {
      auto lf = B.leads[p.i];
      auto lg = B.leads[p.j];
      ExpVec m = monomial_lcm(lf.mono, lg.mono);
      Int u, v;
      if (p.kind == 0) {
        Int c = lcm(lf.coeff, lg.coeff);
        if (c < 0) c = -c;
        u = c / lf.coeff;
        v = -c / lg.coeff;
      } else {
        auto [d, bu, bv] = extended_gcd(lf.coeff, lg.coeff);
        (void)d;
        u = bu;
        v = bv;
      }
      row_add_scaled(row, Poly::monomial(Mode::polynomial, ambient, u, m - lf.mono), B.prov[p.i]);
      row_add_scaled(row, Poly::monomial(Mode::polynomial, ambient, v, m - lg.mono), B.prov[p.j]);
    }
    if (candidate.is_zero()) continue;

    auto nf = divide(candidate, B);
    for (std::size_t l = 0; l < nf.cofactors.size(); ++l) {
      if (nf.cofactors[l].is_zero()) continue;
      for (std::size_t t = 0; t < row.size(); ++t) row[t] -= nf.cofactors[l] * B.prov[l][t];
    }
    if (nf.remainder.is_zero()) continue;

    B.push(std::move(nf.remainder), std::move(row));
    enqueue_pairs(B.elems.size() - 1);
  }

  // Normalize signs so leading coefficients are positive.
  for (std::size_t i = 0; i < B.elems.size(); ++i) {
    if (B.leads[i].coeff < 0) {
      B.elems[i] = -B.elems[i];
      B.leads[i].coeff = -B.leads[i].coeff;
      for (auto& p : B.prov[i]) p = -p;
    }
  }

  // Deterministic order: by leading monomial, then |lc|, then term data.
  std::vector<std::size_t> perm(B.elems.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  auto poly_key_less = [](const Poly& a, const Poly& b) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
      GrlexLess less;
      if (less(ia->first, ib->first)) return true;
      if (less(ib->first, ia->first)) return false;
      if (ia->second != ib->second) return ia->second < ib->second;
    }
    return a.term_count() < b.term_count();
  };
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto &la = B.leads[a], &lb = B.leads[b];
    if (!(la.mono == lb.mono)) return order.less(la.mono, lb.mono);
    if (la.coeff != lb.coeff) return la.coeff < lb.coeff;
    return poly_key_less(B.elems[a], B.elems[b]);
  });

  GroebnerBasis out;
  out.order = order;
  out.source_mode = I.mode;
  out.source_vars = k;
  out.ambient_vars = ambient;
  out.source = std::move(source);
  out.original_count = I.size();
  for (std::size_t idx : perm) {
    bool redundant = false;
    if (config.autoreduce) {
      // Strong top-redundancy: an already kept element divides this leading
      // term, monomial and coefficient both. Divisibility is transitive, so
      // dropping keeps the strong basis property.
      for (std::size_t kept = 0; kept < out.elements.size() && !redundant; ++kept) {
        auto lt = lead(out.elements[kept], order);
        redundant = monomial_divides(lt.mono, B.leads[idx].mono) &&
                    B.leads[idx].coeff % lt.coeff == 0;
      }
    }
    if (!redundant) {
      out.elements.push_back(std::move(B.elems[idx]));
      out.provenance.push_back(std::move(B.prov[idx]));
    }
  }
  return out;
}

NormalFormResult normal_form(const Poly& g, const GroebnerBasis& B) {
  Poly input(Mode::polynomial, B.ambient_vars);
  if (g.mode() == Mode::laurent) {
    if (B.source_mode != Mode::laurent || g.vars() != B.source_vars)
      throw ModeMismatchError("laurent input does not match the basis ring");
    input = lift_to_polynomial(g);
  } else {
    if (g.vars() != B.ambient_vars)
      throw ModeMismatchError("polynomial input does not match the basis ring");
    input = g;
  }
  Basis internal{B.order, {}, {}, {}};
  for (const auto& e : B.elements) internal.push(e, {});
  return divide(input, internal);
}

bool is_member(const Poly& g, const Ideal& I, const GroebnerBasis& B) {
  if (g.mode() != I.mode || g.vars() != I.vars)
    throw ModeMismatchError("element and ideal live in different rings");
  if (g.is_zero()) return true;
  return normal_form(g, B).remainder.is_zero();
}

bool is_member(const Poly& g, const Ideal& I) {
  return is_member(g, I, buchberger_z(I));
}

Representation representation_from_cofactors(const Poly& g, const Ideal& I,
                                             const GroebnerBasis& B) {
  auto nf = normal_form(g, B);
  if (!nf.remainder.is_zero()) throw NotMemberError("element is not in the ideal");

  // Compose division cofactors with basis provenance to land on the source
  // generators, then fold lifted variables back in laurent mode. Relation
  // rows map to zero under the fold and are dropped.
  std::vector<Poly> over_source(B.source.size(), Poly(Mode::polynomial, B.ambient_vars));
  for (std::size_t j = 0; j < B.elements.size(); ++j) {
    if (nf.cofactors[j].is_zero()) continue;
    for (std::size_t t = 0; t < over_source.size(); ++t)
      over_source[t] += nf.cofactors[j] * B.provenance[j][t];
  }

  Representation rep{{}, 0};
  for (int t = 0; t < B.original_count; ++t) {
    Poly h = B.source_mode == Mode::laurent
                 ? laurent_from_lifted(over_source[static_cast<std::size_t>(t)], B.source_vars)
                 : over_source[static_cast<std::size_t>(t)];
    rep.norm_bound += h.norm();
    rep.cofactors.push_back(std::move(h));
  }
  (void)I;
  return rep;
}

}  // namespace polyarea
