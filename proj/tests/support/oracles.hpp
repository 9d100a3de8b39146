// Test-only oracles, kept independent of the division/search code paths they
// check: evaluation homomorphisms certify non-membership, and exact quotients
// in one-variable rings pin areas for principal ideals over a domain.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "polyarea/ideal.hpp"
#include "polyarea/ring.hpp"

namespace oracles {

using polyarea::ExpVec;
using polyarea::Ideal;
using polyarea::Int;
using polyarea::Mode;
using polyarea::Poly;

inline std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t r = 1 % p;
  base %= p;
  if (base < 0) base += p;
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
  }
  return r;
}

// Fermat inverse, p prime, a not divisible by p.
inline std::int64_t mod_inv(std::int64_t a, std::int64_t p) { return mod_pow(a, p - 2, p); }

// g(t) mod p. In laurent mode every t_i must be a unit mod p.
inline std::int64_t eval_mod(const Poly& g, const std::vector<std::int64_t>& t, std::int64_t p) {
  std::int64_t acc = 0;
  for (const auto& [d, c] : g.terms()) {
    std::int64_t term = static_cast<std::int64_t>(((c % p) + p) % p);
    for (int i = 0; i < d.size(); ++i) {
      const std::int64_t e = d[i];
      const std::int64_t base = e >= 0 ? t[static_cast<std::size_t>(i)]
                                       : mod_inv(t[static_cast<std::size_t>(i)], p);
      term = term * mod_pow(base, e >= 0 ? e : -e, p) % p;
    }
    acc = (acc + term) % p;
  }
  return acc;
}

struct VanishingPoint {
  std::vector<std::int64_t> t;
  std::int64_t p;
};

// Searches small points and primes where every generator vanishes mod p.
// Any g with g(t) != 0 mod p is then certified outside the ideal, because
// evaluation followed by reduction mod p is a ring homomorphism killing I.
inline std::optional<VanishingPoint> find_vanishing_point(const Ideal& I) {
  static const std::int64_t primes[] = {2, 3, 5, 7, 11, 13};
  std::vector<std::int64_t> t(static_cast<std::size_t>(I.vars), 1);
  for (std::int64_t p : primes) {
    const auto try_all = [&](auto&& self, int pos) -> std::optional<VanishingPoint> {
      if (pos == I.vars) {
        for (const auto& f : I.generators)
          if (eval_mod(f, t, p) != 0) return std::nullopt;
        return VanishingPoint{t, p};
      }
      for (std::int64_t v = 1; v < p; ++v) {  // units only, covers both modes
        t[static_cast<std::size_t>(pos)] = v;
        if (auto found = self(self, pos + 1)) return found;
      }
      if (I.mode == Mode::polynomial) {  // zero is fine when no inverses are needed
        t[static_cast<std::size_t>(pos)] = 0;
        bool uses_negative = false;
        for (const auto& f : I.generators)
          for (const auto& [d, c] : f.terms())
            if (d[pos] < 0) uses_negative = true;
        if (!uses_negative)
          if (auto found = self(self, pos + 1)) return found;
      }
      return std::nullopt;
    };
    if (auto found = try_all(try_all, 0)) return found;
  }
  return std::nullopt;
}

inline bool certifies_nonmember(const VanishingPoint& pt, const Poly& g) {
  return eval_mod(g, pt.t, pt.p) != 0;
}

// Exact quotient g / f in Z[x] or Z[x^+-] with one variable; nullopt when f
// does not divide g. In a principal ideal of a domain the quotient is the
// unique cofactor, so its norm is the exact area.
inline std::optional<Poly> exact_quotient_univariate(const Poly& g, const Poly& f) {
  if (g.vars() != 1 || f.vars() != 1 || f.is_zero()) return std::nullopt;
  if (g.is_zero()) return Poly(g.mode(), 1);

  std::map<std::int64_t, Int> gt, ft;
  for (const auto& [d, c] : g.terms()) gt[d[0]] = c;
  for (const auto& [d, c] : f.terms()) ft[d[0]] = c;
  const std::int64_t shift = gt.begin()->first - ft.begin()->first;
  if (g.mode() == Mode::polynomial && shift < 0) return std::nullopt;

  std::map<std::int64_t, Int> q;
  while (!gt.empty()) {
    const auto [ge, gc] = *gt.rbegin();
    const auto [fe, fc] = *ft.rbegin();
    if (gc % fc != 0) return std::nullopt;
    const Int qc = gc / fc;
    const std::int64_t qe = ge - fe;
    if (qe - shift < 0) return std::nullopt;  // would run past the low end
    q[qe] = qc;
    for (const auto& [e, c] : ft) {
      auto it = gt.find(e + qe);
      Int next = (it == gt.end() ? Int(0) : it->second) - qc * c;
      if (next == 0) {
        if (it != gt.end()) gt.erase(it);
      } else {
        gt[e + qe] = next;
      }
    }
  }
  std::vector<std::pair<Int, ExpVec>> terms;
  for (const auto& [e, c] : q) terms.emplace_back(c, ExpVec({e}));
  return Poly::from_terms(g.mode(), 1, terms);
}

// Deterministic random instances for the property suites.
struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(engine() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Poly poly(Mode mode, int k, int max_terms, std::int64_t max_exp, std::int64_t max_coeff,
            bool allow_zero = true) {
    std::vector<std::pair<Int, ExpVec>> terms;
    const std::int64_t nterms = uniform(allow_zero ? 0 : 1, max_terms);
    for (std::int64_t t = 0; t < nterms; ++t) {
      std::vector<std::int64_t> e(static_cast<std::size_t>(k), 0);
      for (auto& v : e) v = mode == Mode::polynomial ? uniform(0, max_exp)
                                                     : uniform(-max_exp, max_exp);
      Int c = uniform(1, max_coeff);
      if (uniform(0, 1) == 1) c = -c;
      terms.emplace_back(c, ExpVec(std::move(e)));
    }
    return Poly::from_terms(mode, k, terms);
  }
};

}  // namespace oracles
