#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polyarea/errors.hpp"

namespace polyarea {

using Int = boost::multiprecision::cpp_int;

enum class Mode { polynomial, laurent };

std::string to_string(Mode mode);

/// Exponent vector d of a monomial x^d, d in Z^k (Z>=0^k in polynomial mode).
struct ExpVec {
  std::vector<std::int64_t> e;

  ExpVec() = default;
  explicit ExpVec(std::vector<std::int64_t> entries) : e(std::move(entries)) {}
  static ExpVec zero(int k) { return ExpVec(std::vector<std::int64_t>(k, 0)); }

  int size() const { return static_cast<int>(e.size()); }
  std::int64_t operator[](int i) const { return e[static_cast<std::size_t>(i)]; }

  /// L1 norm |d_1| + ... + |d_k|.
  std::int64_t norm() const;
  bool nonneg() const;

  friend ExpVec operator+(const ExpVec& a, const ExpVec& b);
  friend ExpVec operator-(const ExpVec& a, const ExpVec& b);
  ExpVec operator-() const;
  bool operator==(const ExpVec&) const = default;
};

/// L1 distance between two lattice points.
std::int64_t distance(const ExpVec& a, const ExpVec& b);

/// Term-storage key order: graded by L1 norm, ties broken lexicographically.
/// Fixed once so that iteration, printing and tie-breaking are deterministic.
struct GrlexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

using TermMap = std::map<ExpVec, Int, GrlexLess>;

/// Sparse element of Z[x_1,...,x_k] or Z[x_1^+-,...,x_k^+-] in canonical form:
/// no zero coefficients are stored, and polynomial mode admits only
/// nonnegative exponents. Values are immutable in spirit; all operations
/// return fresh polynomials.
class Poly {
 public:
  Poly(Mode mode, int vars) : mode_(mode), vars_(vars) {}

  /// Canonicalizes an arbitrary list of (coefficient, exponent) pairs:
  /// equal exponents are merged, zero coefficients dropped.
  static Poly from_terms(Mode mode, int vars, const std::vector<std::pair<Int, ExpVec>>& raw);
  static Poly monomial(Mode mode, int vars, Int coeff, ExpVec d);
  static Poly constant(Mode mode, int vars, Int c);

  Mode mode() const { return mode_; }
  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Sum of absolute values of the coefficients; norm(0) = 0.
  Int norm() const;
  /// Max L1 exponent norm over the support; nullopt is the "minus infinity"
  /// value of the zero polynomial and compares below every integer.
  std::optional<std::int64_t> degree() const;
  /// Support in grlex-ascending order.
  std::vector<ExpVec> support() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const;
  friend Poly operator*(const Poly& a, const Poly& b);

  /// Multiplication by the monomial c*x^d.
  Poly monomial_mul(const Int& c, const ExpVec& d) const;

  /// Reinterprets a polynomial-mode value inside the Laurent ring.
  Poly as_laurent() const;

  bool operator==(const Poly& rhs) const;

 private:
  void add_term(const Int& c, const ExpVec& d);
  void check_compatible(const Poly& rhs) const;

  Mode mode_;
  int vars_ = 0;
  TermMap terms_;
};

inline std::int64_t degree_or(const Poly& g, std::int64_t dflt) {
  return g.degree().value_or(dflt);
}

/// Max pairwise L1 distance of a finite point set ("diag"); singleton -> 0.
std::int64_t diameter(const std::vector<ExpVec>& s);
/// Min pairwise L1 distance between two nonempty point sets.
std::int64_t support_distance(const std::vector<ExpVec>& a, const std::vector<ExpVec>& b);

/// Embeds Z[x^+-] into Z[x_1..x_k, y_1..y_k] by substituting y_i for x_i^-1
/// in every term. Together with the relations x_i*y_i - 1 this realizes the
/// Laurent ring as a quotient of a polynomial ring in 2k variables.
Poly lift_to_polynomial(const Poly& g);
/// Inverse direction: substitutes x_i^-1 back for y_i.
Poly laurent_from_lifted(const Poly& p, int k);

}  // namespace polyarea
