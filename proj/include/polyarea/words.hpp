#pragma once

#include <cstdint>
#include <vector>

#include "polyarea/complexity.hpp"
#include "polyarea/groebner.hpp"
#include "polyarea/ideal.hpp"
#include "polyarea/ring.hpp"

namespace polyarea {

/// Letter of the group alphabet {a, x_1, ..., x_k} and inverses:
/// symbol 0 is a, symbol i >= 1 is x_i.
struct Letter {
  int symbol = 0;
  bool inverse = false;

  bool operator==(const Letter&) const = default;
};

struct GroupWord {
  int vars = 0;  // k
  std::vector<Letter> letters;

  std::size_t length() const { return letters.size(); }
  bool operator==(const GroupWord&) const = default;
};

/// Wreath-product normal form (f, q) with f in Z[x^+-] and q in Z^k.
/// Multiplication: (f, q) * (f', q') = (f + x^q f', q + q').
struct CollectedForm {
  Poly f;
  ExpVec q;
};

/// Left-to-right collection of a word into its wreath normal form: an x_i
/// letter moves q, an a letter deposits +-x^q into f.
CollectedForm collect(const GroupWord& w);

CollectedForm compose(const CollectedForm& a, const CollectedForm& b);

enum class TermOrdering { input, greedy };

/// The word a^g: for each term alpha*x^d of g, walk the conjugator to d,
/// spell a^alpha, and walk on to the next term, returning to the origin at
/// the end. Consecutive conjugators are fused, so the length is
/// sum |alpha_j| + |d_1| + sum |d_{j+1} - d_j| + |d_l| <= |g| + 2|g|deg(g).
/// `greedy` visits the support nearest-neighbor first from the origin
/// (ties broken lexicographically); `input` uses grlex-descending term order.
GroupWord word_from_poly(const Poly& g, TermOrdering ordering = TermOrdering::input);

/// Word problem for G_I: a word is trivial iff it collects to (f, 0) with
/// f in I. Requires a laurent-mode ideal.
bool is_trivial(const GroupWord& w, const Ideal& I, const GroebnerBasis& B);
bool is_trivial(const GroupWord& w, const Ideal& I);

/// One certified lower-bound datapoint: a trivial word of length L whose
/// polynomial has area >= `bound`, so the relative Dehn function of the
/// presentation of G_I at any argument >= L is at least `bound`.
struct DehnDatapoint {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t word_length = 0;
  std::int64_t bound = 0;
  Poly witness;
  GroupWord word;
  bool exact = true;

  DehnDatapoint(std::int64_t m_, std::int64_t n_, Poly w) : m(m_), n(n_), witness(std::move(w)) {}
};

/// Builds the datapoint from the witness of the complexity cell (m, n). For
/// laurent ideals the bound is the cell value itself. A polynomial-mode
/// ideal is interpreted through its laurent closure (the group construction
/// lives over the Laurent ring), and the bound is re-certified as the
/// witness's area over that closure so the emitted claim stays sound.
DehnDatapoint dehn_datapoint(const Ideal& I, const GroebnerBasis& B, std::int64_t m,
                             std::int64_t n, const EnumerationBudget& budget = {});

}  // namespace polyarea
