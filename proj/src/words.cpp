#include "polyarea/words.hpp"

#include <algorithm>

#include "polyarea/area.hpp"
#include "polyarea/errors.hpp"

namespace polyarea {

namespace {

void append_run(std::vector<Letter>& letters, int symbol, std::int64_t count) {
  const bool inv = count < 0;
  for (std::int64_t t = 0; t < (inv ? -count : count); ++t) letters.push_back({symbol, inv});
}

// Conjugator path from one lattice point to another, coordinate by
// coordinate. Any path of the same L1 length collects identically.
void append_move(std::vector<Letter>& letters, const ExpVec& from, const ExpVec& to) {
  for (int i = 0; i < from.size(); ++i) append_run(letters, i + 1, to[i] - from[i]);
}

}  // namespace

CollectedForm collect(const GroupWord& w) {
  CollectedForm out{Poly(Mode::laurent, w.vars), ExpVec::zero(w.vars)};
  for (const auto& letter : w.letters) {
    if (letter.symbol == 0) {
      out.f += Poly::monomial(Mode::laurent, w.vars, letter.inverse ? -1 : 1, out.q);
    } else {
      out.q.e[static_cast<std::size_t>(letter.symbol - 1)] += letter.inverse ? -1 : 1;
    }
  }
  return out;
}

CollectedForm compose(const CollectedForm& a, const CollectedForm& b) {
  return {a.f + b.f.monomial_mul(1, a.q), a.q + b.q};
}

GroupWord word_from_poly(const Poly& g, TermOrdering ordering) {
  const int k = g.vars();
  GroupWord w{k, {}};
  if (g.is_zero()) return w;

  std::vector<std::pair<ExpVec, Int>> terms;
  for (const auto& [d, c] : g.terms()) terms.emplace_back(d, c);

  if (ordering == TermOrdering::input) {
    std::reverse(terms.begin(), terms.end());  // grlex-descending, printing order
  } else {
    // Nearest-neighbor walk from the origin, lexicographic tie-break.
    std::vector<std::pair<ExpVec, Int>> route;
    ExpVec pos = ExpVec::zero(k);
    while (!terms.empty()) {
      std::size_t best = 0;
      for (std::size_t j = 1; j < terms.size(); ++j) {
        const std::int64_t dj = distance(pos, terms[j].first);
        const std::int64_t db = distance(pos, terms[best].first);
        if (dj < db || (dj == db && std::lexicographical_compare(
                                        terms[j].first.e.begin(), terms[j].first.e.end(),
                                        terms[best].first.e.begin(), terms[best].first.e.end())))
          best = j;
      }
      pos = terms[best].first;
      route.push_back(terms[best]);
      terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(best));
    }
    terms = std::move(route);
  }

  ExpVec pos = ExpVec::zero(k);
  for (const auto& [d, coeff] : terms) {
    append_move(w.letters, pos, d);
    append_run(w.letters, 0, coeff.convert_to<std::int64_t>());
    pos = d;
  }
  append_move(w.letters, pos, ExpVec::zero(k));
  return w;
}

bool is_trivial(const GroupWord& w, const Ideal& I, const GroebnerBasis& B) {
  if (I.mode != Mode::laurent)
    throw ModeMismatchError("the group construction needs a laurent-mode ideal");
  if (w.vars != I.vars) throw ModeMismatchError("word alphabet does not match the ideal's rank");
  auto c = collect(w);
  if (!(c.q == ExpVec::zero(w.vars))) return false;
  return is_member(c.f, I, B);
}

bool is_trivial(const GroupWord& w, const Ideal& I) {
  return is_trivial(w, I, buchberger_z(I));
}

DehnDatapoint dehn_datapoint(const Ideal& I, const GroebnerBasis& B, std::int64_t m,
                             std::int64_t n, const EnumerationBudget& budget) {
  auto cell = complexity_value(I, B, m, n, budget);
  DehnDatapoint point(m, n, cell.witness);
  point.exact = cell.exact;
  point.bound = cell.value;
  if (cell.witness.is_zero()) return point;

  if (I.mode == Mode::polynomial) {
    std::vector<Poly> closure_gens;
    for (const auto& f : I.generators) closure_gens.push_back(f.as_laurent());
    Ideal closure = Ideal::make(std::move(closure_gens));
    SearchConfig cfg;
    cfg.max_area = budget.max_area;
    point.bound = area_exact(cell.witness.as_laurent(), closure, cfg).area();
  }

  point.word = word_from_poly(point.witness.as_laurent(), TermOrdering::greedy);
  point.word_length = static_cast<std::int64_t>(point.word.length());
  return point;
}

}  // namespace polyarea
