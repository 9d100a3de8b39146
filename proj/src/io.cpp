#include "polyarea/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "polyarea/errors.hpp"

namespace polyarea {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) { throw SyntaxError(what, pos); }

  Int integer() {
    skip_ws();
    std::size_t start = pos;
    bool neg = accept('-');
    if (!neg) accept('+');
    skip_ws();
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      digits.push_back(text[pos++]);
    if (digits.empty()) {
      pos = start;
      fail("expected an integer");
    }
    Int v(digits);
    return neg ? -v : v;
  }

  int var_index() {
    skip_ws();
    if (peek() != 'x') fail("expected a variable");
    ++pos;
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      digits.push_back(text[pos++]);
    if (digits.empty()) fail("variable needs an index, e.g. x1");
    int idx = std::stoi(digits);
    if (idx < 1) fail("variable indices start at 1");
    return idx;
  }
};

struct RawTerm {
  Int coeff;
  std::vector<std::pair<int, std::int64_t>> powers;  // (variable index, exponent)
  int max_var = 0;
};

// term := [integer '*']? monomial | integer
RawTerm parse_term(Cursor& cur) {
  RawTerm term{Int(1), {}, 0};
  bool saw_coeff = false;
  if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    term.coeff = cur.integer();
    saw_coeff = true;
    if (!cur.accept('*')) return term;  // bare integer
  }
  bool saw_var = false;
  while (true) {
    if (cur.peek() != 'x') break;
    int idx = cur.var_index();
    std::int64_t exp = 1;
    if (cur.accept('^')) exp = cur.integer().convert_to<std::int64_t>();
    term.powers.emplace_back(idx, exp);
    term.max_var = std::max(term.max_var, idx);
    saw_var = true;
    if (!cur.accept('*')) break;
  }
  if (!saw_var && !saw_coeff) cur.fail("expected a term");
  if (!saw_var && saw_coeff) return term;
  return term;
}

}  // namespace

Poly parse_poly(std::string_view text, Mode mode, int vars) {
  Cursor cur{text};
  std::vector<std::pair<Int, RawTerm>> signed_terms;
  int max_var = 1;

  bool negate = cur.accept('-');
  while (true) {
    RawTerm t = parse_term(cur);
    signed_terms.emplace_back(negate ? Int(-1) : Int(1), t);
    max_var = std::max(max_var, t.max_var);
    if (cur.done()) break;
    if (cur.accept('+'))
      negate = false;
    else if (cur.accept('-'))
      negate = true;
    else
      cur.fail("expected '+' or '-' between terms");
  }

  const int k = vars > 0 ? vars : max_var;
  std::vector<std::pair<Int, ExpVec>> raw;
  for (const auto& [sign, t] : signed_terms) {
    if (t.max_var > k)
      throw SyntaxError("variable x" + std::to_string(t.max_var) + " exceeds vars=" +
                            std::to_string(k),
                        0);
    std::vector<std::int64_t> e(static_cast<std::size_t>(k), 0);
    for (const auto& [idx, exp] : t.powers) e[static_cast<std::size_t>(idx - 1)] += exp;
    raw.emplace_back(sign * t.coeff, ExpVec(std::move(e)));
  }
  return Poly::from_terms(mode, k, raw);
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // grlex-descending
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [d, c] = *it;
    const bool neg = c < 0;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    Int mag = abs(c);
    const bool constant_term = d.norm() == 0;
    if (mag != 1 || constant_term) {
      os << mag.str();
      if (!constant_term) os << '*';
    }
    bool first_var = true;
    for (int i = 0; i < d.size(); ++i) {
      if (d[i] == 0) continue;
      if (!first_var) os << '*';
      os << 'x' << (i + 1);
      if (d[i] != 1) os << '^' << d[i];
      first_var = false;
    }
  }
  return os.str();
}

Ideal parse_ideal_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Mode mode = Mode::polynomial;
  int vars = 0;
  bool have_header = false;
  std::vector<Poly> gens;
  while (std::getline(in, line)) {
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    std::string body = line.substr(begin, end - begin + 1);
    if (!have_header) {
      std::istringstream hs(body);
      std::string mode_kv, vars_kv;
      if (!(hs >> mode_kv >> vars_kv) || mode_kv.rfind("mode=", 0) != 0 ||
          vars_kv.rfind("vars=", 0) != 0)
        throw SyntaxError("ideal file must start with 'mode=<m> vars=<k>'", 0);
      std::string m = mode_kv.substr(5);
      if (m == "polynomial")
        mode = Mode::polynomial;
      else if (m == "laurent")
        mode = Mode::laurent;
      else
        throw SyntaxError("unknown mode '" + m + "'", 0);
      vars = std::stoi(vars_kv.substr(5));
      if (vars < 1) throw SyntaxError("vars must be at least 1", 0);
      have_header = true;
      continue;
    }
    gens.push_back(parse_poly(body, mode, vars));
  }
  if (!have_header) throw SyntaxError("empty ideal description", 0);
  return Ideal::make(std::move(gens));
}

Ideal parse_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ideal file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ideal_text(buf.str());
}

std::string to_ideal_text(const Ideal& I) {
  std::ostringstream os;
  os << "mode=" << to_string(I.mode) << " vars=" << I.vars << '\n';
  for (const auto& f : I.generators) os << to_string(f) << '\n';
  return os.str();
}

GroupWord parse_word(std::string_view text, int vars) {
  GroupWord w;
  std::istringstream in{std::string(text)};
  std::string token;
  int max_var = vars > 0 ? vars : 1;
  while (in >> token) {
    if (token == "a" || token == "A") {
      w.letters.push_back({0, token == "A"});
      continue;
    }
    const bool inv = token[0] == 'X';
    if (token[0] != 'x' && token[0] != 'X')
      throw SyntaxError("unknown letter '" + token + "'", 0);
    int idx = 0;
    try {
      idx = std::stoi(token.substr(1));
    } catch (...) {
      throw SyntaxError("unknown letter '" + token + "'", 0);
    }
    if (idx < 1) throw SyntaxError("variable indices start at 1", 0);
    if (vars > 0 && idx > vars)
      throw SyntaxError("letter '" + token + "' exceeds vars=" + std::to_string(vars), 0);
    max_var = std::max(max_var, idx);
    w.letters.push_back({idx, inv});
  }
  w.vars = vars > 0 ? vars : max_var;
  return w;
}

std::string to_string(const GroupWord& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& letter : w.letters) {
    if (!first) os << ' ';
    first = false;
    if (letter.symbol == 0)
      os << (letter.inverse ? "A" : "a");
    else
      os << (letter.inverse ? "X" : "x") << letter.symbol;
  }
  return os.str();
}

std::string serialize_certificate(const AreaCertificate& c) {
  std::ostringstream os;
  os << "target " << to_string(c.target) << '\n';
  for (const auto& e : c.entries) {
    os << (e.gen + 1) << ' ' << (e.sign > 0 ? '+' : '-');
    for (auto v : e.shift.e) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

AreaCertificate parse_certificate(std::string_view text, const Ideal& I) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_target = false;
  AreaCertificate cert{Poly(I.mode, I.vars), {}};
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    if (!have_target) {
      std::string keyword;
      ls >> keyword;
      if (keyword != "target") throw SyntaxError("certificate must start with 'target <poly>'", 0);
      std::string rest;
      std::getline(ls, rest);
      cert.target = parse_poly(rest, I.mode, I.vars);
      have_target = true;
      continue;
    }
    int gen = 0;
    char sign = 0;
    ls >> gen >> sign;
    if (!ls || (sign != '+' && sign != '-') || gen < 1 || gen > I.size())
      throw SyntaxError("bad certificate entry: " + line, 0);
    std::vector<std::int64_t> shift(static_cast<std::size_t>(I.vars), 0);
    for (auto& v : shift)
      if (!(ls >> v)) throw SyntaxError("entry needs " + std::to_string(I.vars) + " shifts", 0);
    cert.entries.push_back({gen - 1, sign == '+' ? 1 : -1, ExpVec(std::move(shift))});
  }
  if (!have_target) throw SyntaxError("certificate must start with 'target <poly>'", 0);
  std::sort(cert.entries.begin(), cert.entries.end(), entry_less);
  return cert;
}

std::string table_csv(const ComplexityTable& table) {
  std::ostringstream os;
  os << "m,n,C,witness,exact,candidates\n";
  for (const auto& row : table.rows)
    os << row.m << ',' << row.n << ',' << row.value << ',' << to_string(row.witness) << ','
       << (row.exact ? "true" : "false") << ',' << row.candidates << '\n';
  return os.str();
}

nlohmann::json table_json(const ComplexityTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows)
    rows.push_back({{"m", row.m},
                    {"n", row.n},
                    {"C", row.value},
                    {"witness", to_string(row.witness)},
                    {"exact", row.exact},
                    {"candidates", row.candidates}});
  return {{"rows", rows}};
}

nlohmann::json datapoint_json(const DehnDatapoint& p) {
  return {{"m", p.m},
          {"n", p.n},
          {"L", p.word_length},
          {"bound", p.bound},
          {"witness", to_string(p.witness)},
          {"word", to_string(p.word)},
          {"exact", p.exact}};
}

}  // namespace polyarea
