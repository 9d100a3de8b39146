// Command-line front end: ideal membership, normal forms, representations,
// exact areas, complexity tables, and the group-word workflows, over ideals
// described by small text files.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyarea/area.hpp"
#include "polyarea/complexity.hpp"
#include "polyarea/errors.hpp"
#include "polyarea/groebner.hpp"
#include "polyarea/io.hpp"
#include "polyarea/words.hpp"

namespace {

using namespace polyarea;
using nlohmann::json;

enum ExitCode : int {
  exit_ok = 0,        // computed
  exit_negative = 1,  // negative decision (non-member, non-trivial word)
  exit_usage = 2,     // usage or parse error
  exit_budget = 3,    // a budget or the search radius ran out
};

struct CommonOpts {
  std::string ideal_path;
  std::string poly_text;
  std::string word_text;
  bool as_json = false;
  std::string order_name = "grevlex";
  std::vector<int> var_order;
  std::int64_t max_area = 64;
  std::int64_t slack = 0;
  std::string pruning = "none";
  std::int64_t max_candidates = 2000000;
  std::int64_t time_ms = 300000;
  std::int64_t m = 0, n = 0;
  std::int64_t max_m = 2, max_n = 3;
  std::string csv_path;
  std::string cert_path;
  std::string ordering = "greedy";
  int vars = 0;
  std::int64_t seed = 0;  // reserved; all computations are deterministic
};

MonomialOrder make_order(const CommonOpts& o) {
  MonomialOrder order;
  if (o.order_name == "grevlex")
    order.kind = MonomialOrder::Kind::grevlex;
  else if (o.order_name == "grlex")
    order.kind = MonomialOrder::Kind::grlex;
  else if (o.order_name == "lex")
    order.kind = MonomialOrder::Kind::lex;
  else
    throw SyntaxError("unknown order '" + o.order_name + "'", 0);
  for (int v : o.var_order) order.var_order.push_back(v - 1);
  return order;
}

SearchConfig make_search(const CommonOpts& o) {
  SearchConfig cfg;
  cfg.max_area = o.max_area;
  cfg.radius_slack = o.slack;
  if (o.pruning == "connectivity")
    cfg.pruning = Pruning::connectivity;
  else if (o.pruning != "none")
    throw SyntaxError("unknown pruning '" + o.pruning + "'", 0);
  return cfg;
}

EnumerationBudget make_budget(const CommonOpts& o) {
  EnumerationBudget b;
  b.max_candidates = o.max_candidates;
  b.max_area = o.max_area;
  b.wall_clock_ms = o.time_ms;
  return b;
}

void emit(const json& payload, const CommonOpts& o, const std::string& text) {
  if (o.as_json)
    std::cout << payload.dump() << '\n';
  else
    std::cout << text;
}

int run_member(const CommonOpts& o) {
  Ideal I = parse_ideal_file(o.ideal_path);
  Poly g = parse_poly(o.poly_text, I.mode, I.vars);
  const bool member = is_member(g, I, buchberger_z(I, make_order(o)));
  emit({{"command", "member"}, {"poly", to_string(g)}, {"member", member}}, o,
       std::string("member: ") + (member ? "true" : "false") + "\n");
  return member ? exit_ok : exit_negative;
}

int run_nf(const CommonOpts& o) {
  Ideal I = parse_ideal_file(o.ideal_path);
  Poly g = parse_poly(o.poly_text, I.mode, I.vars);
  auto B = buchberger_z(I, make_order(o));
  auto nf = normal_form(g, B);
  json basis = json::array(), cof = json::array();
  std::string text = "remainder: " + to_string(nf.remainder) + "\n";
  for (std::size_t j = 0; j < B.elements.size(); ++j) {
    basis.push_back(to_string(B.elements[j]));
    cof.push_back(to_string(nf.cofactors[j]));
    text += "basis " + std::to_string(j + 1) + ": " + to_string(B.elements[j]) +
            " | cofactor: " + to_string(nf.cofactors[j]) + "\n";
  }
  emit({{"command", "nf"},
        {"poly", to_string(g)},
        {"remainder", to_string(nf.remainder)},
        {"basis", basis},
        {"cofactors", cof}},
       o, text);
  return exit_ok;
}

int run_represent(const CommonOpts& o) {
  Ideal I = parse_ideal_file(o.ideal_path);
  Poly g = parse_poly(o.poly_text, I.mode, I.vars);
  auto rep = representation_from_cofactors(g, I, buchberger_z(I, make_order(o)));
  json cof = json::array();
  std::string text;
  for (std::size_t i = 0; i < rep.cofactors.size(); ++i) {
    cof.push_back(to_string(rep.cofactors[i]));
    text += "h" + std::to_string(i + 1) + ": " + to_string(rep.cofactors[i]) + "\n";
  }
  text += "bound: " + rep.norm_bound.str() + "\n";
  emit({{"command", "represent"},
        {"poly", to_string(g)},
        {"cofactors", cof},
        {"bound", rep.norm_bound.convert_to<std::int64_t>()}},
       o, text);
  return exit_ok;
}

int run_area(const CommonOpts& o) {
  Ideal I = parse_ideal_file(o.ideal_path);
  Poly g = parse_poly(o.poly_text, I.mode, I.vars);
  auto cert = area_exact(g, I, buchberger_z(I, make_order(o)), make_search(o));
  auto report = verify_certificate(cert, I);
  std::string serialized = serialize_certificate(cert);
  if (!o.cert_path.empty()) {
    std::ofstream out(o.cert_path);
    out << serialized;
  }
  json entries = json::array();
  for (const auto& e : cert.entries) {
    json shift = json::array();
    for (auto v : e.shift.e) shift.push_back(v);
    entries.push_back({{"gen", e.gen + 1}, {"sign", e.sign > 0 ? "+" : "-"}, {"shift", shift}});
  }
  std::string text = "area: " + std::to_string(cert.area()) + "\n" + serialized +
                     "degree_bound: " + (report.degree_bound_holds ? "ok" : "VIOLATED") + " (max " +
                     std::to_string(report.max_cofactor_degree) + " <= " +
                     std::to_string(report.degree_cap) + ")\n";
  emit({{"command", "area"},
        {"target", to_string(g)},
        {"area", cert.area()},
        {"entries", entries},
        {"certificate", serialized},
        {"valid", report.valid},
        {"degree_bound_holds", report.degree_bound_holds}},
       o, text);
  return exit_ok;
}

int run_table(const CommonOpts& o) {
  Ideal I = parse_ideal_file(o.ideal_path);
  auto table = complexity_table(I, buchberger_z(I, make_order(o)), o.max_m, o.max_n,
                                make_budget(o));
  std::string csv = table_csv(table);
  if (!o.csv_path.empty()) {
    std::ofstream out(o.csv_path);
    out << csv;
  }
  emit(table_json(table), o, csv);
  const bool all_exact = std::all_of(table.rows.begin(), table.rows.end(),
                                     [](const ComplexityCell& c) { return c.exact; });
  return all_exact ? exit_ok : exit_budget;
}

int run_word(const CommonOpts& o) {
  Poly g = parse_poly(o.poly_text, Mode::laurent, o.vars);
  const TermOrdering ordering =
      o.ordering == "input" ? TermOrdering::input : TermOrdering::greedy;
  if (o.ordering != "input" && o.ordering != "greedy")
    throw SyntaxError("ordering must be 'input' or 'greedy'", 0);
  GroupWord w = word_from_poly(g, ordering);
  emit({{"command", "word"},
        {"poly", to_string(g)},
        {"ordering", o.ordering},
        {"word", to_string(w)},
        {"length", w.length()}},
       o, to_string(w) + "\nlength: " + std::to_string(w.length()) + "\n");
  return exit_ok;
}

int run_collect(const CommonOpts& o) {
  GroupWord w = parse_word(o.word_text, o.vars);
  auto c = collect(w);
  json q = json::array();
  std::string qtext;
  for (auto v : c.q.e) {
    q.push_back(v);
    qtext += (qtext.empty() ? "" : " ") + std::to_string(v);
  }
  emit({{"command", "collect"}, {"word", to_string(w)}, {"f", to_string(c.f)}, {"q", q}}, o,
       "f: " + to_string(c.f) + "\nq: " + qtext + "\n");
  return exit_ok;
}

int run_trivial(const CommonOpts& o) {
  Ideal I = parse_ideal_file(o.ideal_path);
  GroupWord w = parse_word(o.word_text, I.vars);
  auto c = collect(w);
  const bool trivial = is_trivial(w, I, buchberger_z(I, make_order(o)));
  json q = json::array();
  for (auto v : c.q.e) q.push_back(v);
  emit({{"command", "trivial"}, {"trivial", trivial}, {"f", to_string(c.f)}, {"q", q}}, o,
       std::string("trivial: ") + (trivial ? "true" : "false") + "\n");
  return trivial ? exit_ok : exit_negative;
}

int run_dehn(const CommonOpts& o) {
  Ideal I = parse_ideal_file(o.ideal_path);
  auto point = dehn_datapoint(I, buchberger_z(I, make_order(o)), o.m, o.n, make_budget(o));
  std::cout << datapoint_json(point).dump() << '\n';
  return point.exact ? exit_ok : exit_budget;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact ideal membership, areas and complexity tables over Z"};
  app.require_subcommand(1);
  CommonOpts o;

  auto add_ideal = [&](CLI::App* cmd) {
    cmd->add_option("--ideal", o.ideal_path, "ideal description file")->required();
  };
  auto add_poly = [&](CLI::App* cmd) {
    cmd->add_option("--poly", o.poly_text, "polynomial in the x1..xk grammar")->required();
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", o.as_json, "emit a JSON object instead of text");
    cmd->add_option("--order", o.order_name, "monomial order: grevlex|grlex|lex");
    cmd->add_option("--var-order", o.var_order, "variable priority permutation (1-based)");
    cmd->add_option("--seed", o.seed, "reserved; computations are deterministic");
  };

  auto* member = app.add_subcommand("member", "decide ideal membership");
  add_ideal(member), add_poly(member), add_common(member);
  auto* nf = app.add_subcommand("nf", "normal form with cofactors");
  add_ideal(nf), add_poly(nf), add_common(nf);
  auto* represent = app.add_subcommand("represent", "representation over the generators");
  add_ideal(represent), add_poly(represent), add_common(represent);

  auto* area = app.add_subcommand("area", "exact area with certificate");
  add_ideal(area), add_poly(area), add_common(area);
  area->add_option("--max-area", o.max_area, "iterative deepening budget");
  area->add_option("--slack", o.slack, "extra search radius on top of the theorem bound");
  area->add_option("--pruning", o.pruning, "none|connectivity");
  area->add_option("--cert", o.cert_path, "write the certificate to this file");

  auto* table = app.add_subcommand("table", "complexity table over a (norm, degree) box");
  add_ideal(table), add_common(table);
  table->add_option("--max-m", o.max_m, "largest norm bound");
  table->add_option("--max-n", o.max_n, "largest degree bound");
  table->add_option("--max-area", o.max_area, "per-candidate area budget");
  table->add_option("--max-candidates", o.max_candidates, "enumeration budget");
  table->add_option("--time-ms", o.time_ms, "wall clock budget per cell");
  table->add_option("--csv", o.csv_path, "also write the CSV to this file");

  auto* word = app.add_subcommand("word", "group word of a polynomial");
  add_poly(word), add_common(word);
  word->add_option("--ordering", o.ordering, "term visit order: input|greedy");
  word->add_option("--vars", o.vars, "alphabet rank (default: inferred)");

  auto* coll = app.add_subcommand("collect", "wreath normal form of a word");
  add_common(coll);
  coll->add_option("--word", o.word_text, "letters: a A x1 X1 ...")->required();
  coll->add_option("--vars", o.vars, "alphabet rank (default: inferred)");

  auto* trivial = app.add_subcommand("trivial", "word problem in the group of the ideal");
  add_ideal(trivial), add_common(trivial);
  trivial->add_option("--word", o.word_text, "letters: a A x1 X1 ...")->required();

  auto* dehn = app.add_subcommand("dehn", "lower-bound datapoint for the relative Dehn function");
  add_ideal(dehn), add_common(dehn);
  dehn->add_option("--m", o.m, "norm bound")->required();
  dehn->add_option("--n", o.n, "degree bound")->required();
  dehn->add_option("--max-area", o.max_area, "per-candidate area budget");
  dehn->add_option("--max-candidates", o.max_candidates, "enumeration budget");
  dehn->add_option("--time-ms", o.time_ms, "wall clock budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (member->parsed()) return run_member(o);
    if (nf->parsed()) return run_nf(o);
    if (represent->parsed()) return run_represent(o);
    if (area->parsed()) return run_area(o);
    if (table->parsed()) return run_table(o);
    if (word->parsed()) return run_word(o);
    if (coll->parsed()) return run_collect(o);
    if (trivial->parsed()) return run_trivial(o);
    if (dehn->parsed()) return run_dehn(o);
  } catch (const NotMemberError& e) {
    std::cout << "not a member: " << e.what() << '\n';
    return exit_negative;
  } catch (const BudgetExceededError& e) {
    std::cout << "budget exhausted: " << e.what() << '\n';
    return exit_budget;
  } catch (const RadiusExhaustedError& e) {
    std::cout << "radius exhausted: " << e.what() << '\n';
    return exit_budget;
  } catch (const SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
