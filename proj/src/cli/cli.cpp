#include "cayleycodes/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>

#include "cayleycodes/automorphism.hpp"
#include "cayleycodes/group_ring.hpp"
#include "cayleycodes/group_spec.hpp"
#include "report.hpp"

namespace cayleycodes {

namespace {

using report::json;

struct Options {
  std::string format = "text";
  std::optional<std::size_t> max_order;
  std::string spec;
  std::string conn;
  std::string code;
  std::string subgroup;
  bool total = false;
  std::string suite;
  std::uint64_t seed = SuiteOptions{}.seed;
  bool seed_given = false;
  bool pcp = false;
  std::size_t budget = default_pcp_budget;
};

// What a command hands back: the JSON payload, its text rendering and the exit code.
struct Outcome {
  json results;
  std::string text;
  int code = exit_ok;
};

Bounds command_bounds(const Options& o) {
  Bounds b = default_bounds();
  if (o.max_order) {
    b.subgroup_max_order = b.automorphism_max_order = b.enumerate_max_order = b.generic_max_order = *o.max_order;
  }
  return b;
}

Subgroup parse_subgroup(const FiniteGroup& g, const std::string& text) {
  return subgroup_generated(g, parse_element_list(g, text));
}

std::string generators_text(const FiniteGroup& g, const Subgroup& h) {
  if (h.is_trivial()) return "<e>";
  std::string out = "<";
  for (std::size_t i = 0; i < h.generators().size(); ++i) out += (i ? ", " : "") + g.label(h.generators()[i]);
  return out + ">";
}

std::string header(const std::string& spec, const FiniteGroup& g) {
  return "group: " + spec + " (order " + std::to_string(g.order()) + ")\n";
}

Outcome cmd_classify(const Options& o) {
  const Bounds bounds = command_bounds(o);
  const FiniteGroup g = parse_group_spec(o.spec);
  std::vector<Subgroup> subgroups;
  if (!o.subgroup.empty())
    subgroups.push_back(parse_subgroup(g, o.subgroup));
  else
    subgroups = all_subgroups(g, bounds);
  Outcome out;
  json rows = json::array();
  report::Table table({"subgroup", "order", "index", "normal", "perfect", "total", "method", "witness"});
  for (const auto& h : subgroups) {
    const auto v = classify_subgroup(g, h, bounds);
    const bool normal = is_normal(g, h);
    json row = report::verdict_json(o.spec, h, v);
    row["order"] = h.order();
    row["index"] = index_of(g, h);
    row["normal"] = normal;
    rows.push_back(std::move(row));
    table.add({generators_text(g, h), std::to_string(h.order()), std::to_string(index_of(g, h)), report::yes_no(normal),
               report::yes_no(v.perfect), report::yes_no(v.total), to_string(v.method), report::witness_text(g, v.witness)});
  }
  out.results = {{"group", o.spec}, {"order", g.order()}, {"subgroups", rows}};
  out.text = header(o.spec, g) + table.render();
  return out;
}

Outcome cmd_check(const Options& o) {
  const FiniteGroup g = parse_group_spec(o.spec);
  const auto s = ConnectionSet::make(g, parse_element_list(g, o.conn));
  const CodeCandidate c = make_element_set(parse_element_list(g, o.code));
  const CayleyGraph graph(g, s);
  const bool perfect = is_perfect_code(graph, c);
  const bool total = is_total_perfect_code(graph, c);
  const bool definition = o.total ? total : perfect;
  const bool ring = o.total ? group_ring_check_total(g, s, c) : group_ring_check_perfect(g, s, c);
  std::optional<bool> transversal;
  if (is_subgroup(g, c)) transversal = subgroup_code_transversal_check(g, subgroup_generated(g, c), s, o.total);

  Outcome out;
  out.results = {{"group", o.spec},
                 {"connection_set", report::indices(s.elements())},
                 {"code", report::indices(c)},
                 {"property", o.total ? "total" : "perfect"},
                 {"perfect", perfect},
                 {"total_perfect", total},
                 {"checks",
                  {{"definition", definition},
                   {"group_ring", ring},
                   {"transversal", transversal ? json(*transversal) : json(nullptr)}}}};
  report::Table table({"check", "result"});
  table.add({"definition", report::yes_no(definition)});
  table.add({"group-ring", report::yes_no(ring)});
  table.add({"transversal", transversal ? report::yes_no(*transversal) : "n/a"});
  out.text = header(o.spec, g) + "connection set: " + report::labels(g, s.elements()) + "\ncode: " +
             report::labels(g, c) + "\nperfect: " + report::yes_no(perfect) + "\ntotal perfect: " +
             report::yes_no(total) + "\n" + table.render();
  const bool agree = ring == definition && (!transversal || *transversal == definition);
  if (!agree) {
    out.text += "checks disagree\n";
    out.code = exit_verification;
  }
  return out;
}

Outcome cmd_enumerate(const Options& o) {
  const Bounds bounds = command_bounds(o);
  const FiniteGroup g = parse_group_spec(o.spec);
  const auto s = ConnectionSet::make(g, parse_element_list(g, o.conn));
  const auto codes = enumerate_perfect_codes(CayleyGraph(g, s), o.total, bounds);
  Outcome out;
  json list = json::array();
  for (const auto& c : codes) list.push_back(report::indices(c));
  out.results = {{"group", o.spec},
                 {"connection_set", report::indices(s.elements())},
                 {"total", o.total},
                 {"count", codes.size()},
                 {"codes", list}};
  out.text = header(o.spec, g) + "connection set: " + report::labels(g, s.elements()) + "\n" +
             (o.total ? "total perfect codes: " : "perfect codes: ") + std::to_string(codes.size()) + "\n";
  for (const auto& c : codes) out.text += "  " + report::labels(g, c) + "\n";
  return out;
}

Outcome cmd_construct(const Options& o) {
  const Bounds bounds = command_bounds(o);
  const FiniteGroup g = parse_group_spec(o.spec);
  if (o.subgroup.empty()) throw ParseError("construct needs --subgroup");
  const Subgroup h = parse_subgroup(g, o.subgroup);
  Outcome out;
  out.results = {{"group", o.spec}, {"subgroup", report::indices(h.elements())}, {"total", o.total}};
  const std::string kind = o.total ? "total perfect code" : "perfect code";
  out.text = header(o.spec, g) + "subgroup: " + generators_text(g, h) + " = " + report::labels(g, h.elements()) + "\n";

  auto fail = [&](const std::string& why, const Witness& w) {
    out.results["constructed"] = false;
    out.results["reason"] = why;
    out.results["witness"] = report::witness_json(w);
    out.text += "no " + kind + " connection set: " + why;
    if (!std::holds_alternative<std::monostate>(w)) out.text += ", witness " + report::witness_text(g, w);
    out.text += "\n";
    out.code = exit_verification;
    return out;
  };

  std::optional<ConnectionSet> set;
  std::string method;
  std::string note;
  const auto params = g.dihedral_degree() != 0 && h.order() != g.order() ? dihedral_parameters(g, h) : std::nullopt;
  if (params) {
    const auto sets = dihedral_construct_sets(g, params->first, params->second);
    set = o.total ? sets.total_set : sets.perfect_set;
    method = to_string(Method::dihedral);
  } else if (is_normal(g, h)) {
    const auto p1 = property_one_holds(g, h);
    if (!p1.holds) return fail("property (1) fails", FailingElement{*p1.witness});
    if (o.total && h.order() % 2 != 0) return fail("|H| is odd", std::monostate{});
    set = construct_connection_set_normal(g, h, o.total);
    method = to_string(Method::property1);
  } else {
    const auto v = generic_subgroup_code_decision(g, h, o.total, bounds);
    if (!std::holds_alternative<ConnectionSet>(v.witness)) return fail("generic search found no transversal", std::monostate{});
    set = std::get<ConnectionSet>(v.witness);
    method = to_string(Method::generic_search);
    note = "no explicit construction applies; connection set taken from the generic search\n";
  }

  const CayleyGraph graph(g, *set);
  const bool verified = o.total ? is_total_perfect_code(graph, h.elements()) : is_perfect_code(graph, h.elements());
  if (!verified) throw Defect("constructed connection set failed definitional verification");
  out.results["constructed"] = true;
  out.results["method"] = method;
  out.results["connection_set"] = report::indices(set->elements());
  out.results["verified"] = true;
  out.text += note + "method: " + method + "\n" + (o.total ? "R = " : "S = ") + report::labels(g, set->elements()) +
              "\nverified: H is a " + kind + " in Cay(G, " + (o.total ? "R" : "S") + ")\n";
  return out;
}

Outcome cmd_verify(const Options& o) {
  std::vector<std::string> names;
  if (o.suite == "all")
    names = suite_names();
  else
    names.push_back(o.suite);
  SuiteOptions so;
  so.max_order = o.max_order;
  so.seed = o.seed;
  Outcome out;
  json list = json::array();
  report::Table table({"suite", "max-order", "groups", "checks", "failures", "result"});
  std::string failures;
  for (const auto& name : names) {
    const auto r = run_suite(name, so);
    list.push_back(report::suite_json(r, so.seed));
    table.add({r.name, std::to_string(r.max_order), std::to_string(r.groups), std::to_string(r.checks),
               std::to_string(r.failures), r.passed() ? "pass" : "FAIL"});
    for (const auto& m : r.messages) failures += "  " + r.name + ": " + m + "\n";
    if (!r.passed()) out.code = exit_verification;
  }
  out.results = names.size() == 1 ? list.front() : json{{"suites", list}};
  out.text = table.render() + failures;
  return out;
}

std::string map_text(const FiniteGroup& g, const Automorphism& a) {
  std::string out;
  for (auto x : greedy_generators(g)) out += (out.empty() ? "" : ", ") + g.label(x) + "->" + g.label(a(x));
  return out.empty() ? "id" : out;
}

Outcome cmd_automorphisms(const Options& o) {
  const Bounds bounds = command_bounds(o);
  const FiniteGroup g = parse_group_spec(o.spec);
  const auto autos = all_automorphisms(g, bounds);
  PcpOptions po;
  po.budget = o.budget;
  po.seed = o.seed_given ? o.seed : default_pcp_seed;
  Outcome out;
  json list = json::array();
  std::vector<std::string> cols{"#", "map", "power"};
  if (o.pcp) cols.insert(cols.end(), {"pcp", "tpcp", "scope", "counterexample"});
  report::Table table(cols);
  std::size_t preserving = 0;
  for (std::size_t i = 0; i < autos.size(); ++i) {
    const auto& a = autos[i];
    const bool power = is_power_automorphism(g, a);
    json entry = {{"sigma", report::indices(a.map())}, {"power", power}, {"pcp", nullptr}, {"tpcp", nullptr}};
    std::vector<std::string> row{std::to_string(i), map_text(g, a), report::yes_no(power)};
    if (o.pcp) {
      const auto p = is_pcp_automorphism(g, a, po, bounds);
      const auto t = is_tpcp_automorphism(g, a, po, bounds);
      entry["pcp"] = report::pcp_json(o.spec, p);
      entry["tpcp"] = report::pcp_json(o.spec, t);
      if (p.preserving) ++preserving;
      std::string ce = "-";
      if (p.counterexample)
        ce = "S=" + report::labels(g, p.counterexample->s.elements()) + " C=" + report::labels(g, p.counterexample->c);
      row.insert(row.end(), {report::yes_no(p.preserving), report::yes_no(t.preserving), to_string(p.scope), ce});
    }
    list.push_back(std::move(entry));
    table.add(std::move(row));
  }
  out.results = {{"group", o.spec}, {"count", autos.size()}, {"automorphisms", list}};
  out.text = header(o.spec, g) + "automorphisms: " + std::to_string(autos.size()) + "\n";
  if (o.pcp) out.text += "perfect-code-preserving: " + std::to_string(preserving) + "\n";
  out.text += table.render();
  return out;
}

int emit(const std::string& command, const std::vector<std::string>& args, const Options& o, Outcome outcome,
         double seconds, std::ostream& out) {
  if (o.format == "json") {
    json doc = {{"command", command},
                {"args", args},
                {"group", o.spec.empty() ? json(nullptr) : json(o.spec)},
                {"results", std::move(outcome.results)},
                {"timing", {{"seconds", seconds}}},
                {"version", tool_version}};
    out << doc.dump(2) << '\n';
  } else {
    out << outcome.text;
  }
  return outcome.code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perfect codes and total perfect codes in Cayley graphs of finite groups", "cayleycodes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", tool_version);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-order", o.max_order, "Order limit for exhaustive routines (suite range for verify)")
      ->check(CLI::PositiveNumber);

  auto spec_arg = [&](CLI::App* sub) { sub->add_option("spec", o.spec, "Group spec, e.g. cyclic:12")->required(); };

  auto* classify = app.add_subcommand("classify", "Classify subgroups as perfect / total perfect codes");
  spec_arg(classify);
  classify->add_option("--subgroup", o.subgroup, "Generators of one subgroup, comma-separated");

  auto* check = app.add_subcommand("check", "Check a code in Cay(G, S) three ways");
  spec_arg(check);
  check->add_option("--conn", o.conn, "Connection set S")->required();
  check->add_option("--code", o.code, "Code C")->required();
  check->add_flag("--total", o.total, "Check total perfect code");

  auto* enumerate = app.add_subcommand("enumerate", "List every (total) perfect code of Cay(G, S)");
  spec_arg(enumerate);
  enumerate->add_option("--conn", o.conn, "Connection set S")->required();
  enumerate->add_flag("--total", o.total, "Total perfect codes");

  auto* construct = app.add_subcommand("construct", "Build a connection set making H a (total) perfect code");
  spec_arg(construct);
  construct->add_option("--subgroup", o.subgroup, "Generators of H, comma-separated")->required();
  construct->add_flag("--total", o.total, "Total perfect code");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite, "Suite name or 'all'")->required();
  auto* seed_opt = verify->add_option("--seed", o.seed, "Seed for sampled checks");

  auto* automorphisms = app.add_subcommand("automorphisms", "List automorphisms with power / PCP flags");
  spec_arg(automorphisms);
  automorphisms->add_flag("--pcp", o.pcp, "Test perfect-code preservation");
  automorphisms->add_option("--budget", o.budget, "Connection sets sampled past the exhaustive limit")
      ->check(CLI::PositiveNumber);
  auto* aut_seed = automorphisms->add_option("--seed", o.seed, "Seed for sampled mode");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }
  o.seed_given = seed_opt->count() > 0 || aut_seed->count() > 0;

  const std::vector<std::pair<CLI::App*, std::function<Outcome(const Options&)>>> commands = {
      {classify, cmd_classify}, {check, cmd_check},   {enumerate, cmd_enumerate},
      {construct, cmd_construct}, {verify, cmd_verify}, {automorphisms, cmd_automorphisms}};
  try {
    for (const auto& [sub, run] : commands) {
      if (!sub->parsed()) continue;
      const auto start = std::chrono::steady_clock::now();
      Outcome outcome = run(o);
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return emit(sub->get_name(), args, o, std::move(outcome), seconds, out);
    }
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return exit_bound;
  } catch (const PropertyOneFails& e) {
    err << "error: " << e.what() << '\n';
    return exit_verification;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_verification;
  }
  return exit_usage;
}

}  // namespace cayleycodes
