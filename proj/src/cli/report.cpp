#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace cayleycodes::report {

json indices(const std::vector<Element>& s) {
  json out = json::array();
  for (auto x : s) out.push_back(x);
  return out;
}

std::string labels(const FiniteGroup& g, const std::vector<Element>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + g.label(s[i]);
  return out + "}";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json witness_json(const Witness& w) {
  if (const auto* f = std::get_if<FailingElement>(&w)) return {{"type", "failing_g"}, {"value", f->g}};
  if (const auto* s = std::get_if<ConnectionSet>(&w)) return {{"type", "connection_set"}, {"value", indices(s->elements())}};
  return {{"type", "none"}, {"value", nullptr}};
}

std::string witness_text(const FiniteGroup& g, const Witness& w) {
  if (const auto* f = std::get_if<FailingElement>(&w)) return "g=" + g.label(f->g);
  if (const auto* s = std::get_if<ConnectionSet>(&w)) return "S=" + labels(g, s->elements());
  return "-";
}

json verdict_json(const std::string& spec, const Subgroup& h, const CriterionVerdict& v) {
  return {{"group", spec},
          {"subgroup", indices(h.elements())},
          {"perfect", v.perfect},
          {"total_perfect", v.total},
          {"method", to_string(v.method)},
          {"witness", witness_json(v.witness)}};
}

json pcp_json(const std::string& spec, const PcpReport& r) {
  json ce = nullptr;
  if (r.counterexample) ce = {{"S", indices(r.counterexample->s.elements())}, {"C", indices(r.counterexample->c)}};
  return {{"group", spec},
          {"sigma", indices(r.automorphism.map())},
          {"power", r.power},
          {"preserving", r.preserving},
          {"scope", to_string(r.scope)},
          {"seed", r.seed ? json(*r.seed) : json(nullptr)},
          {"counterexample", ce}};
}

json suite_json(const SuiteResult& r, std::uint64_t seed) {
  return {{"suite", r.name},  {"max_order", r.max_order}, {"seed", seed},
          {"groups", r.groups}, {"checks", r.checks},       {"failures", r.failures},
          {"passed", r.passed()}, {"messages", r.messages}};
}

std::string Table::render() const {
  std::vector<std::size_t> width;
  for (const auto& row : rows_) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  for (const auto& row : rows_) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
  return out.str();
}

}  // namespace cayleycodes::report
