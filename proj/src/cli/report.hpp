#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "cayleycodes/criteria.hpp"
#include "cayleycodes/pcp.hpp"
#include "cayleycodes/suites.hpp"

namespace cayleycodes::report {

using nlohmann::json;

json indices(const std::vector<Element>& s);
std::string labels(const FiniteGroup& g, const std::vector<Element>& s);  // {x, y, ...}
std::string yes_no(bool b);

json witness_json(const Witness& w);
std::string witness_text(const FiniteGroup& g, const Witness& w);

json verdict_json(const std::string& spec, const Subgroup& h, const CriterionVerdict& v);
json pcp_json(const std::string& spec, const PcpReport& r);
json suite_json(const SuiteResult& r, std::uint64_t seed);

// Left-aligned columns separated by two spaces, widths from the widest cell.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  std::string render() const;

 private:
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace cayleycodes::report
