#include "cayleycodes/group_spec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace cayleycodes {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::size_t parse_size(std::string_view text, std::string_view context) {
  text = trim(text);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError(std::string(context) + ": expected a non-negative integer, got '" + std::string(text) + "'");
  return value;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Index of the parenthesis closing the one at `open`.
std::size_t matching_paren(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i;
  }
  throw ParseError("unbalanced parentheses in group spec");
}

}  // namespace

FiniteGroup parse_group_spec(std::string_view spec) {
  spec = trim(spec);
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ParseError("group spec needs KIND:ARGS, got '" + std::string(spec) + "'");
  const std::string kind = lower(trim(spec.substr(0, colon)));
  const std::string_view args = trim(spec.substr(colon + 1));

  try {
    if (kind == "cyclic") {
      const auto n = parse_size(args, "cyclic order");
      if (n == 0) throw ParseError("cyclic order must be positive");
      return make_cyclic(n);
    }
    if (kind == "dihedral") return make_dihedral(parse_size(args, "dihedral degree"));
    if (kind == "abelian") {
      std::vector<std::size_t> orders;
      std::size_t start = 0;
      while (start <= args.size()) {
        const auto comma = args.find(',', start);
        const auto piece = args.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        orders.push_back(parse_size(piece, "abelian factor"));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      return make_abelian(orders);
    }
    if (kind == "product") {
      if (args.empty() || args.front() != '(') throw ParseError("product spec must look like (SPEC)x(SPEC)");
      const auto close = matching_paren(args, 0);
      const auto rest = trim(args.substr(close + 1));
      if (rest.size() < 3 || std::tolower(static_cast<unsigned char>(rest.front())) != 'x')
        throw ParseError("product spec must look like (SPEC)x(SPEC)");
      const auto second = trim(rest.substr(1));
      if (second.front() != '(' || matching_paren(second, 0) != second.size() - 1)
        throw ParseError("product spec must look like (SPEC)x(SPEC)");
      return direct_product(parse_group_spec(args.substr(1, close - 1)),
                            parse_group_spec(second.substr(1, second.size() - 2)));
    }
    if (kind == "table") return load_table_file(std::filesystem::path(std::string(args)));
  } catch (const NotApplicable& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown group kind '" + kind + "'");
}

FiniteGroup read_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("table file is empty");
  const auto n = parse_size(line, "table order");
  if (n == 0) throw ParseError("table order must be positive");
  std::vector<std::vector<std::size_t>> rows;
  rows.reserve(n);
  while (rows.size() < n && std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::istringstream ls(line);
    std::vector<std::size_t> row;
    std::string token;
    while (ls >> token) row.push_back(parse_size(token, "table entry"));
    rows.push_back(std::move(row));
  }
  if (rows.size() != n)
    throw ParseError("table file declares " + std::to_string(n) + " rows but has " + std::to_string(rows.size()));
  FiniteGroup g = from_table(rows);
  if (g.identity() != 0) throw ParseError("table identity must be index 0, found " + std::to_string(g.identity()));
  return g;
}

FiniteGroup load_table_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open table file '" + path.string() + "'");
  return read_table(in);
}

void write_table(const FiniteGroup& g, std::ostream& out) {
  out << g.order() << '\n';
  for (Element x = 0; x < g.order(); ++x) {
    for (Element y = 0; y < g.order(); ++y) out << (y ? " " : "") << g.mul(x, y);
    out << '\n';
  }
}

std::vector<std::pair<std::string, Element>> generator_names(const FiniteGroup& g) {
  std::vector<std::pair<std::string, Element>> names{{"e", g.identity()}};
  if (g.dihedral_degree() != 0) {
    names.emplace_back("a", 1);
    names.emplace_back("b", static_cast<Element>(g.dihedral_degree()));
    return names;
  }
  const auto& factors = g.cyclic_factors();
  if (factors.empty()) return names;
  std::size_t stride = g.order();
  for (std::size_t k = 0; k < factors.size(); ++k) {
    stride /= factors[k];
    const auto unit = static_cast<Element>(factors[k] > 1 ? stride : 0);
    names.emplace_back("a" + std::to_string(k + 1), unit);
    if (factors.size() == 1) names.emplace_back("a", unit);
  }
  return names;
}

Element parse_element(const FiniteGroup& g, std::string_view expr) {
  expr = trim(expr);
  if (expr.empty()) throw ParseError("empty element expression");
  if (all_digits(expr)) {
    const auto index = parse_size(expr, "element index");
    if (index >= g.order())
      throw ParseError("element index " + std::to_string(index) + " out of range for order " + std::to_string(g.order()));
    return static_cast<Element>(index);
  }
  const auto names = generator_names(g);
  const std::string text = lower(expr);
  Element result = g.identity();
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*') {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(text[i])))
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "' in '" + std::string(expr) + "'");
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    const std::string name = text.substr(i, j - i);
    auto it = std::find_if(names.begin(), names.end(), [&](const auto& p) { return p.first == name; });
    if (it == names.end()) throw ParseError("unknown generator '" + name + "' for this group");
    long long exponent = 1;
    if (j < text.size() && text[j] == '^') {
      std::size_t k = j + 1;
      bool negative = false;
      if (k < text.size() && text[k] == '-') {
        negative = true;
        ++k;
      }
      std::size_t end = k;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == k) throw ParseError("missing exponent after '^' in '" + std::string(expr) + "'");
      exponent = static_cast<long long>(parse_size(std::string_view(text).substr(k, end - k), "exponent"));
      if (negative) exponent = -exponent;
      j = end;
    }
    result = g.mul(result, g.pow(it->second, exponent));
    i = j;
  }
  return result;
}

std::vector<Element> parse_element_list(const FiniteGroup& g, std::string_view text) {
  std::vector<Element> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_element(g, text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace cayleycodes
