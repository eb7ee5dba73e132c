#include "cayleycodes/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

namespace cayleycodes {

const char* to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::cyclic: return "cyclic";
    case GroupKind::dihedral: return "dihedral";
    case GroupKind::abelian_product: return "abelian-product";
    case GroupKind::product: return "product";
    case GroupKind::table: return "table";
  }
  return "unknown";
}

const char* to_string(TableDefect defect) {
  switch (defect) {
    case TableDefect::not_square: return "not-square";
    case TableDefect::index_out_of_range: return "index-out-of-range";
    case TableDefect::no_identity: return "no-identity";
    case TableDefect::missing_inverse: return "missing-inverse";
    case TableDefect::not_latin_square: return "not-latin-square";
    case TableDefect::non_associative: return "non-associative";
  }
  return "unknown";
}

InvalidTable::InvalidTable(TableDefect defect, std::vector<std::size_t> witness,
                           const std::string& detail)
    : Error(std::string(to_string(defect)) + ": " + detail),
      defect_(defect),
      witness_(std::move(witness)) {}

namespace {

const char* to_string(ConnectionSetDefect defect) {
  switch (defect) {
    case ConnectionSetDefect::contains_identity: return "identity in connection set";
    case ConnectionSetDefect::not_inverse_closed: return "connection set not inverse-closed";
    case ConnectionSetDefect::out_of_range: return "element out of range";
  }
  return "invalid connection set";
}

}  // namespace

InvalidConnectionSet::InvalidConnectionSet(ConnectionSetDefect defect, Element witness)
    : Error(std::string(to_string(defect)) + " (element " + std::to_string(witness) + ")"),
      defect_(defect),
      witness_(witness) {}

ElementSet make_element_set(std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return elements;
}

struct FiniteGroup::Data {
  std::size_t n = 0;
  std::vector<Element> table;
  std::vector<Element> inverse;
  std::vector<std::size_t> orders;
  Element identity = 0;
  GroupKind kind = GroupKind::table;
  bool abelian = false;
  std::vector<std::string> labels;
  std::vector<std::size_t> cyclic_factors;
  std::size_t dihedral_degree = 0;
};

FiniteGroup::FiniteGroup(std::shared_ptr<const Data> data)
    : data_(std::move(data)),
      table_(data_->table.data()),
      n_(data_->n),
      identity_(data_->identity) {}

Element FiniteGroup::inv(Element x) const { return data_->inverse[x]; }

Element FiniteGroup::pow(Element x, long long k) const {
  const auto ord = static_cast<long long>(data_->orders[x]);
  k %= ord;
  if (k < 0) k += ord;
  Element result = identity_;
  for (long long i = 0; i < k; ++i) result = mul(result, x);
  return result;
}

std::size_t FiniteGroup::element_order(Element x) const { return data_->orders[x]; }
GroupKind FiniteGroup::kind() const { return data_->kind; }
bool FiniteGroup::is_abelian() const { return data_->abelian; }
const std::string& FiniteGroup::label(Element x) const { return data_->labels[x]; }
const std::vector<std::size_t>& FiniteGroup::cyclic_factors() const { return data_->cyclic_factors; }
std::size_t FiniteGroup::dihedral_degree() const { return data_->dihedral_degree; }

FiniteGroup GroupAssembler::assemble(std::size_t n, std::vector<Element> table, GroupKind kind,
                                     std::vector<std::string> labels,
                                     std::vector<std::size_t> cyclic_factors,
                                     std::size_t dihedral_degree) {
  auto data = std::make_shared<FiniteGroup::Data>();
  data->n = n;
  data->table = std::move(table);
  data->kind = kind;
  data->cyclic_factors = std::move(cyclic_factors);
  data->dihedral_degree = dihedral_degree;

  const auto at = [&](std::size_t x, std::size_t y) { return data->table[x * n + y]; };
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = at(e, x) == x && at(x, e) == x;
    if (ok) {
      data->identity = static_cast<Element>(e);
      break;
    }
  }
  data->inverse.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (at(x, y) == data->identity) {
        data->inverse[x] = static_cast<Element>(y);
        break;
      }
  data->orders.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t k = 1;
    Element p = static_cast<Element>(x);
    while (p != data->identity) {
      p = at(p, x);
      ++k;
    }
    data->orders[x] = k;
  }
  data->abelian = true;
  for (std::size_t x = 0; x < n && data->abelian; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (at(x, y) != at(y, x)) {
        data->abelian = false;
        break;
      }
  if (labels.size() != n) {
    labels.resize(n);
    for (std::size_t x = 0; x < n; ++x) labels[x] = std::to_string(x);
  }
  data->labels = std::move(labels);
  return FiniteGroup(std::move(data));
}

namespace {

std::string power_label(const std::string& base, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

}  // namespace

FiniteGroup make_cyclic(std::size_t n) {
  if (n == 0) throw NotApplicable("cyclic group order must be positive");
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "e" : power_label("a", i);
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>((i + j) % n);
  }
  return GroupAssembler::assemble(n, std::move(table), GroupKind::cyclic, std::move(labels), {n});
}

FiniteGroup make_dihedral(std::size_t n) {
  if (n < 3) throw NotApplicable("dihedral degree must be at least 3, got " + std::to_string(n));
  const std::size_t order = 2 * n;
  std::vector<Element> table(order * order);
  std::vector<std::string> labels(order);
  // a^i a^j = a^(i+j), a^i a^j b = a^(i+j) b, a^i b a^j = a^(i-j) b, a^i b a^j b = a^(i-j).
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % n;
    const bool xr = x >= n;
    labels[x] = (xr ? (i == 0 ? "b" : power_label("a", i) + "b") : (i == 0 ? "e" : power_label("a", i)));
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t j = y % n;
      const bool yr = y >= n;
      const std::size_t rot = xr ? (i + n - j) % n : (i + j) % n;
      table[x * order + y] = static_cast<Element>((xr != yr ? n : 0) + rot);
    }
  }
  return GroupAssembler::assemble(order, std::move(table), GroupKind::dihedral, std::move(labels), {}, n);
}

namespace {

std::vector<std::size_t> radix_decode(std::size_t index, const std::vector<std::size_t>& radices) {
  std::vector<std::size_t> digits(radices.size());
  for (std::size_t k = radices.size(); k-- > 0;) {
    digits[k] = index % radices[k];
    index /= radices[k];
  }
  return digits;
}

}  // namespace

FiniteGroup make_abelian(const std::vector<std::size_t>& orders) {
  if (orders.empty()) throw NotApplicable("abelian group needs at least one cyclic factor");
  for (auto m : orders)
    if (m < 2) throw NotApplicable("cyclic factor orders must be at least 2");
  const std::size_t n = std::accumulate(orders.begin(), orders.end(), std::size_t{1}, std::multiplies<>());
  std::vector<std::vector<std::size_t>> tuples(n);
  for (std::size_t x = 0; x < n; ++x) tuples[x] = radix_decode(x, orders);
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::string label;
    for (std::size_t k = 0; k < orders.size(); ++k) {
      if (tuples[x][k] == 0) continue;
      if (!label.empty()) label += "*";
      label += power_label("a" + std::to_string(k + 1), tuples[x][k]);
    }
    labels[x] = label.empty() ? "e" : label;
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t index = 0;
      for (std::size_t k = 0; k < orders.size(); ++k)
        index = index * orders[k] + (tuples[x][k] + tuples[y][k]) % orders[k];
      table[x * n + y] = static_cast<Element>(index);
    }
  }
  return GroupAssembler::assemble(n, std::move(table), GroupKind::abelian_product, std::move(labels), orders);
}

FiniteGroup from_table(const std::vector<std::vector<std::size_t>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw InvalidTable(TableDefect::not_square, {}, "empty table");
  for (std::size_t i = 0; i < n; ++i)
    if (rows[i].size() != n)
      throw InvalidTable(TableDefect::not_square, {i},
                         "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) + " entries");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rows[i][j] >= n)
        throw InvalidTable(TableDefect::index_out_of_range, {i, j},
                           "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = rows[e][x] == x && rows[x][e] == x;
    if (ok) identity = e;
  }
  if (!identity) throw InvalidTable(TableDefect::no_identity, {}, "no two-sided identity");
  const std::size_t e = *identity;

  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y) found = rows[x][y] == e && rows[y][x] == e;
    if (!found) throw InvalidTable(TableDefect::missing_inverse, {x}, "element " + std::to_string(x));
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[rows[i][j]])
        throw InvalidTable(TableDefect::not_latin_square, {i, j},
                           "row " + std::to_string(i) + " repeats at column " + std::to_string(j));
      seen[rows[i][j]] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[rows[i][j]])
        throw InvalidTable(TableDefect::not_latin_square, {i, j},
                           "column " + std::to_string(j) + " repeats at row " + std::to_string(i));
      seen[rows[i][j]] = true;
    }
  }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (rows[rows[x][y]][z] != rows[x][rows[y][z]]) {
          std::ostringstream os;
          os << "(" << x << "*" << y << ")*" << z << " != " << x << "*(" << y << "*" << z << ")";
          throw InvalidTable(TableDefect::non_associative, {x, y, z}, os.str());
        }

  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>(rows[i][j]);
  return GroupAssembler::assemble(n, std::move(table), GroupKind::table, {});
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  const std::size_t n = ng * nh;
  std::vector<Element> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto xg = static_cast<Element>(x / nh);
    const auto xh = static_cast<Element>(x % nh);
    labels[x] = "(" + g.label(xg) + "," + h.label(xh) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const auto yg = static_cast<Element>(y / nh);
      const auto yh = static_cast<Element>(y % nh);
      table[x * n + y] = static_cast<Element>(g.mul(xg, yg) * nh + h.mul(xh, yh));
    }
  }
  std::vector<std::size_t> factors;
  if (!g.cyclic_factors().empty() && !h.cyclic_factors().empty()) {
    factors = g.cyclic_factors();
    factors.insert(factors.end(), h.cyclic_factors().begin(), h.cyclic_factors().end());
  }
  return GroupAssembler::assemble(n, std::move(table), GroupKind::product, std::move(labels), std::move(factors));
}

FiniteGroup from_permutations(const std::vector<std::vector<std::size_t>>& generators) {
  const std::size_t degree = generators.empty() ? 0 : generators.front().size();
  for (const auto& p : generators) {
    if (p.size() != degree) throw NotApplicable("permutation generators must share a degree");
    std::vector<bool> hit(degree, false);
    for (auto v : p) {
      if (v >= degree || hit[v]) throw NotApplicable("generator is not a permutation");
      hit[v] = true;
    }
  }
  using Perm = std::vector<std::size_t>;
  const auto compose = [](const Perm& x, const Perm& y) {
    Perm r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[y[i]];
    return r;
  };
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::map<Perm, Element> index;
  std::vector<Perm> elements{id};
  index.emplace(id, 0);
  for (std::size_t k = 0; k < elements.size(); ++k)
    for (const auto& s : generators) {
      Perm p = compose(elements[k], s);
      if (index.emplace(p, 0).second) elements.push_back(std::move(p));
    }
  std::sort(elements.begin(), elements.end());
  for (std::size_t k = 0; k < elements.size(); ++k) index[elements[k]] = static_cast<Element>(k);
  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) table[x * n + y] = index.at(compose(elements[x], elements[y]));
  return GroupAssembler::assemble(n, std::move(table), GroupKind::table, {});
}

FiniteGroup make_symmetric(std::size_t degree) {
  if (degree < 2) return make_cyclic(1);
  std::vector<std::size_t> transposition(degree), cycle(degree);
  std::iota(transposition.begin(), transposition.end(), 0);
  std::swap(transposition[0], transposition[1]);
  for (std::size_t i = 0; i < degree; ++i) cycle[i] = (i + 1) % degree;
  return from_permutations({transposition, cycle});
}

FiniteGroup make_alternating(std::size_t degree) {
  if (degree < 3) return make_cyclic(1);
  std::vector<std::vector<std::size_t>> gens;
  for (std::size_t k = 2; k < degree; ++k) {
    std::vector<std::size_t> p(degree);
    std::iota(p.begin(), p.end(), 0);
    p[0] = 1;
    p[1] = k;
    p[k] = 0;
    gens.push_back(std::move(p));
  }
  return from_permutations(gens);
}

ElementSet centre(const FiniteGroup& g) {
  ElementSet z;
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return z;
}

std::vector<std::size_t> order_statistics(const FiniteGroup& g) {
  std::vector<std::size_t> orders(g.order());
  for (Element x = 0; x < g.order(); ++x) orders[x] = g.element_order(x);
  std::sort(orders.begin(), orders.end());
  return orders;
}

bool is_cyclic_group(const FiniteGroup& g) {
  for (Element x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return true;
  return false;
}

}  // namespace cayleycodes
