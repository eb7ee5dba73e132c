#include "cayleycodes/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "cayleycodes/errors.hpp"

namespace cayleycodes {

namespace {

std::mutex cache_mutex;
std::map<std::size_t, IntPoly> phi_cache;
std::map<std::size_t, std::vector<IntPoly>> reduction_cache;

// Quotient of an exact division by a monic divisor.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw Defect("cyclotomic division: degree too small");
  IntPoly q(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const std::int64_t c = num[i];
    q[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (std::size_t j = 0; j < dd; ++j)
    if (num[j] != 0) throw Defect("cyclotomic division left a remainder");
  return q;
}

const IntPoly& phi_locked(std::size_t m) {
  if (auto it = phi_cache.find(m); it != phi_cache.end()) return it->second;
  IntPoly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (std::size_t d = 1; d < m; ++d)
    if (m % d == 0) p = divide_exact(std::move(p), phi_locked(d));
  return phi_cache.emplace(m, std::move(p)).first->second;
}

}  // namespace

const IntPoly& cyclotomic_polynomial(std::size_t m) {
  if (m == 0) throw NotApplicable("cyclotomic polynomial of order 0");
  std::lock_guard lock(cache_mutex);
  return phi_locked(m);
}

const std::vector<IntPoly>& cyclotomic_reductions(std::size_t m) {
  const IntPoly& phi = cyclotomic_polynomial(m);
  std::lock_guard lock(cache_mutex);
  if (auto it = reduction_cache.find(m); it != reduction_cache.end()) return it->second;
  const std::size_t deg = phi.size() - 1;
  std::vector<IntPoly> table;
  table.reserve(m);
  IntPoly cur(deg, 0);
  if (deg > 0) cur[0] = 1;
  for (std::size_t k = 0; k < m; ++k) {
    table.push_back(cur);
    if (deg == 0) continue;
    // multiply by x and fold x^deg = -(phi_0 + ... + phi_{deg-1} x^{deg-1})
    const std::int64_t top = cur[deg - 1];
    for (std::size_t j = deg - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    for (std::size_t j = 0; j < deg; ++j) cur[j] -= top * phi[j];
  }
  return reduction_cache.emplace(m, std::move(table)).first->second;
}

CyclotomicSum CyclotomicSum::integer(std::size_t m, std::int64_t value) {
  CyclotomicSum s(m);
  s.coeffs_[0] = value;
  return s;
}

namespace {

void require_same(const CyclotomicSum& a, const CyclotomicSum& b) {
  if (a.modulus() != b.modulus()) throw NotApplicable("cyclotomic sums over different roots of unity");
}

}  // namespace

CyclotomicSum CyclotomicSum::operator+(const CyclotomicSum& other) const {
  require_same(*this, other);
  CyclotomicSum out = *this;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) out.coeffs_[j] += other.coeffs_[j];
  return out;
}

CyclotomicSum CyclotomicSum::operator-(const CyclotomicSum& other) const {
  require_same(*this, other);
  CyclotomicSum out = *this;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) out.coeffs_[j] -= other.coeffs_[j];
  return out;
}

CyclotomicSum CyclotomicSum::operator*(const CyclotomicSum& other) const {
  require_same(*this, other);
  const std::size_t m = coeffs_.size();
  CyclotomicSum out(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) out.coeffs_[(i + j) % m] += coeffs_[i] * other.coeffs_[j];
  }
  return out;
}

bool CyclotomicSum::is_zero() const {
  const auto& table = cyclotomic_reductions(modulus());
  const std::size_t deg = cyclotomic_polynomial(modulus()).size() - 1;
  if (deg == 0) return true;
  std::vector<std::int64_t> acc(deg, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) acc[j] += coeffs_[k] * table[k][j];
  }
  for (auto c : acc)
    if (c != 0) return false;
  return true;
}

double CyclotomicSum::real() const {
  double sum = 0;
  const double step = 2 * std::numbers::pi / static_cast<double>(modulus());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) sum += static_cast<double>(coeffs_[k]) * std::cos(step * k);
  return sum;
}

double CyclotomicSum::imag() const {
  double sum = 0;
  const double step = 2 * std::numbers::pi / static_cast<double>(modulus());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) sum += static_cast<double>(coeffs_[k]) * std::sin(step * k);
  return sum;
}

}  // namespace cayleycodes
