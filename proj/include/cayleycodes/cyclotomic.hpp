#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cayleycodes {

using IntPoly = std::vector<std::int64_t>;  // coefficient of x^j at index j

// The m-th cyclotomic polynomial, by dividing x^m - 1 by every Phi_d with
// d | m, d < m. Cached per m.
const IntPoly& cyclotomic_polynomial(std::size_t m);

// sum_j c_j zeta_m^j, held as a residue modulo x^m - 1.
class CyclotomicSum {
 public:
  explicit CyclotomicSum(std::size_t m) : coeffs_(m, 0) {}
  static CyclotomicSum integer(std::size_t m, std::int64_t value);

  std::size_t modulus() const { return coeffs_.size(); }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  // Adds c * zeta_m^k.
  void add_power(std::size_t k, std::int64_t c = 1) { coeffs_[k % coeffs_.size()] += c; }

  CyclotomicSum operator+(const CyclotomicSum& other) const;
  CyclotomicSum operator-(const CyclotomicSum& other) const;
  CyclotomicSum operator*(const CyclotomicSum& other) const;

  // Exact: Phi_m divides sum_j c_j x^j.
  bool is_zero() const;

  // Value as a complex number, real and imaginary parts; for sanity checks only.
  double real() const;
  double imag() const;

 private:
  std::vector<std::int64_t> coeffs_;
};

// x^k mod Phi_m for k = 0..m-1. Every CyclotomicSum zero test reduces
// through this table.
const std::vector<IntPoly>& cyclotomic_reductions(std::size_t m);

}  // namespace cayleycodes
