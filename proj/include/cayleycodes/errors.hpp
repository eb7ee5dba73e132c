#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cayleycodes {

using Element = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed GroupSpec, element expression, or table file.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A configured size limit would be exceeded.
class BoundExceeded : public Error {
 public:
  BoundExceeded(const std::string& what, std::size_t value, std::size_t limit)
      : Error(what + ": " + std::to_string(value) + " exceeds bound " + std::to_string(limit)),
        value_(value),
        limit_(limit) {}

  std::size_t value() const { return value_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t value_;
  std::size_t limit_;
};

// An operation was called outside its domain (non-abelian group, non-normal subgroup, ...).
class NotApplicable : public Error {
 public:
  using Error::Error;
};

enum class TableDefect {
  not_square,
  index_out_of_range,
  no_identity,
  missing_inverse,
  not_latin_square,
  non_associative,
};

const char* to_string(TableDefect defect);

// Rejected multiplication table. The witness is the first failing position in a
// lexicographic scan: (row, col) for shape and Latin defects, (x) for inverses,
// (x, y, z) for associativity.
class InvalidTable : public Error {
 public:
  InvalidTable(TableDefect defect, std::vector<std::size_t> witness, const std::string& detail);

  TableDefect defect() const { return defect_; }
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  TableDefect defect_;
  std::vector<std::size_t> witness_;
};

enum class ConnectionSetDefect { contains_identity, not_inverse_closed, out_of_range };

class InvalidConnectionSet : public Error {
 public:
  InvalidConnectionSet(ConnectionSetDefect defect, Element witness);

  ConnectionSetDefect defect() const { return defect_; }
  Element witness() const { return witness_; }

 private:
  ConnectionSetDefect defect_;
  Element witness_;
};

// Property (1) fails for (G, H): some g with g^2 in H admits no h in H with (gh)^2 = e.
class PropertyOneFails : public Error {
 public:
  explicit PropertyOneFails(Element witness)
      : Error("property (1) fails, witness g = " + std::to_string(witness)), witness_(witness) {}

  Element witness() const { return witness_; }

 private:
  Element witness_;
};

// Two routes that must agree disagreed. Never expected; always a bug.
class Defect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cayleycodes
