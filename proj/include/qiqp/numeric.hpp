#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace qiqp {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// integer, Rat a rational kept in canonical form (reduced, denominator > 0)
// by the backend after every operation.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

// Thrown when a configurable enumeration budget (solver nodes, unboundedness
// combinations, oracle box size) is exceeded.
struct ResourceExhausted : std::runtime_error {
  explicit ResourceExhausted(const std::string& what) : std::runtime_error(what) {}
};

// Structural invariant check, always on. These guard internal invariants the
// test suites assert never fire (recursion depth, rank bookkeeping, cost
// reconciliation).
#define QIQP_CHECK(cond, msg)                                   \
  do {                                                          \
    if (!(cond)) throw std::logic_error(std::string("invariant violated: ") + (msg)); \
  } while (0)

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int rat_floor(const Rat& r) { return floor_div(numerator(r), denominator(r)); }

inline Int rat_ceil(const Rat& r) { return ceil_div(numerator(r), denominator(r)); }

// Nearest integer, halves rounded up. Used only to pick enumeration centers.
inline Int rat_round(const Rat& r) { return rat_floor(r + Rat(1, 2)); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline Int int_abs(const Int& v) { return v < 0 ? Int(-v) : v; }

inline bool lex_less(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

inline bool is_zero(const IntVector& v) {
  for (const Int& e : v)
    if (e != 0) return false;
  return true;
}

// gcd of all entries, non-negative; 0 for an all-zero vector.
inline Int content(const IntVector& v) {
  Int g = 0;
  for (const Int& e : v) g = boost::multiprecision::gcd(g, e);
  return g;
}

}  // namespace qiqp
