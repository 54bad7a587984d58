#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace tw {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

// binom(n, k) for any integer n and k >= 0 (generalized for negative n).
[[nodiscard]] auto binomial(const Integer& n, unsigned long k) -> Integer;
[[nodiscard]] auto binomial(long n, unsigned long k) -> Integer;

// Quotient rounded toward -infinity; remainder takes the divisor's sign.
[[nodiscard]] auto floor_div(const Integer& a, const Integer& b) -> Integer;
[[nodiscard]] auto floor_mod(const Integer& a, const Integer& b) -> Integer;

[[nodiscard]] auto to_string(const Integer& x) -> std::string;
[[nodiscard]] auto to_long(const Integer& x) -> long;

[[nodiscard]] auto zero_vector(std::size_t n) -> IntVector;
[[nodiscard]] auto unit_vector(std::size_t n, std::size_t i) -> IntVector;
[[nodiscard]] auto is_zero(const IntVector& v) -> bool;
[[nodiscard]] auto add(const IntVector& x, const IntVector& y) -> IntVector;
[[nodiscard]] auto sub(const IntVector& x, const IntVector& y) -> IntVector;
[[nodiscard]] auto scale(const Integer& c, const IntVector& x) -> IntVector;
[[nodiscard]] auto neg(const IntVector& x) -> IntVector;
// x -= c * y, skipping zero entries of y.
void submul(IntVector& x, const Integer& c, const IntVector& y);
// x += c * y, skipping zero entries of y.
void addmul(IntVector& x, const Integer& c, const IntVector& y);
[[nodiscard]] auto dot(const IntVector& x, const IntVector& y) -> Integer;
[[nodiscard]] auto content(const IntVector& x) -> Integer;
[[nodiscard]] auto to_string(const IntVector& v) -> std::string;

}  // namespace tw
