#include "tw/integer.hpp"

#include "tw/errors.hpp"

namespace tw {

auto binomial(const Integer& n, unsigned long k) -> Integer {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

auto binomial(long n, unsigned long k) -> Integer { return binomial(Integer(n), k); }

auto floor_div(const Integer& a, const Integer& b) -> Integer {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

auto floor_mod(const Integer& a, const Integer& b) -> Integer {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

auto to_string(const Integer& x) -> std::string { return x.get_str(); }

auto to_long(const Integer& x) -> long {
  if (!x.fits_slong_p()) throw PreconditionError("integer " + x.get_str() + " exceeds machine range");
  return x.get_si();
}

auto zero_vector(std::size_t n) -> IntVector { return IntVector(n); }

auto unit_vector(std::size_t n, std::size_t i) -> IntVector {
  IntVector v(n);
  v.at(i) = 1;
  return v;
}

auto is_zero(const IntVector& v) -> bool {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

auto add(const IntVector& x, const IntVector& y) -> IntVector {
  if (x.size() != y.size()) throw DimensionError("vector length mismatch");
  IntVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

auto sub(const IntVector& x, const IntVector& y) -> IntVector {
  if (x.size() != y.size()) throw DimensionError("vector length mismatch");
  IntVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

auto scale(const Integer& c, const IntVector& x) -> IntVector {
  IntVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
  return r;
}

auto neg(const IntVector& x) -> IntVector {
  IntVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = -x[i];
  return r;
}

void submul(IntVector& x, const Integer& c, const IntVector& y) {
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(y[i]) != 0) mpz_submul(x[i].get_mpz_t(), c.get_mpz_t(), y[i].get_mpz_t());
  }
}

void addmul(IntVector& x, const Integer& c, const IntVector& y) {
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(y[i]) != 0) mpz_addmul(x[i].get_mpz_t(), c.get_mpz_t(), y[i].get_mpz_t());
  }
}

auto dot(const IntVector& x, const IntVector& y) -> Integer {
  if (x.size() != y.size()) throw DimensionError("vector length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) != 0 && sgn(y[i]) != 0) mpz_addmul(s.get_mpz_t(), x[i].get_mpz_t(), y[i].get_mpz_t());
  }
  return s;
}

auto content(const IntVector& x) -> Integer {
  Integer g = 0;
  for (const auto& v : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

auto to_string(const IntVector& v) -> std::string {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace tw
