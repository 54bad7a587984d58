#include "tw/ring.hpp"

#include "tw/errors.hpp"

namespace tw {
namespace {

void require_rank(const RingElement& a, const RingElement& b) {
  if (a.rank() != b.rank()) {
    throw DimensionError("group ring rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
  }
}

}  // namespace

RingElement::RingElement(std::size_t rank) : rank_(rank) {}

auto RingElement::one(std::size_t rank) -> RingElement { return monomial(Exponent(rank, 0)); }

auto RingElement::monomial(const Exponent& a, const Integer& coeff) -> RingElement {
  RingElement r(a.size());
  r.add_term(a, coeff);
  return r;
}

auto RingElement::difference(const Exponent& a) -> RingElement {
  return monomial(a) - one(a.size());
}

auto RingElement::coefficient(const Exponent& a) const -> Integer {
  auto it = terms_.find(a);
  return it == terms_.end() ? Integer(0) : it->second;
}

void RingElement::add_term(const Exponent& a, const Integer& c) {
  if (a.size() != rank_) throw DimensionError("exponent length does not match ring rank");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

auto RingElement::operator+=(const RingElement& o) -> RingElement& {
  require_rank(*this, o);
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

auto RingElement::operator-=(const RingElement& o) -> RingElement& {
  require_rank(*this, o);
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

auto RingElement::evaluate(const std::vector<Integer>& point) const -> Integer {
  if (point.size() != rank_) throw DimensionError("evaluation point has wrong length");
  Integer total = 0;
  for (const auto& [a, c] : terms_) {
    Integer term = c;
    for (std::size_t i = 0; i < rank_; ++i) {
      const auto& x = point[i];
      if (a[i] >= 0) {
        Integer p;
        mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(a[i]));
        term *= p;
      } else {
        if (x != 1 && x != -1) throw PreconditionError("negative exponent evaluated at a non-unit");
        if (x == -1 && (-a[i]) % 2 == 1) term = -term;
      }
    }
    total += term;
  }
  return total;
}

auto RingElement::pow(unsigned k) const -> RingElement {
  RingElement r = one(rank_);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

auto RingElement::to_string() const -> std::string {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [a, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + "*e(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    s += ")";
  }
  return s;
}

auto operator+(RingElement a, const RingElement& b) -> RingElement { return a += b; }

auto operator-(RingElement a, const RingElement& b) -> RingElement { return a -= b; }

auto operator-(const RingElement& a) -> RingElement { return RingElement(a.rank()) - a; }

auto operator*(const RingElement& a, const RingElement& b) -> RingElement {
  require_rank(a, b);
  RingElement r(a.rank());
  Exponent e(a.rank());
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = x[i] + y[i];
      r.add_term(e, cx * cy);
    }
  }
  return r;
}

auto operator*(const Integer& c, const RingElement& a) -> RingElement {
  RingElement r(a.rank());
  for (const auto& [x, cx] : a.terms()) r.add_term(x, c * cx);
  return r;
}

auto DifferenceProduct::expand() const -> RingElement {
  if (factors.empty()) throw PreconditionError("difference product needs at least one factor");
  RingElement r = RingElement::one(rank);
  for (const auto& a : factors) {
    if (a.size() != rank) throw DimensionError("difference factor has wrong length");
    bool zero = true;
    for (auto x : a) zero = zero && x == 0;
    if (zero) throw PreconditionError("difference factor e_0 - 1 vanishes");
    r = r * RingElement::difference(a);
  }
  return r;
}

}  // namespace tw
