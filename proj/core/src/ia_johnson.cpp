#include "tw/ia_johnson.hpp"

#include <algorithm>
#include <sstream>

#include "tw/errors.hpp"

namespace tw {

TildeWSpace::TildeWSpace(int n) : n_(n), pairs_(static_cast<std::size_t>(n < 2 ? 2 : n), 2) {
  if (n < 2) throw PreconditionError("H*⊗∧²H needs n >= 2");
  const auto un = static_cast<std::size_t>(n);
  std::vector<IntVector> cols;
  cols.reserve(dimension());
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t p = 0; p < pairs_.size(); ++p) {
      const auto& t = pairs_.tuple(p);
      IntVector c(un, 0);
      if (i == t[0]) c[t[1]] += 1;
      if (i == t[1]) c[t[0]] -= 1;
      cols.push_back(std::move(c));
    }
  }
  contraction_ = IntMatrix::from_columns(cols, un);
  std::vector<IntVector> gens;
  for (std::size_t v = 0; v < un; ++v) gens.push_back(iota(unit_vector(un, v)));
  iota_h_ = Lattice::from_generators(dimension(), gens);
  if (iota_h_.rank() != un) throw CheckFailure("ι(H) does not have rank n");
  if (!is_saturated(iota_h_)) throw CheckFailure("ι(H) is not saturated");
  quotient_ = QuotientPresentation(iota_h_);
}

auto TildeWSpace::basis_element(int i, int j, int k) const -> IntVector {
  if (i < 1 || i > n_ || j < 1 || j > n_ || k < 1 || k > n_ || j == k) {
    throw PreconditionError("basis_element: indices out of range or j = k");
  }
  IntVector x(dimension(), 0);
  const auto lo = static_cast<std::size_t>(std::min(j, k) - 1);
  const auto hi = static_cast<std::size_t>(std::max(j, k) - 1);
  x[static_cast<std::size_t>(i - 1) * pairs_.size() + pairs_.index(lo, hi)] = j < k ? 1 : -1;
  return x;
}

auto TildeWSpace::contraction(const IntVector& x) const -> IntVector {
  if (x.size() != dimension()) throw DimensionError("contraction: wrong length");
  return contraction_.apply(x);
}

auto TildeWSpace::iota(const IntVector& v) const -> IntVector {
  const auto un = static_cast<std::size_t>(n_);
  if (v.size() != un) throw DimensionError("iota: vector must lie in H");
  IntVector x(dimension(), 0);
  for (std::size_t i = 0; i < un; ++i) {
    const std::size_t base = i * pairs_.size();
    for (std::size_t j = 0; j < un; ++j) {
      if (j == i || sgn(v[j]) == 0) continue;
      if (i < j) {
        x[base + pairs_.index(i, j)] += v[j];
      } else {
        x[base + pairs_.index(j, i)] -= v[j];
      }
    }
  }
  return x;
}

auto TildeWSpace::to_string(const IntVector& x) const -> std::string {
  if (x.size() != dimension()) throw DimensionError("to_string: wrong length");
  std::ostringstream os;
  bool first = true;
  for (std::size_t q = 0; q < x.size(); ++q) {
    if (sgn(x[q]) == 0) continue;
    const auto i = q / pairs_.size();
    const auto& t = pairs_.tuple(q % pairs_.size());
    if (!first) os << " + ";
    first = false;
    if (x[q] != 1) os << tw::to_string(x[q]) << "*";
    os << "e" << i + 1 << "*(x)(e" << t[0] + 1 << "^e" << t[1] + 1 << ")";
  }
  return first ? "0" : os.str();
}

auto johnson_tau_raw(const TildeWSpace& w, const EndoOfFree& phi) -> IntVector {
  if (phi.rank() != w.n()) throw DimensionError("tau: rank mismatch");
  IntVector out(w.dimension(), 0);
  const auto& pairs = w.pairs();
  for (int i = 1; i <= w.n(); ++i) {
    const auto m = magnus2_expand(phi.image(i) * FreeWord::generator(i, -1), w.n());
    const std::size_t base = static_cast<std::size_t>(i - 1) * pairs.size();
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto& t = pairs.tuple(p);
      // A Lie element of degree 2 has an antisymmetric quadratic part; x∧y ↔ XY - YX.
      out[base + p] = m.quadratic(t[0], t[1]);
    }
  }
  return out;
}

auto tau_sign_calibration() -> int {
  static const int sign = [] {
    const TildeWSpace w(3);
    const auto raw = johnson_tau_raw(w, magnus_generator(3, 1, 2).forward());
    const auto target = w.basis_element(1, 1, 2);
    if (raw == target) return 1;
    if (raw == neg(target)) return -1;
    throw CheckFailure("τ(K_12) is not ± e_1*⊗(e_1∧e_2)");
  }();
  return sign;
}

auto johnson_tau_IA(const TildeWSpace& w, const EndoOfFree& phi) -> IntVector {
  if (!phi.is_ia()) throw PreconditionError("not in IA_n: abelianization is not the identity");
  return scale(tau_sign_calibration(), johnson_tau_raw(w, phi));
}

}  // namespace tw
