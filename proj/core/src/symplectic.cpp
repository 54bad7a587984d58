#include "tw/symplectic.hpp"

#include <numeric>

#include "tw/errors.hpp"

namespace tw {
namespace {

auto binom_long(long n, long k) -> long {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

auto project_all(const UgSpace& ug, const std::vector<IntVector>& ws) -> Lattice {
  std::vector<IntVector> gens;
  gens.reserve(ws.size());
  for (const auto& w : ws) gens.push_back(ug.project(w));
  return Lattice::from_generators(ug.rank(), gens);
}

void expect_rank(const Lattice& l, std::size_t count, long expected, const char* name) {
  if (static_cast<long>(l.rank()) != expected || static_cast<long>(count) != expected) {
    throw CheckFailure(std::string(name) + ": expected a basis of " + std::to_string(expected) + " elements, got " +
                       std::to_string(count) + " generators of rank " + std::to_string(l.rank()));
  }
}

// Generators of the P1-side W lattice: x_i∧y_j∧y_k over non-symplectic pairs, plus the corrected pairs.
auto w_generators(int gx, int gy, auto&& x, auto&& y) -> std::vector<IntVector> {
  std::vector<IntVector> out;
  for (int i = 1; i <= 2 * gx; ++i) {
    for (int j = 1; j <= 2 * gy; ++j) {
      for (int k = j + 1; k <= 2 * gy; ++k) {
        if (j % 2 == 1 && k == j + 1) continue;
        out.push_back(wedge3(x(i), y(j), y(k)));
      }
    }
    for (int l = 2; l <= gy; ++l) {
      out.push_back(wedge3(x(i), add(y(2 * l - 1), y(1)), sub(y(2 * l), y(2))));
    }
  }
  return out;
}

}  // namespace

SymplecticSpace::SymplecticSpace(int genus)
    : genus_(genus), basis3_(2 * static_cast<std::size_t>(genus < 1 ? 1 : genus), 3) {
  if (genus < 1) throw PreconditionError("genus must be positive");
  const std::size_t n = rank();
  form_ = IntMatrix(n, n);
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    form_(i, i + 1) = 1;
    form_(i + 1, i) = -1;
  }
  std::vector<IntVector> cols;
  cols.reserve(basis3_.size());
  for (std::size_t p = 0; p < basis3_.size(); ++p) {
    const auto [i, j, k] = basis3_.tuple(p);
    IntVector c(n, 0);
    c[k] += form_(i, j);
    c[i] += form_(j, k);
    c[j] += form_(k, i);
    cols.push_back(std::move(c));
  }
  contraction_ = IntMatrix::from_columns(cols, n);
}

auto SymplecticSpace::a(int i) const -> IntVector {
  if (i < 1 || i > genus_) throw PreconditionError("a_i index out of range");
  return unit_vector(rank(), static_cast<std::size_t>(2 * i - 2));
}

auto SymplecticSpace::b(int i) const -> IntVector {
  if (i < 1 || i > genus_) throw PreconditionError("b_i index out of range");
  return unit_vector(rank(), static_cast<std::size_t>(2 * i - 1));
}

auto SymplecticSpace::pairing(const IntVector& x, const IntVector& y) const -> Integer {
  if (x.size() != rank() || y.size() != rank()) throw DimensionError("pairing: vectors must lie in H");
  return dot(x, form_.apply(y));
}

auto SymplecticSpace::omega() const -> IntVector {
  const ExteriorBasis b2(rank(), 2);
  IntVector w(b2.size(), 0);
  for (std::size_t i = 0; i + 1 < rank(); i += 2) w[b2.index(i, i + 1)] = 1;
  return w;
}

auto SymplecticSpace::omega_wedge(const IntVector& c) const -> IntVector {
  if (c.size() != rank()) throw DimensionError("omega_wedge: vector must lie in H");
  return wedge2_1(omega(), rank(), c);
}

auto SymplecticSpace::contraction(const IntVector& w) const -> IntVector {
  if (w.size() != basis3_.size()) throw DimensionError("contraction: vector must lie in the exterior cube");
  return contraction_.apply(w);
}

UgSpace::UgSpace(int genus) : space_(genus) {
  if (genus < 3) throw PreconditionError("U_g requires genus >= 3");
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < space_.rank(); ++i) gens.push_back(space_.omega_wedge(unit_vector(space_.rank(), i)));
  omega_h_ = Lattice::from_generators(space_.wedge3_dimension(), gens);
  if (omega_h_.rank() != space_.rank()) throw CheckFailure("Ω∧H does not have rank 2g");
  if (!is_saturated(omega_h_)) throw CheckFailure("Ω∧H is not saturated");
  quotient_ = QuotientPresentation(omega_h_);
}

auto UgSpace::project(const Lattice& l) const -> Lattice {
  if (l.ambient_rank() != space_.wedge3_dimension()) throw DimensionError("project: lattice must lie in the exterior cube");
  return project_all(*this, l.basis().row_vectors());
}

auto u_L(const Lattice& l) -> IntVector {
  if (l.rank() != 3) throw PreconditionError("u_L requires a rank-3 lattice, got rank " + std::to_string(l.rank()));
  const auto& b = l.basis();
  return wedge3(b.row(0), b.row(1), b.row(2));
}

auto tau_sip(const IntVector& x, const IntVector& y, const IntVector& z) -> IntVector { return wedge3(x, y, z); }

auto tau_bp(const SymplecticSpace& h, int gp, const IntVector& c, const std::vector<IntVector>& p) -> BoundingPairValue {
  if (gp < 1 || gp > h.genus()) throw PreconditionError("g' must lie in [1, g]");
  if (p.size() != 2 * static_cast<std::size_t>(gp)) throw PreconditionError("P must have 2g' basis vectors");
  for (const auto& v : p) {
    if (v.size() != h.rank()) throw DimensionError("P basis vectors must lie in H");
  }
  if (c.size() != h.rank()) throw DimensionError("c must lie in H");
  for (std::size_t s = 0; s < p.size(); ++s) {
    for (std::size_t t = s + 1; t < p.size(); ++t) {
      const Integer expected = (s % 2 == 0 && t == s + 1) ? 1 : 0;
      if (h.pairing(p[s], p[t]) != expected) throw PreconditionError("P basis is not symplectic");
    }
    if (sgn(h.pairing(c, p[s])) != 0) throw PreconditionError("c is not orthogonal to P");
  }
  const ExteriorBasis b2(h.rank(), 2);
  IntVector w(b2.size(), 0);
  for (std::size_t s = 0; s < p.size(); s += 2) w = add(w, wedge2(p[s], p[s + 1]));
  return {wedge2_1(w, h.rank(), c), gp >= h.genus() - 1};
}

auto rational_decomposition_check(int genus) -> DecompositionReport {
  const UgSpace ug(genus);
  DecompositionReport r;
  r.genus = genus;
  r.total_rank = ug.space().wedge3_dimension();
  r.ker_pi_rank = ug.omega_h().rank();
  r.ker_pi_saturated = is_saturated(ug.omega_h());
  const Lattice ker_c = integer_kernel(ug.space().contraction_matrix());
  r.ker_c_rank = ker_c.rank();
  r.intersection_rank = sum_intersect(ug.omega_h(), ker_c).intersection.rank();
  return r;
}

auto c_mod2_g3(const UgSpace& ug, const IntVector& u) -> std::vector<int> {
  if (ug.space().genus() != 3) throw PreconditionError("C mod 2 is defined on U_3 only");
  const auto c = ug.space().contraction(ug.lift(u));
  std::vector<int> out;
  out.reserve(c.size());
  for (const auto& x : c) out.push_back(static_cast<int>(to_long(floor_mod(x, Integer(2)))));
  return out;
}

auto tilde_v3() -> TildeV3 {
  TildeV3 t;
  const auto& h = t.ug.space();
  const std::size_t d = t.ug.rank();
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < d; ++j) cols.push_back(h.contraction(t.ug.lift(unit_vector(d, j))));
  t.contraction_on_ug = IntMatrix::from_columns(cols, h.rank());

  t.well_defined = true;
  for (const auto& row : t.ug.omega_h().basis().row_vectors()) {
    for (const auto& x : h.contraction(row)) {
      if (sgn(floor_mod(x, Integer(2))) != 0) t.well_defined = false;
    }
  }
  // u ∈ ker(C mod 2) iff [C | 2I]·(u, y) = 0 for some integer y.
  IntMatrix aug(h.rank(), d + h.rank());
  for (std::size_t i = 0; i < h.rank(); ++i) {
    for (std::size_t j = 0; j < d; ++j) aug(i, j) = t.contraction_on_ug(i, j);
    aug(i, d + i) = 2;
  }
  const Lattice k = integer_kernel(aug);
  std::vector<IntVector> gens;
  for (const auto& row : k.basis().row_vectors()) gens.emplace_back(row.begin(), row.begin() + static_cast<long>(d));
  t.ker_mod2 = Lattice::from_generators(d, gens);
  t.tilde = lattice_scaled(t.ker_mod2, 2);
  const Lattice full = Lattice::full(d);
  t.index_ug_ker = lattice_index(t.ker_mod2, full);
  t.index_ker_tilde = lattice_index(t.tilde, t.ker_mod2);
  t.index_ug_tilde = lattice_index(t.tilde, full);
  return t;
}

auto splitting_e(const Splitting& s, int i) -> IntVector {
  if (i < 1 || i > 2 * s.g1) throw PreconditionError("e index out of range");
  return unit_vector(2 * static_cast<std::size_t>(s.genus()), static_cast<std::size_t>(i - 1));
}

auto splitting_f(const Splitting& s, int i) -> IntVector {
  if (i < 1 || i > 2 * s.g2) throw PreconditionError("f index out of range");
  return unit_vector(2 * static_cast<std::size_t>(s.genus()), static_cast<std::size_t>(2 * s.g1 + i - 1));
}

auto wgamma_bases(const Splitting& s) -> WGammaBases {
  if (s.g1 < 1 || s.g2 < 1) throw PreconditionError("invalid splitting: both genera must be positive");
  WGammaBases out(s);
  auto e = [&](int i) { return splitting_e(s, i); };
  auto f = [&](int i) { return splitting_f(s, i); };
  for (int side = 0; side < 2; ++side) {
    const int gx = side == 0 ? s.g1 : s.g2;
    for (int i = 1; i <= 2 * gx; ++i) {
      for (int j = i + 1; j <= 2 * gx; ++j) {
        for (int k = j + 1; k <= 2 * gx; ++k) {
          out.u_gamma_generators.push_back(side == 0 ? wedge3(e(i), e(j), e(k)) : wedge3(f(i), f(j), f(k)));
        }
      }
    }
  }
  out.w1_generators = w_generators(s.g1, s.g2, e, f);
  out.w2_generators = w_generators(s.g2, s.g1, f, e);
  out.r1 = 2L * s.g1 * (2L * s.g2 * s.g2 - s.g2 - 1);
  out.r2 = 2L * s.g2 * (2L * s.g1 * s.g1 - s.g1 - 1);
  out.r = 4L * s.g1 * s.g2 * (s.genus() - 1) - 2L * s.genus();
  if (out.r != out.r1 + out.r2) throw CheckFailure("r1 + r2 disagrees with r");

  out.u_gamma = project_all(out.ug, out.u_gamma_generators);
  out.w1 = project_all(out.ug, out.w1_generators);
  out.w2 = project_all(out.ug, out.w2_generators);
  expect_rank(out.u_gamma, out.u_gamma_generators.size(), binom_long(2 * s.g1, 3) + binom_long(2 * s.g2, 3), "U_gamma");
  expect_rank(out.w1, out.w1_generators.size(), out.r1, "W1");
  expect_rank(out.w2, out.w2_generators.size(), out.r2, "W2");
  const auto w = sum_intersect(out.w1, out.w2);
  if (!w.is_direct) throw CheckFailure("W1 and W2 intersect");
  out.v_gamma = lattice_scaled(w.sum, 2);
  return out;
}

auto listed_tilde_v3_basis(const Splitting& s) -> std::vector<IntVector> {
  if (s.genus() != 3) throw PreconditionError("the listed basis exists for genus 3 only");
  // The genus-1 side is P1 in the listing.
  const bool swapped = s.g1 == 2;
  auto e = [&](int i) { return swapped ? splitting_f(s, i) : splitting_e(s, i); };
  auto f = [&](int i) { return swapped ? splitting_e(s, i) : splitting_f(s, i); };
  std::vector<IntVector> out;
  for (int i = 1; i <= 4; ++i) {
    for (int j = i + 1; j <= 4; ++j) {
      for (int k = j + 1; k <= 4; ++k) out.push_back(scale(4, wedge3(f(i), f(j), f(k))));
    }
  }
  for (int i = 1; i <= 2; ++i) out.push_back(scale(4, wedge3(e(i), f(1), f(2))));
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 4; ++j) {
      for (int k = j + 1; k <= 4; ++k) {
        if ((j == 1 && k == 2) || (j == 3 && k == 4)) continue;
        out.push_back(scale(2, wedge3(e(i), f(j), f(k))));
      }
    }
  }
  return out;
}

auto containment_check(const Splitting& s) -> ContainmentReport {
  const auto w = wgamma_bases(s);
  ContainmentReport r;
  r.splitting = s;
  const auto si = sum_intersect(w.u_gamma, w.v_gamma);
  r.direct = si.is_direct;
  r.m = std::lcm(s.g1, s.g2);
  const std::size_t d = w.ug.rank();
  r.scaled_ug_contained = true;
  for (std::size_t p = 0; p < d; ++p) {
    IntVector v(d, 0);
    v[p] = 2 * r.m;
    if (!si.sum.contains(v)) {
      r.scaled_ug_contained = false;
      r.first_missing = p;
      break;
    }
  }
  const long g = s.genus();
  r.rank_ug = binom_long(2 * g, 3) - 2 * g;
  r.rank_sum = binom_long(2 * s.g1, 3) + binom_long(2 * s.g2, 3) + w.r;
  r.rank_identity = r.rank_ug == r.rank_sum && static_cast<long>(d) == r.rank_ug &&
                    static_cast<long>(w.u_gamma.rank() + w.v_gamma.rank()) == r.rank_sum;
  if (g == 3) {
    const auto t = tilde_v3();
    r.tilde_v3_contained = si.sum.contains(t.tilde);
    r.tilde_v3_basis_matches = project_all(w.ug, listed_tilde_v3_basis(s)) == t.tilde;
  }
  return r;
}

auto nilpotency_bounds(int genus, int curve_genus) -> NilpotencyBounds {
  if (genus < 3) throw PreconditionError("nilpotency bounds require genus >= 3");
  if (curve_genus != 1 && curve_genus != 2) throw PreconditionError("curve genus must be 1 or 2");
  NilpotencyBounds n;
  n.genus = genus;
  n.curve_genus = curve_genus;
  const long g = genus;
  n.r = curve_genus == 1 ? 4 * g * g - 10 * g + 4 : 8 * g * g - 26 * g + 16;
  n.bound = 4 * n.r + 1;
  n.genus2_formula = 32 * g * g - 104 * g + 65;
  const long g1 = curve_genus;
  const long g2 = g - curve_genus;
  n.r_from_splitting = 2 * g1 * (2 * g2 * g2 - g2 - 1) + 2 * g2 * (2 * g1 * g1 - g1 - 1);
  return n;
}

auto annihilator_factor_form() -> RingElement {
  const auto e_minus = RingElement::difference({1});
  const auto e_plus = RingElement::monomial({1}) + RingElement::one(1);
  return e_plus * e_minus.pow(4) * e_minus;
}

auto annihilator_poly() -> RingElement {
  RingElement p(1);
  const long coeffs[] = {-1, 4, -5, 0, 5, -4, 1};
  for (long i = 0; i <= 6; ++i) {
    if (coeffs[i] != 0) p.add_term({i}, coeffs[i]);
  }
  return p;
}

}  // namespace tw
