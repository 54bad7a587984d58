#include "tw/lattice.hpp"

#include <string>

#include "tw/errors.hpp"

namespace tw {

Lattice::Lattice(std::size_t ambient_rank) : ambient_(ambient_rank), basis_(0, ambient_rank) {}

auto Lattice::from_matrix(const IntMatrix& rows) -> Lattice {
  Lattice l(rows.cols());
  auto hf = hermite_basis(rows);
  hf.h.resize_rows(hf.rank);
  l.basis_ = std::move(hf.h);
  l.pivots_ = std::move(hf.pivots);
  return l;
}

auto Lattice::from_generators(std::size_t ambient_rank, const std::vector<IntVector>& gens) -> Lattice {
  return from_matrix(IntMatrix::from_rows(gens, ambient_rank));
}

auto Lattice::full(std::size_t ambient_rank) -> Lattice {
  return from_matrix(IntMatrix::identity(ambient_rank));
}

auto Lattice::coefficients(const IntVector& v) const -> std::optional<IntVector> {
  if (v.size() != ambient_) {
    throw DimensionError("vector of length " + std::to_string(v.size()) + " against lattice in Z^" +
                         std::to_string(ambient_));
  }
  IntVector r = v;
  IntVector c(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    const auto p = pivots_[i];
    if (sgn(r[p]) == 0) continue;
    if (!mpz_divisible_p(r[p].get_mpz_t(), basis_(i, p).get_mpz_t())) return std::nullopt;
    mpz_divexact(c[i].get_mpz_t(), r[p].get_mpz_t(), basis_(i, p).get_mpz_t());
    submul(r, c[i], basis_.row(i));
  }
  if (!is_zero(r)) return std::nullopt;
  return c;
}

auto Lattice::contains(const IntVector& v) const -> bool { return coefficients(v).has_value(); }

auto Lattice::contains(const Lattice& other) const -> bool {
  if (other.ambient_ != ambient_) throw DimensionError("lattice ambient rank mismatch");
  for (const auto& r : other.basis_.row_vectors()) {
    if (!contains(r)) return false;
  }
  return true;
}

auto Lattice::reduce(const IntVector& v) const -> IntVector {
  if (v.size() != ambient_) throw DimensionError("vector length does not match lattice ambient rank");
  IntVector r = v;
  for (std::size_t i = 0; i < rank(); ++i) {
    const auto p = pivots_[i];
    if (sgn(r[p]) == 0) continue;
    submul(r, floor_div(r[p], basis_(i, p)), basis_.row(i));
  }
  return r;
}

auto member(const Lattice& lattice, const IntVector& v) -> std::optional<IntVector> {
  return lattice.coefficients(v);
}

auto integer_kernel(const IntMatrix& a) -> Lattice {
  const auto hf = hermite_normal_form(a.transpose());
  std::vector<IntVector> gens;
  for (std::size_t i = hf.rank; i < hf.h.rows(); ++i) gens.push_back(hf.u.row(i));
  return Lattice::from_generators(a.cols(), gens);
}

auto left_kernel(const IntMatrix& a) -> Lattice { return integer_kernel(a.transpose()); }

auto saturate(const Lattice& lattice) -> Lattice {
  if (lattice.rank() == 0) return lattice;
  const auto perp = integer_kernel(lattice.basis());
  if (perp.rank() == 0) return Lattice::full(lattice.ambient_rank());
  return integer_kernel(perp.basis());
}

auto is_saturated(const Lattice& lattice) -> bool {
  for (const auto& d : smith_invariants(lattice.basis())) {
    if (d != 1) return false;
  }
  return true;
}

auto lattice_sum(const Lattice& a, const Lattice& b) -> Lattice {
  if (a.ambient_rank() != b.ambient_rank()) throw DimensionError("lattice ambient rank mismatch");
  return Lattice::from_matrix(stack(a.basis(), b.basis()));
}

auto lattice_scaled(const Lattice& a, const Integer& c) -> Lattice {
  return Lattice::from_matrix(c * a.basis());
}

auto lattice_image(const IntMatrix& m, const Lattice& a) -> Lattice {
  if (m.cols() != a.ambient_rank()) throw DimensionError("matrix does not act on the lattice's ambient space");
  std::vector<IntVector> gens;
  for (const auto& r : a.basis().row_vectors()) gens.push_back(m.apply(r));
  return Lattice::from_generators(m.rows(), gens);
}

auto sum_intersect(const Lattice& a, const Lattice& b) -> SumIntersect {
  if (a.ambient_rank() != b.ambient_rank()) throw DimensionError("lattice ambient rank mismatch");
  const auto stacked = stack(a.basis(), b.basis());
  // z·[A; B] = 0 gives z_A·A = -z_B·B in the intersection.
  const auto relations = left_kernel(stacked);
  std::vector<IntVector> gens;
  for (const auto& z : relations.basis().row_vectors()) {
    IntVector za(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(a.rank()));
    gens.push_back(a.basis().left_apply(za));
  }
  SumIntersect out{Lattice::from_matrix(stacked), Lattice::from_generators(a.ambient_rank(), gens), false};
  out.is_direct = out.intersection.rank() == 0;
  return out;
}

namespace {

// Coordinates of sub's basis in sup's basis; throws unless sub ⊆ sup with equal rank.
auto relative_basis(const Lattice& sub, const Lattice& sup) -> IntMatrix {
  if (sub.ambient_rank() != sup.ambient_rank()) throw DimensionError("lattice ambient rank mismatch");
  IntMatrix c(0, sup.rank());
  for (std::size_t i = 0; i < sub.rank(); ++i) {
    auto coeffs = sup.coefficients(sub.basis().row(i));
    if (!coeffs) throw PreconditionError("not a sublattice: basis row " + std::to_string(i) + " lies outside");
    c.append_row(std::move(*coeffs));
  }
  if (sub.rank() < sup.rank()) {
    throw PreconditionError("infinite index: rank " + std::to_string(sub.rank()) + " < " +
                            std::to_string(sup.rank()));
  }
  return c;
}

}  // namespace

auto lattice_index(const Lattice& sub, const Lattice& sup) -> Integer {
  const auto c = relative_basis(sub, sup);
  Integer index = 1;
  const auto hf = hermite_basis(c);
  for (std::size_t i = 0; i < hf.rank; ++i) index *= hf.h(i, hf.pivots[i]);
  return index;
}

CosetTransversal::CosetTransversal(Lattice sub, Lattice sup) : sub_(std::move(sub)), sup_(std::move(sup)) {
  const auto c = relative_basis(sub_, sup_);
  auto s = smith_normal_form(c);
  index_ = 1;
  for (std::size_t i = 0; i < c.rows(); ++i) {
    moduli_.push_back(s.d(i, i));
    index_ *= s.d(i, i);
  }
  v_ = std::move(s.v);
  auto inv = unimodular_inverse(v_);
  if (!inv) throw CheckFailure("Smith transform not unimodular");
  v_inverse_ = std::move(*inv);
}

auto CosetTransversal::rep(const Integer& k) const -> IntVector {
  if (k < 0 || k >= index_) throw PreconditionError("coset number out of range");
  const std::size_t n = moduli_.size();
  IntVector t(n);
  Integer rest = k;
  for (std::size_t i = n; i-- > 0;) {
    t[i] = floor_mod(rest, moduli_[i]);
    rest = floor_div(rest, moduli_[i]);
  }
  return sup_.basis().left_apply(v_inverse_.left_apply(t));
}

auto CosetTransversal::reps(std::size_t limit) const -> std::vector<IntVector> {
  if (index_ > limit) throw PreconditionError("index " + index_.get_str() + " too large to enumerate");
  std::vector<IntVector> out;
  for (Integer k = 0; k < index_; ++k) out.push_back(rep(k));
  return out;
}

auto CosetTransversal::locate(const IntVector& v) const -> Integer {
  auto w = sup_.coefficients(v);
  if (!w) throw PreconditionError("vector outside the ambient lattice of the transversal");
  const auto y = v_.left_apply(*w);
  Integer k = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) k = k * moduli_[i] + floor_mod(y[i], moduli_[i]);
  return k;
}

auto index_and_cosets(const Lattice& sub, const Lattice& sup) -> CosetTransversal {
  return CosetTransversal(sub, sup);
}

QuotientPresentation::QuotientPresentation(Lattice kernel) : kernel_(std::move(kernel)) {
  if (!is_saturated(kernel_)) throw PreconditionError("quotient by a non-saturated sublattice has torsion");
  const std::size_t n = kernel_.ambient_rank();
  dim_ = n - kernel_.rank();
  for (std::size_t i = 0; i < kernel_.rank(); ++i) {
    if (kernel_.basis()(i, kernel_.pivots()[i]) != 1) unit_pivots_ = false;
  }
  if (unit_pivots_) {
    std::vector<bool> pivot(n, false);
    for (auto p : kernel_.pivots()) pivot[p] = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (!pivot[j]) free_columns_.push_back(j);
    }
    return;
  }
  // kernel·Uᵀ = [H 0] with H unimodular; columns k.. of V = Uᵀ coordinatise the quotient.
  const auto hf = hermite_normal_form(kernel_.basis().transpose());
  change_ = hf.u.transpose();
  auto inv = unimodular_inverse(change_);
  if (!inv) throw CheckFailure("column transform not unimodular");
  change_inverse_ = std::move(*inv);
}

auto QuotientPresentation::project(const IntVector& v) const -> IntVector {
  if (v.size() != ambient_rank()) throw DimensionError("projection: vector length mismatch");
  if (unit_pivots_) {
    IntVector r = v;
    for (std::size_t i = 0; i < kernel_.rank(); ++i) {
      const auto p = kernel_.pivots()[i];
      if (sgn(r[p]) != 0) submul(r, Integer(r[p]), kernel_.basis().row(i));
    }
    IntVector c;
    c.reserve(dim_);
    for (auto j : free_columns_) c.push_back(r[j]);
    return c;
  }
  const auto y = change_.left_apply(v);
  return IntVector(y.begin() + static_cast<std::ptrdiff_t>(kernel_.rank()), y.end());
}

auto QuotientPresentation::lift(const IntVector& c) const -> IntVector {
  if (c.size() != dim_) throw DimensionError("lift: coordinate length mismatch");
  if (unit_pivots_) {
    IntVector v(ambient_rank());
    for (std::size_t i = 0; i < dim_; ++i) v[free_columns_[i]] = c[i];
    return v;
  }
  IntVector y(ambient_rank());
  for (std::size_t i = 0; i < dim_; ++i) y[kernel_.rank() + i] = c[i];
  return change_inverse_.left_apply(y);
}

auto QuotientPresentation::stability_violation(const IntMatrix& m) const -> std::optional<std::size_t> {
  if (m.rows() != ambient_rank() || m.cols() != ambient_rank()) throw DimensionError("induced map shape mismatch");
  for (std::size_t i = 0; i < kernel_.rank(); ++i) {
    if (!kernel_.contains(m.apply(kernel_.basis().row(i)))) return i;
  }
  return std::nullopt;
}

auto QuotientPresentation::induced(const IntMatrix& m) const -> IntMatrix {
  if (auto bad = stability_violation(m)) {
    throw CheckFailure("sublattice not preserved: image of kernel basis row " + std::to_string(*bad) +
                       " leaves the kernel");
  }
  std::vector<IntVector> columns;
  for (std::size_t j = 0; j < dim_; ++j) columns.push_back(project(m.apply(lift(unit_vector(dim_, j)))));
  return IntMatrix::from_columns(columns, dim_);
}

}  // namespace tw
