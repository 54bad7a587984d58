#include "tw/module.hpp"

#include <string>

#include "tw/errors.hpp"

namespace tw {
namespace {

auto to_exponent(const IntVector& a) -> Exponent {
  Exponent e;
  e.reserve(a.size());
  for (const auto& x : a) e.push_back(to_long(x));
  return e;
}

// All bk with k_i >= 0 and Σk_i = total, in lexicographic order.
void compositions(std::size_t parts, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = total; k >= 0; --k) {
    cur.push_back(k);
    compositions(parts, total - k, cur, out);
    cur.pop_back();
  }
}

auto minus_identity_apply(const IntMatrix& m, const IntVector& x) -> IntVector { return sub(m.apply(x), x); }

// Rows j of V^{-1} for the Smith factors d_j != 1 of `lattice` (padded to a square system):
// these generate Z^d / lattice.
auto quotient_generators(const Lattice& lattice, std::vector<Integer>& factors) -> std::vector<IntVector> {
  const std::size_t d = lattice.ambient_rank();
  IntMatrix rel = lattice.basis();
  rel.resize_rows(d);
  auto s = smith_normal_form(rel);
  auto vinv = unimodular_inverse(s.v);
  if (!vinv) throw CheckFailure("Smith column transform not unimodular");
  std::vector<IntVector> gens;
  std::vector<Integer> ones;
  std::vector<Integer> rest;
  for (std::size_t j = 0; j < d; ++j) {
    const auto& dj = s.d(j, j);
    if (dj == 1) {
      ones.push_back(dj);
      continue;
    }
    rest.push_back(dj);
    gens.push_back(vinv->row(j));
  }
  factors = ones;
  factors.insert(factors.end(), rest.begin(), rest.end());
  return gens;
}

}  // namespace

MatrixModule::MatrixModule(std::size_t dim, std::vector<IntMatrix> action, std::vector<IntMatrix> inverses,
                           Lattice relations)
    : dim_(dim), action_(std::move(action)), inverses_(std::move(inverses)), relations_(std::move(relations)) {
  if (action_.empty()) throw DimensionError("module needs rank_A >= 1");
  if (action_.size() != inverses_.size()) throw DimensionError("one declared inverse per action matrix required");
  if (relations_.ambient_rank() != dim_) throw DimensionError("relation lattice lives in the wrong ambient space");
  const auto square = [&](const IntMatrix& m) { return m.rows() == dim_ && m.cols() == dim_; };
  for (std::size_t i = 0; i < action_.size(); ++i) {
    if (!square(action_[i]) || !square(inverses_[i])) throw DimensionError("action matrices must be dim x dim");
  }
  const auto identity = IntMatrix::identity(dim_);
  const auto congruent = [&](const IntMatrix& a, const IntMatrix& b) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!relations_.contains(sub(a.column(j), b.column(j)))) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < action_.size(); ++i) {
    const auto tag = std::to_string(i + 1);
    if (!relations_.contains(lattice_image(action_[i], relations_))) {
      throw PreconditionError("action " + tag + " does not preserve the relations");
    }
    if (!relations_.contains(lattice_image(inverses_[i], relations_))) {
      throw PreconditionError("inverse " + tag + " does not preserve the relations");
    }
    if (!congruent(action_[i] * inverses_[i], identity) || !congruent(inverses_[i] * action_[i], identity)) {
      throw PreconditionError("declared inverse " + tag + " is not an inverse modulo relations");
    }
    for (std::size_t j = i + 1; j < action_.size(); ++j) {
      if (!congruent(action_[i] * action_[j], action_[j] * action_[i])) {
        throw PreconditionError("actions " + tag + " and " + std::to_string(j + 1) + " do not commute");
      }
    }
  }
}

MatrixModule::MatrixModule(std::size_t dim, std::vector<IntMatrix> action, std::vector<IntMatrix> inverses)
    : MatrixModule(dim, std::move(action), std::move(inverses), Lattice(dim)) {}

auto MatrixModule::canonical(const IntVector& x) const -> IntVector {
  if (x.size() != dim_) {
    throw DimensionError("module element of length " + std::to_string(x.size()) + " in a module of dimension " +
                         std::to_string(dim_));
  }
  return relations_.reduce(x);
}

auto MatrixModule::equal(const IntVector& x, const IntVector& y) const -> bool {
  return canonical(x) == canonical(y);
}

auto MatrixModule::apply_monomial(const Exponent& a, const IntVector& x) const -> IntVector {
  if (a.size() != rank_A()) throw DimensionError("monomial rank does not match the acting group");
  IntVector y = canonical(x);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& m = a[i] >= 0 ? action_[i] : inverses_[i];
    const long steps = a[i] >= 0 ? a[i] : -a[i];
    for (long k = 0; k < steps; ++k) y = relations_.reduce(m.apply(y));
  }
  return y;
}

auto MatrixModule::quotient(const Lattice& extra) const -> MatrixModule {
  return MatrixModule(dim_, action_, inverses_, lattice_sum(relations_, extra));
}

auto act(const RingElement& p, const IntVector& x, const MatrixModule& m) -> IntVector {
  if (p.rank() != m.rank_A()) throw DimensionError("ring rank does not match the module's acting group");
  if (x.size() != m.dim()) throw DimensionError("module element has the wrong length");
  IntVector total(m.dim());
  for (const auto& [a, c] : p.terms()) addmul(total, c, m.apply_monomial(a, x));
  return m.canonical(total);
}

auto annihilates(const RingElement& p, const IntVector& x, const MatrixModule& m) -> bool {
  return is_zero(act(p, x, m));
}

auto augmentation_image(const MatrixModule& m, const Lattice& sub) -> Lattice {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < m.rank_A(); ++i) {
    for (const auto& b : sub.basis().row_vectors()) gens.push_back(minus_identity_apply(m.action(i), b));
  }
  return lattice_sum(Lattice::from_generators(m.dim(), gens), m.relations());
}

auto nilpotency_index(const MatrixModule& m, int max_q) -> std::optional<int> {
  if (max_q < 1) throw PreconditionError("max_q must be positive");
  Lattice current = Lattice::full(m.dim());
  for (int q = 1; q <= max_q; ++q) {
    Lattice next = augmentation_image(m, current);
    if (next == m.relations()) return q;
    // A stationary chain above the relations never reaches them.
    if (next == current) return std::nullopt;
    current = std::move(next);
  }
  return std::nullopt;
}

auto coinvariants(const MatrixModule& m) -> Coinvariants {
  Coinvariants out;
  const auto image = augmentation_image(m, Lattice::full(m.dim()));
  out.generators = quotient_generators(image, out.invariant_factors);
  out.min_generators = out.generators.size();
  return out;
}

auto invariants(const MatrixModule& m) -> Lattice {
  if (!m.is_free()) throw PreconditionError("invariants are supported for torsion-free presentations only");
  const auto identity = IntMatrix::identity(m.dim());
  IntMatrix stacked(0, m.dim());
  for (std::size_t i = 0; i < m.rank_A(); ++i) stacked = stack(stacked, m.action(i) - identity);
  return integer_kernel(stacked);
}

auto f_bk(const MatrixModule& m, const IntVector& x, const std::vector<int>& bk) -> IntVector {
  if (bk.size() != m.rank_A()) throw DimensionError("bk must have one entry per generator of A");
  IntVector y = m.canonical(x);
  for (std::size_t i = 0; i < bk.size(); ++i) {
    if (bk[i] < 0) throw PreconditionError("bk entries must be nonnegative");
    for (int k = 0; k < bk[i]; ++k) y = m.canonical(minus_identity_apply(m.action(i), y));
  }
  return y;
}

auto lemalg_generating_set(const MatrixModule& m, int max_q) -> LemalgResult {
  const auto k = nilpotency_index(m, max_q);
  if (!k) throw PreconditionError("module is not nilpotent within index " + std::to_string(max_q));
  LemalgResult out;
  out.nilpotency_index = *k;
  const auto top = coinvariants(m);
  out.coinvariant_generators = top.min_generators;
  const auto r = static_cast<long>(m.rank_A());
  out.bound = binomial(*k + r - 1, static_cast<unsigned long>(r)) * static_cast<unsigned long>(top.min_generators);

  // Induction on the index: N = Σ_{|bk|=k-1} im f_bk is generated by f_bk of lifts of
  // generators of M_A; recurse on M/N whose index is smaller.
  MatrixModule current = m;
  int index = *k;
  while (index > 1) {
    const auto level = coinvariants(current);
    std::vector<std::vector<int>> bks;
    std::vector<int> scratch;
    compositions(m.rank_A(), index - 1, scratch, bks);
    std::vector<IntVector> images;
    for (const auto& bk : bks) {
      for (const auto& g : level.generators) {
        auto y = f_bk(current, g, bk);
        if (!is_zero(y)) images.push_back(std::move(y));
      }
    }
    for (const auto& y : images) out.generators.push_back(m.canonical(y));
    current = current.quotient(Lattice::from_generators(m.dim(), images));
    const auto next = nilpotency_index(current, index);
    if (!next || *next >= index) throw CheckFailure("quotient by the top layer did not lower the nilpotency index");
    index = *next;
  }
  std::vector<Integer> factors;
  for (auto& g : quotient_generators(current.relations(), factors)) out.generators.push_back(m.canonical(g));
  return out;
}

auto spans_module(const MatrixModule& m, const std::vector<IntVector>& generators) -> bool {
  const auto span = lattice_sum(Lattice::from_generators(m.dim(), generators), m.relations());
  return span == Lattice::full(m.dim());
}

auto closed_under_action(const MatrixModule& m, const std::vector<IntVector>& generators) -> bool {
  const auto span = lattice_sum(Lattice::from_generators(m.dim(), generators), m.relations());
  for (std::size_t i = 0; i < m.rank_A(); ++i) {
    for (const auto& b : span.basis().row_vectors()) {
      if (!span.contains(m.action(i).apply(b)) || !span.contains(m.inverse(i).apply(b))) return false;
    }
  }
  return true;
}

auto fg_from_certificate(const MatrixModule& m, const IntVector& x, const FGCertificate& cert)
    -> CertifiedGenerators {
  const std::size_t r = m.rank_A();
  if (cert.directions.size() != r) throw PreconditionError("certificate needs exactly rank_A directions");
  std::vector<IntVector> dirs;
  for (std::size_t s = 0; s < r; ++s) {
    const auto& [a, k] = cert.directions[s];
    if (a.size() != r) throw DimensionError("certificate direction " + std::to_string(s + 1) + " has wrong length");
    if (k < 1) throw PreconditionError("certificate exponent for direction " + std::to_string(s + 1) + " must be >= 1");
    dirs.push_back(a);
  }
  const auto spanned = Lattice::from_generators(r, dirs);
  if (spanned.rank() < r) throw PreconditionError("certificate directions are not of full rank");
  for (std::size_t s = 0; s < r; ++s) {
    const auto& [a, k] = cert.directions[s];
    if (!annihilates(RingElement::difference(to_exponent(a)).pow(static_cast<unsigned>(k)), x, m)) {
      throw CheckFailure("certificate direction " + std::to_string(s + 1) + " does not annihilate x");
    }
  }

  // Π_s (e_{a_s} - 1)^{j_s} x for 0 <= j_s < k_s, then translates by coset representatives.
  std::vector<IntVector> layer{m.canonical(x)};
  for (std::size_t s = 0; s < r; ++s) {
    const auto diff = RingElement::difference(to_exponent(cert.directions[s].first));
    std::vector<IntVector> next;
    for (const auto& y : layer) {
      IntVector cur = y;
      for (int j = 0; j < cert.directions[s].second; ++j) {
        next.push_back(cur);
        cur = act(diff, cur, m);
      }
    }
    layer = std::move(next);
  }
  CertifiedGenerators out;
  const auto transversal = index_and_cosets(spanned, Lattice::full(r));
  out.index = transversal.index();
  for (const auto& b : transversal.reps()) {
    const auto e = to_exponent(b);
    for (const auto& y : layer) out.generators.push_back(m.apply_monomial(e, y));
  }
  out.verified = closed_under_action(m, out.generators);
  return out;
}

}  // namespace tw
