#include "tw/sdp.hpp"

#include <random>
#include <sstream>

#include "tw/errors.hpp"
#include "tw/exterior.hpp"
#include "tw/normal_form.hpp"

namespace tw {
namespace {

auto complement_of_identity(const IntMatrix& t) -> IntMatrix {
  // (I + N)^{-1} = I - N when N² = 0, which holds for transvections.
  return 2 * IntMatrix::identity(t.rows()) - t;
}

struct SearchState {
  const DisplacementInstance& inst;
  const InducedAction& act;
  std::size_t budget;
  std::size_t nodes = 0;
  std::vector<int> word;  // letter codes 2·gen + (exponent < 0)

  [[nodiscard]] auto displaced(const std::vector<IntVector>& ys) const -> bool {
    for (const auto& y : ys) {
      if (inst.b.contains(y)) return false;
    }
    return true;
  }

  // y ↦ (letter matrix)^{-1} y
  [[nodiscard]] auto step(const std::vector<IntVector>& ys, int code) const -> std::vector<IntVector> {
    const auto& g = act.generators()[static_cast<std::size_t>(code / 2)];
    const IntMatrix& inv = code % 2 == 0 ? g.backward : g.forward;
    std::vector<IntVector> out;
    out.reserve(ys.size());
    for (const auto& y : ys) out.push_back(inv.apply(y));
    return out;
  }

  auto dfs(const std::vector<IntVector>& ys, int remaining) -> bool {
    if (nodes >= budget) return false;
    ++nodes;
    if (remaining == 0) return displaced(ys);
    const int letters = static_cast<int>(2 * act.generators().size());
    for (int code = 0; code < letters; ++code) {
      if (!word.empty() && (word.back() ^ 1) == code) continue;
      word.push_back(code);
      if (dfs(step(ys, code), remaining - 1)) return true;
      word.pop_back();
      if (nodes >= budget) return false;
    }
    return false;
  }
};

auto to_witness(const std::vector<int>& word) -> Witness {
  Witness w;
  for (int code : word) w.letters.emplace_back(static_cast<std::size_t>(code / 2), code % 2 == 0 ? 1 : -1);
  return w;
}

}  // namespace

auto space_name(SpaceKind k) -> std::string {
  switch (k) {
    case SpaceKind::Wedge3: return "wedge3";
    case SpaceKind::Ug: return "Ug";
    case SpaceKind::TildeW: return "tildeW";
    case SpaceKind::Wn: return "Wn";
  }
  return "?";
}

auto parse_space(const std::string& s) -> SpaceKind {
  if (s == "wedge3") return SpaceKind::Wedge3;
  if (s == "Ug") return SpaceKind::Ug;
  if (s == "tildeW") return SpaceKind::TildeW;
  if (s == "Wn") return SpaceKind::Wn;
  throw InputError("unknown space tag: " + s);
}

auto xset_name(XsetKind k) -> std::string { return k == XsetKind::AllNonzero ? "all_nonzero" : "neither_kernel"; }

auto parse_xset(const std::string& s) -> XsetKind {
  if (s == "all_nonzero") return XsetKind::AllNonzero;
  if (s == "neither_kernel") return XsetKind::NeitherKernel;
  throw InputError("unknown xset tag: " + s);
}

auto transvection(const SymplecticSpace& h, const IntVector& v) -> IntMatrix {
  const std::size_t n = h.rank();
  if (v.size() != n) throw DimensionError("transvection: vector must lie in H");
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < n; ++j) {
    const auto e = unit_vector(n, j);
    cols.push_back(add(e, scale(h.pairing(e, v), v)));
  }
  return IntMatrix::from_columns(cols, n);
}

auto induce_tilde_w(const IntMatrix& m) -> IntMatrix {
  const auto inv = unimodular_inverse(m);
  if (!inv) throw PreconditionError("induce_tilde_w: matrix is not invertible over Z");
  const IntMatrix dual = inv->transpose();
  const IntMatrix w2 = induce_wedge2(m);
  const std::size_t n = m.rows();
  const std::size_t c = w2.rows();
  IntMatrix out(n * c, n * c);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(dual(i, j)) == 0) continue;
      for (std::size_t p = 0; p < c; ++p) {
        for (std::size_t q = 0; q < c; ++q) out(i * c + p, j * c + q) = dual(i, j) * w2(p, q);
      }
    }
  }
  return out;
}

auto induce_quotient(const IntMatrix& m, SpaceKind space) -> IntMatrix {
  if (m.rows() != m.cols()) throw DimensionError("induce_quotient: square matrix required");
  if (space == SpaceKind::Ug) {
    if (m.rows() % 2 != 0) throw DimensionError("induce_quotient: H must have even rank");
    const UgSpace ug(static_cast<int>(m.rows() / 2));
    return ug.presentation().induced(induce_wedge3(m));
  }
  if (space == SpaceKind::Wn) {
    const TildeWSpace w(static_cast<int>(m.rows()));
    return w.presentation().induced(induce_tilde_w(m));
  }
  throw PreconditionError("induce_quotient: space must be Ug or Wn");
}

InducedAction::InducedAction(SpaceKind kind, int parameter) : kind_(kind), parameter_(parameter) {
  if (kind == SpaceKind::Wedge3 || kind == SpaceKind::Ug) {
    ug_ = std::make_shared<const UgSpace>(parameter);
    const auto& h = ug_->space();
    auto add_gen = [&](const std::string& label, const IntVector& v) {
      const auto t = transvection(h, v);
      base_.push_back({"T[" + label + "]", t, complement_of_identity(t)});
    };
    for (int i = 1; i <= parameter; ++i) {
      add_gen("a" + std::to_string(i), h.a(i));
      add_gen("b" + std::to_string(i), h.b(i));
    }
    for (int i = 1; i < parameter; ++i) {
      add_gen("b" + std::to_string(i) + "-b" + std::to_string(i + 1), sub(h.b(i), h.b(i + 1)));
    }
    dimension_ = kind == SpaceKind::Ug ? ug_->rank() : h.wedge3_dimension();
  } else {
    tw_ = std::make_shared<const TildeWSpace>(parameter);
    const auto n = static_cast<std::size_t>(parameter);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        IntMatrix e = IntMatrix::identity(n);
        e(i, j) = 1;
        IntMatrix f = IntMatrix::identity(n);
        f(i, j) = -1;
        base_.push_back({"E" + std::to_string(i + 1) + std::to_string(j + 1), e, f});
      }
    }
    dimension_ = kind == SpaceKind::Wn ? tw_->quotient_rank() : tw_->dimension();
  }
  for (const auto& g : base_) induced_.push_back({g.label, induce(g.forward), induce(g.backward)});
}

auto InducedAction::induce(const IntMatrix& m) const -> IntMatrix {
  switch (kind_) {
    case SpaceKind::Wedge3: return induce_wedge3(m);
    case SpaceKind::Ug: return ug_->presentation().induced(induce_wedge3(m));
    case SpaceKind::TildeW: return induce_tilde_w(m);
    case SpaceKind::Wn: return tw_->presentation().induced(induce_tilde_w(m));
  }
  throw PreconditionError("unknown space");
}

auto InducedAction::xset_member(const IntVector& v, XsetKind xset) const -> bool {
  if (v.size() != dimension_) throw DimensionError("xset_member: vector has the wrong length");
  if (is_zero(v)) return false;
  if (xset == XsetKind::AllNonzero) return true;
  switch (kind_) {
    case SpaceKind::Wedge3: return !ug_->in_ker_pi(v) && !ug_->in_ker_C(v);
    case SpaceKind::TildeW: return !tw_->in_ker_pi(v) && !tw_->in_ker_C(v);
    // On the quotients ker π is zero and C does not descend; nonzero is the remaining condition.
    case SpaceKind::Ug:
    case SpaceKind::Wn: return true;
  }
  return false;
}

void validate_instance(const DisplacementInstance& inst, const InducedAction& act) {
  if (inst.b.ambient_rank() != act.dimension()) throw DimensionError("B does not live in the acted-on space");
  if (inst.b.rank() >= act.dimension()) throw PreconditionError("B must have rank below the space dimension");
  for (std::size_t i = 0; i < inst.x.size(); ++i) {
    if (!act.xset_member(inst.x[i], inst.xset)) {
      throw PreconditionError("X[" + std::to_string(i) + "] is not in the " + xset_name(inst.xset) + " set");
    }
  }
}

auto witness_matrix(const InducedAction& act, const Witness& w) -> IntMatrix {
  IntMatrix m = IntMatrix::identity(act.dimension());
  for (const auto& [gen, exp] : w.letters) {
    if (gen >= act.generators().size() || (exp != 1 && exp != -1)) throw InputError("witness letter out of range");
    const auto& g = act.generators()[gen];
    m = m * (exp == 1 ? g.forward : g.backward);
  }
  return m;
}

auto witness_string(const InducedAction& act, const Witness& w) -> std::string {
  if (w.letters.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) os << ' ';
    os << act.generators().at(w.letters[i].first).label;
    if (w.letters[i].second < 0) os << "^-1";
  }
  return os.str();
}

auto displacement_search(const DisplacementInstance& inst, const InducedAction& act, const SearchOptions& opt)
    -> SearchResult {
  validate_instance(inst, act);
  if (opt.max_len < 0) throw PreconditionError("max_len must be nonnegative");
  SearchState st{inst, act, opt.iddfs_budget, 0, {}};
  SearchResult res;
  // Iterative deepening: every length-d word is tried before any of length d+1.
  for (int depth = 0; depth <= opt.max_len && st.nodes < st.budget; ++depth) {
    st.word.clear();
    if (st.dfs(inst.x, depth)) {
      res.witness = to_witness(st.word);
      res.phase = "iddfs";
      res.nodes = st.nodes;
      return res;
    }
  }
  res.nodes = st.nodes;
  std::mt19937_64 rng(opt.seed);
  const auto letters = static_cast<std::uint64_t>(2 * act.generators().size());
  for (std::size_t attempt = 0; attempt < opt.random_words && opt.max_len > 0; ++attempt) {
    const auto len = static_cast<int>(1 + rng() % static_cast<std::uint64_t>(opt.max_len));
    std::vector<int> word;
    auto ys = inst.x;
    for (int t = 0; t < len; ++t) {
      int code = 0;
      do {
        code = static_cast<int>(rng() % letters);
      } while (!word.empty() && (word.back() ^ 1) == code);
      word.push_back(code);
      ys = st.step(ys, code);
      ++res.nodes;
      if (st.displaced(ys)) {
        res.witness = to_witness(word);
        res.phase = "random";
        return res;
      }
    }
  }
  res.phase = "exhausted";
  return res;
}

auto verify_witness(const DisplacementInstance& inst, const InducedAction& act, const Witness& w) -> bool {
  if (inst.b.ambient_rank() != act.dimension()) return false;
  const Lattice moved = lattice_image(witness_matrix(act, w), inst.b);
  for (const auto& x : inst.x) {
    if (x.size() != act.dimension() || member(moved, x)) return false;
  }
  return true;
}

}  // namespace tw
