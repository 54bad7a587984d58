#include "tw/free_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "tw/errors.hpp"

namespace tw {
namespace {

void push_reduced(std::vector<int>& out, int letter) {
  if (!out.empty() && out.back() == -letter) {
    out.pop_back();
  } else {
    out.push_back(letter);
  }
}

}  // namespace

FreeWord::FreeWord(std::vector<int> letters) {
  letters_.reserve(letters.size());
  for (int x : letters) {
    if (x == 0) throw PreconditionError("free word letters must be nonzero");
    push_reduced(letters_, x);
  }
}

auto FreeWord::generator(int i, int exponent) -> FreeWord {
  if (i < 1) throw PreconditionError("generator index must be positive");
  return FreeWord({i}).pow(exponent);
}

auto FreeWord::max_generator() const -> int {
  int m = 0;
  for (int x : letters_) m = std::max(m, std::abs(x));
  return m;
}

auto FreeWord::inverse() const -> FreeWord {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

auto FreeWord::pow(int k) const -> FreeWord {
  const FreeWord base = k < 0 ? inverse() : *this;
  FreeWord out;
  for (int t = 0; t < std::abs(k); ++t) out = out * base;
  return out;
}

auto FreeWord::to_string() const -> std::string {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t p = 0; p < letters_.size(); ++p) {
    if (p) os << ' ';
    os << 'a' << std::abs(letters_[p]);
    if (letters_[p] < 0) os << "^-1";
  }
  return os.str();
}

auto operator*(const FreeWord& a, const FreeWord& b) -> FreeWord {
  std::vector<int> out = a.letters();
  for (int x : b.letters()) push_reduced(out, x);
  return FreeWord(std::move(out));
}

auto commutator(const FreeWord& x, const FreeWord& y) -> FreeWord { return x * y * x.inverse() * y.inverse(); }

auto conjugate(const FreeWord& g, const FreeWord& x) -> FreeWord { return g * x * g.inverse(); }

EndoOfFree::EndoOfFree(int n, std::vector<FreeWord> images) : n_(n), images_(std::move(images)) {
  if (n < 1) throw PreconditionError("free group rank must be positive");
  if (images_.size() != static_cast<std::size_t>(n)) throw DimensionError("need one image per generator");
  for (const auto& w : images_) {
    if (w.max_generator() > n) throw DimensionError("image uses a generator beyond the rank");
  }
}

auto EndoOfFree::identity(int n) -> EndoOfFree {
  std::vector<FreeWord> images;
  for (int i = 1; i <= n; ++i) images.push_back(FreeWord::generator(i));
  return {n, std::move(images)};
}

auto EndoOfFree::apply(const FreeWord& w) const -> FreeWord {
  if (w.max_generator() > n_) throw DimensionError("word uses a generator beyond the rank");
  std::vector<int> out;
  for (int x : w.letters()) {
    const auto& img = images_[static_cast<std::size_t>(std::abs(x) - 1)];
    if (x > 0) {
      for (int y : img.letters()) push_reduced(out, y);
    } else {
      const auto& l = img.letters();
      for (auto it = l.rbegin(); it != l.rend(); ++it) push_reduced(out, -*it);
    }
  }
  return FreeWord(std::move(out));
}

auto EndoOfFree::abelianization() const -> IntMatrix {
  const auto n = static_cast<std::size_t>(n_);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int x : images_[i].letters()) m(static_cast<std::size_t>(std::abs(x) - 1), i) += x > 0 ? 1 : -1;
  }
  return m;
}

auto EndoOfFree::is_ia() const -> bool { return abelianization() == IntMatrix::identity(static_cast<std::size_t>(n_)); }

auto EndoOfFree::to_string() const -> std::string {
  std::ostringstream os;
  for (int i = 1; i <= n_; ++i) {
    if (i > 1) os << ", ";
    os << 'a' << i << " -> " << image(i).to_string();
  }
  return os.str();
}

auto compose(const EndoOfFree& phi, const EndoOfFree& psi) -> EndoOfFree {
  if (phi.rank() != psi.rank()) throw DimensionError("compose: ranks differ");
  std::vector<FreeWord> images;
  images.reserve(static_cast<std::size_t>(phi.rank()));
  for (const auto& w : phi.images()) images.push_back(psi.apply(w));
  return {phi.rank(), std::move(images)};
}

Automorphism::Automorphism(EndoOfFree forward, EndoOfFree backward)
    : forward_(std::move(forward)), backward_(std::move(backward)) {
  if (forward_.rank() != backward_.rank()) throw DimensionError("automorphism and inverse ranks differ");
}

auto Automorphism::identity(int n) -> Automorphism { return {EndoOfFree::identity(n), EndoOfFree::identity(n)}; }

auto Automorphism::pow(int k) const -> Automorphism {
  const Automorphism base = k < 0 ? inverse() : *this;
  Automorphism out = identity(rank());
  for (int t = 0; t < std::abs(k); ++t) out = out * base;
  return out;
}

auto Automorphism::inverse_verified() const -> bool {
  const auto id = EndoOfFree::identity(rank());
  return compose(forward_, backward_) == id && compose(backward_, forward_) == id;
}

auto operator*(const Automorphism& a, const Automorphism& b) -> Automorphism {
  return {compose(a.forward(), b.forward()), compose(b.backward(), a.backward())};
}

auto commutator(const Automorphism& x, const Automorphism& y) -> Automorphism {
  return x * y * x.inverse() * y.inverse();
}

auto magnus_generator(int n, int i, int j) -> Automorphism {
  if (i < 1 || j < 1 || i > n || j > n) throw PreconditionError("Magnus generator index out of range");
  if (i == j) throw PreconditionError("Magnus generator indices must be distinct");
  const auto ai = FreeWord::generator(i);
  const auto aj = FreeWord::generator(j);
  auto fwd = EndoOfFree::identity(n).images();
  auto bwd = fwd;
  fwd[static_cast<std::size_t>(i - 1)] = conjugate(aj, ai);
  bwd[static_cast<std::size_t>(i - 1)] = conjugate(aj.inverse(), ai);
  return {EndoOfFree(n, std::move(fwd)), EndoOfFree(n, std::move(bwd))};
}

auto magnus_generator(int n, int i, int j, int k) -> Automorphism {
  for (int x : {i, j, k}) {
    if (x < 1 || x > n) throw PreconditionError("Magnus generator index out of range");
  }
  if (i == j || j == k || i == k) throw PreconditionError("Magnus generator indices must be distinct");
  const auto ai = FreeWord::generator(i);
  const auto aj = FreeWord::generator(j);
  const auto ak = FreeWord::generator(k);
  auto fwd = EndoOfFree::identity(n).images();
  auto bwd = fwd;
  fwd[static_cast<std::size_t>(i - 1)] = ai * commutator(aj, ak);
  bwd[static_cast<std::size_t>(i - 1)] = ai * commutator(ak, aj);
  return {EndoOfFree(n, std::move(fwd)), EndoOfFree(n, std::move(bwd))};
}

auto magnus2_multiply(const Magnus2& a, const Magnus2& b) -> Magnus2 {
  if (a.linear.size() != b.linear.size()) throw DimensionError("Magnus2: ranks differ");
  Magnus2 out;
  out.constant = a.constant * b.constant;
  const std::size_t n = a.linear.size();
  out.linear = IntVector(n);
  out.quadratic = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) out.linear[i] = a.constant * b.linear[i] + a.linear[i] * b.constant;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.quadratic(i, j) = a.constant * b.quadratic(i, j) + a.quadratic(i, j) * b.constant + a.linear[i] * b.linear[j];
    }
  }
  return out;
}

auto magnus2_expand(const FreeWord& w, int n) -> Magnus2 {
  if (w.max_generator() > n) throw DimensionError("word uses a generator beyond the rank");
  const auto un = static_cast<std::size_t>(n);
  Magnus2 acc{1, IntVector(un, 0), IntMatrix(un, un)};
  for (int x : w.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(x) - 1);
    Magnus2 letter{1, IntVector(un, 0), IntMatrix(un, un)};
    // a^{-1} = 1 - A + A^2 - ...
    letter.linear[i] = x > 0 ? 1 : -1;
    if (x < 0) letter.quadratic(i, i) = 1;
    acc = magnus2_multiply(acc, letter);
  }
  return acc;
}

auto commutator_expansion_check(const FreeWord& x, const std::vector<FreeWord>& ys) -> bool {
  FreeWord product;
  for (const auto& y : ys) product = product * y;
  const FreeWord lhs = commutator(x, product);
  FreeWord rhs;
  FreeWord prefix;
  for (const auto& y : ys) {
    rhs = rhs * conjugate(prefix, commutator(x, y));
    prefix = prefix * y;
  }
  return lhs == rhs;
}

}  // namespace tw
