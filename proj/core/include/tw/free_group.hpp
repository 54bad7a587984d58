#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tw/matrix.hpp"

namespace tw {

// Reduced word in a_1..a_n; a letter is +i for a_i and -i for a_i^{-1}.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<int> letters);
  static auto generator(int i, int exponent = 1) -> FreeWord;

  [[nodiscard]] auto letters() const -> const std::vector<int>& { return letters_; }
  [[nodiscard]] auto length() const -> std::size_t { return letters_.size(); }
  [[nodiscard]] auto empty() const -> bool { return letters_.empty(); }
  [[nodiscard]] auto max_generator() const -> int;
  [[nodiscard]] auto inverse() const -> FreeWord;
  [[nodiscard]] auto pow(int k) const -> FreeWord;
  [[nodiscard]] auto to_string() const -> std::string;

  friend auto operator==(const FreeWord& a, const FreeWord& b) -> bool = default;
  friend auto operator<(const FreeWord& a, const FreeWord& b) -> bool { return a.letters_ < b.letters_; }

 private:
  std::vector<int> letters_;  // freely reduced
};

auto operator*(const FreeWord& a, const FreeWord& b) -> FreeWord;
// (x, y) = x y x^{-1} y^{-1}
[[nodiscard]] auto commutator(const FreeWord& x, const FreeWord& y) -> FreeWord;
// g x g^{-1}
[[nodiscard]] auto conjugate(const FreeWord& g, const FreeWord& x) -> FreeWord;

// Endomorphism of F_n given by the images of the generators.
class EndoOfFree {
 public:
  EndoOfFree() = default;
  EndoOfFree(int n, std::vector<FreeWord> images);
  static auto identity(int n) -> EndoOfFree;

  [[nodiscard]] auto rank() const -> int { return n_; }
  [[nodiscard]] auto image(int i) const -> const FreeWord& { return images_.at(static_cast<std::size_t>(i - 1)); }
  [[nodiscard]] auto images() const -> const std::vector<FreeWord>& { return images_; }
  [[nodiscard]] auto apply(const FreeWord& w) const -> FreeWord;
  // Abelianization as an n x n matrix; column i is the exponent sum vector of the image of a_i.
  [[nodiscard]] auto abelianization() const -> IntMatrix;
  [[nodiscard]] auto is_ia() const -> bool;
  [[nodiscard]] auto to_string() const -> std::string;

  friend auto operator==(const EndoOfFree& a, const EndoOfFree& b) -> bool = default;

 private:
  int n_ = 0;
  std::vector<FreeWord> images_;
};

// Automorphisms act on the right: (φψ)(a_i) = ψ(φ(a_i)).
[[nodiscard]] auto compose(const EndoOfFree& phi, const EndoOfFree& psi) -> EndoOfFree;

// Automorphism carried together with its inverse.
class Automorphism {
 public:
  Automorphism() = default;
  Automorphism(EndoOfFree forward, EndoOfFree backward);
  static auto identity(int n) -> Automorphism;

  [[nodiscard]] auto rank() const -> int { return forward_.rank(); }
  [[nodiscard]] auto forward() const -> const EndoOfFree& { return forward_; }
  [[nodiscard]] auto backward() const -> const EndoOfFree& { return backward_; }
  [[nodiscard]] auto inverse() const -> Automorphism { return {backward_, forward_}; }
  [[nodiscard]] auto pow(int k) const -> Automorphism;
  // Both compositions with the inverse are the identity.
  [[nodiscard]] auto inverse_verified() const -> bool;

  friend auto operator==(const Automorphism& a, const Automorphism& b) -> bool { return a.forward_ == b.forward_; }

 private:
  EndoOfFree forward_;
  EndoOfFree backward_;
};

auto operator*(const Automorphism& a, const Automorphism& b) -> Automorphism;
[[nodiscard]] auto commutator(const Automorphism& x, const Automorphism& y) -> Automorphism;

// K_ij: a_i ↦ a_j a_i a_j^{-1}; K_ijk: a_i ↦ a_i (a_j, a_k). Indices are 1-based and distinct.
[[nodiscard]] auto magnus_generator(int n, int i, int j) -> Automorphism;
[[nodiscard]] auto magnus_generator(int n, int i, int j, int k) -> Automorphism;

// Degree-2 truncation of the Magnus expansion a_i ↦ 1 + A_i.
struct Magnus2 {
  Integer constant = 1;
  IntVector linear;
  IntMatrix quadratic;  // coefficient of A_i A_j at (i-1, j-1)

  friend auto operator==(const Magnus2& a, const Magnus2& b) -> bool = default;
};
[[nodiscard]] auto magnus2_expand(const FreeWord& w, int n) -> Magnus2;
[[nodiscard]] auto magnus2_multiply(const Magnus2& a, const Magnus2& b) -> Magnus2;

// (x, y_1⋯y_m) against the product of conjugated (x, y_t).
[[nodiscard]] auto commutator_expansion_check(const FreeWord& x, const std::vector<FreeWord>& ys) -> bool;

}  // namespace tw
