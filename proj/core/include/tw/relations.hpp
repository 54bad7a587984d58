#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tw/free_group.hpp"

namespace tw {

struct RelationFamily {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;  // offending instance and the differing image

  [[nodiscard]] auto ok() const -> bool { return failures == 0; }
};

struct RelationReport {
  int n = 0;
  std::vector<RelationFamily> families;
  // K_12 and K_21 must be reported as non-commuting.
  bool negative_control_detected = false;

  [[nodiscard]] auto ok() const -> bool;
};

// Exact composition checks of the commutation relations among Magnus generators and the derived identities.
[[nodiscard]] auto relation_suite(int n) -> RelationReport;

// Compare the forward images of two automorphisms; empty when equal, otherwise a description.
[[nodiscard]] auto first_image_difference(const Automorphism& x, const Automorphism& y) -> std::string;

// Chein's elements in <K_12, K_13, K_123> of IA_n.
[[nodiscard]] auto chein_R(int n, int p, int q) -> Automorphism;
[[nodiscard]] auto chein_L(int n, int r, int s) -> Automorphism;

}  // namespace tw
