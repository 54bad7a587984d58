#include "tw/relations.hpp"

#include <algorithm>

#include "tw/errors.hpp"

namespace tw {
namespace {

auto label(const char* name, std::initializer_list<int> idx) -> std::string {
  std::string s = name;
  s += '_';
  for (int x : idx) s += std::to_string(x);
  return s;
}

void record(RelationFamily& fam, const std::string& instance, const Automorphism& lhs, const Automorphism& rhs) {
  ++fam.instances;
  const auto diff = first_image_difference(lhs, rhs);
  if (diff.empty()) return;
  if (fam.failures++ == 0) fam.first_failure = instance + ": " + diff;
}

void record_commute(RelationFamily& fam, const std::string& instance, const Automorphism& x, const Automorphism& y) {
  record(fam, instance, x * y, y * x);
}

auto family(const char* name) -> RelationFamily {
  RelationFamily f;
  f.name = name;
  return f;
}

auto distinct(std::initializer_list<int> xs) -> bool {
  std::vector<int> v(xs);
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

// Automorphism fixing every a_r, r ≠ i, and sending a_i to `image`; the inverse is supplied.
auto single_image(int n, int i, const FreeWord& image, const FreeWord& inverse_image) -> Automorphism {
  auto fwd = EndoOfFree::identity(n).images();
  auto bwd = fwd;
  fwd[static_cast<std::size_t>(i - 1)] = image;
  bwd[static_cast<std::size_t>(i - 1)] = inverse_image;
  return {EndoOfFree(n, std::move(fwd)), EndoOfFree(n, std::move(bwd))};
}

}  // namespace

auto RelationReport::ok() const -> bool {
  return negative_control_detected &&
         std::all_of(families.begin(), families.end(), [](const RelationFamily& f) { return f.ok(); });
}

auto first_image_difference(const Automorphism& x, const Automorphism& y) -> std::string {
  if (x.rank() != y.rank()) return "ranks differ";
  for (int i = 1; i <= x.rank(); ++i) {
    const auto& u = x.forward().image(i);
    const auto& v = y.forward().image(i);
    if (!(u == v)) return "a" + std::to_string(i) + " -> " + u.to_string() + " vs " + v.to_string();
  }
  return {};
}

auto chein_R(int n, int p, int q) -> Automorphism {
  const auto k12 = magnus_generator(n, 1, 2);
  const auto k13 = magnus_generator(n, 1, 3);
  const auto k123 = magnus_generator(n, 1, 2, 3);
  return k12.pow(p) * k13.pow(q - 1) * k12.inverse() * k123 * k12 * k13.pow(1 - q) * k12.pow(-p);
}

auto chein_L(int n, int r, int s) -> Automorphism {
  const auto k12 = magnus_generator(n, 1, 2);
  const auto k13 = magnus_generator(n, 1, 3);
  const auto k123 = magnus_generator(n, 1, 2, 3);
  return k12.pow(r) * k13.pow(s) * k12.inverse() * k13.inverse() * k123 * k12 * k13.pow(1 - s) * k12.pow(-r);
}

auto relation_suite(int n) -> RelationReport {
  if (n < 3) throw PreconditionError("relation suite needs n >= 3");
  RelationReport rep;
  rep.n = n;
  auto K = [n](int i, int j) { return magnus_generator(n, i, j); };
  auto K3 = [n](int i, int j, int k) { return magnus_generator(n, i, j, k); };
  const auto a = [](int i) { return FreeWord::generator(i); };

  auto inverses = family("generator inverses");
  auto disjoint = family("disjoint supports commute");
  auto ik_jk = family("K_ik commutes with K_jk");
  auto ikl_jk = family("K_ikl commutes with K_jk");
  auto ikl_jkl = family("K_ikl commutes with K_jkl");
  auto ikl_jkm = family("K_ikl commutes with K_jkm");
  auto triple_inverse = family("K_ikj is the inverse of K_ijk");
  auto action_ij_ik = family("(K_ij, K_ik) conjugates a_i by (a_j, a_k)");
  auto action_L = family("K_ik K_ij^-1 K_ik^-1 K_ijk K_ij sends a_i to (a_k, a_j^-1) a_i");
  auto k_relation = family("K_ijk commutes with K_ik K_ij^-1 K_ik^-1 K_ijk K_ij");
  auto chein = family("Chein R_pq commutes with L_rs, p,q,r,s in -2..2");

  // Every generator with its support, for the disjoint-support family.
  struct Gen {
    Automorphism phi;
    std::vector<int> support;
    std::string name;
  };
  std::vector<Gen> gens;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      gens.push_back({K(i, j), {i, j}, label("K", {i, j})});
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        gens.push_back({K3(i, j, k), {i, j, k}, label("K", {i, j, k})});
      }
    }
  }
  for (const auto& g : gens) {
    ++inverses.instances;
    if (!g.phi.inverse_verified() && inverses.failures++ == 0) inverses.first_failure = g.name;
  }
  for (std::size_t x = 0; x < gens.size(); ++x) {
    for (std::size_t y = x + 1; y < gens.size(); ++y) {
      const auto& s = gens[x].support;
      const auto& t = gens[y].support;
      const bool overlap = std::any_of(s.begin(), s.end(), [&](int v) { return std::find(t.begin(), t.end(), v) != t.end(); });
      if (!overlap) record_commute(disjoint, gens[x].name + ", " + gens[y].name, gens[x].phi, gens[y].phi);
    }
  }

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        if (!distinct({i, j, k})) continue;
        record_commute(ik_jk, label("K", {i, k}) + ", " + label("K", {j, k}), K(i, k), K(j, k));
        record(triple_inverse, label("K", {i, j, k}), K3(i, k, j), K3(i, j, k).inverse());

        const auto c = commutator(a(j), a(k));
        record(action_ij_ik, label("(K_ij,K_ik)", {i, j, k}), commutator(K(i, j), K(i, k)),
               single_image(n, i, conjugate(c, a(i)), conjugate(c.inverse(), a(i))));

        const auto L = K(i, k) * K(i, j).inverse() * K(i, k).inverse() * K3(i, j, k) * K(i, j);
        const auto lw = commutator(a(k), a(j).inverse());
        record(action_L, label("L", {i, j, k}), L, single_image(n, i, lw * a(i), lw.inverse() * a(i)));
        record(k_relation, label("K", {i, j, k}), K3(i, j, k) * L, L * K3(i, j, k));

        for (int l = 1; l <= n; ++l) {
          if (!distinct({i, j, k, l})) continue;
          record_commute(ikl_jk, label("K", {i, k, l}) + ", " + label("K", {j, k}), K3(i, k, l), K(j, k));
          record_commute(ikl_jkl, label("K", {i, k, l}) + ", " + label("K", {j, k, l}), K3(i, k, l), K3(j, k, l));
          for (int m = 1; m <= n; ++m) {
            if (!distinct({i, j, k, l, m})) continue;
            record_commute(ikl_jkm, label("K", {i, k, l}) + ", " + label("K", {j, k, m}), K3(i, k, l), K3(j, k, m));
          }
        }
      }
    }
  }

  std::vector<Automorphism> rs;
  std::vector<Automorphism> ls;
  for (int p = -2; p <= 2; ++p) {
    for (int q = -2; q <= 2; ++q) {
      rs.push_back(chein_R(n, p, q));
      ls.push_back(chein_L(n, p, q));
    }
  }
  for (std::size_t x = 0; x < rs.size(); ++x) {
    for (std::size_t y = 0; y < ls.size(); ++y) {
      const auto name = "R_" + std::to_string(static_cast<int>(x / 5) - 2) + "," + std::to_string(static_cast<int>(x % 5) - 2) +
                        " L_" + std::to_string(static_cast<int>(y / 5) - 2) + "," + std::to_string(static_cast<int>(y % 5) - 2);
      record_commute(chein, name, rs[x], ls[y]);
    }
  }

  rep.negative_control_detected = !first_image_difference(K(1, 2) * K(2, 1), K(2, 1) * K(1, 2)).empty();
  rep.families = {inverses, disjoint, ik_jk, ikl_jk, ikl_jkl, ikl_jkm, triple_inverse,
                  action_ij_ik, action_L, k_relation, chein};
  return rep;
}

}  // namespace tw
