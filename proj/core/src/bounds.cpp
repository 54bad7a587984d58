#include "tw/bounds.hpp"

#include <algorithm>
#include <cstdlib>

#include "tw/errors.hpp"
#include "tw/symplectic.hpp"

namespace tw {

auto schreier_bound(const Integer& ngens, const Integer& index) -> Integer {
  if (ngens < 1 || index < 1) throw PreconditionError("schreier_bound: inputs must be positive");
  return (ngens - 1) * index + 1;
}

auto h2_generators(unsigned long q) -> Integer { return binomial(Integer(q), 2); }

auto five_term_bound(const Integer& gens_h2_of_a, const Integer& gens_h1_of_g) -> Integer {
  if (gens_h2_of_a < 0 || gens_h1_of_g < 0) throw PreconditionError("five_term_bound: inputs must be nonnegative");
  return gens_h2_of_a + gens_h1_of_g;
}

auto lemalg_bound(long k, long r, const Integer& n) -> Integer {
  if (k < 1 || r < 1 || n < 0) throw PreconditionError("lemalg_bound: need k >= 1, r >= 1, n >= 0");
  return binomial(Integer(k + r - 1), static_cast<unsigned long>(r)) * n;
}

auto pascal_binomial(unsigned n, unsigned k) -> Integer {
  if (k > n) return 0;
  std::vector<Integer> row(k + 1, 0);
  row[0] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
  }
  return row[k];
}

auto Scientific::to_string() const -> std::string {
  std::string m = std::to_string(mantissa);
  if (m.size() > 1) m.insert(1, ".");
  return m + "e" + std::to_string(exponent);
}

auto scientific(const Integer& x, int digits) -> Scientific {
  if (x <= 0 || digits < 1) throw PreconditionError("scientific: positive value and digit count required");
  const std::string s = x.get_str();
  Scientific out;
  out.digits = digits;
  out.exponent = static_cast<long>(s.size()) - 1;
  if (static_cast<int>(s.size()) <= digits) {
    out.mantissa = std::stoi(s);
    for (int i = static_cast<int>(s.size()); i < digits; ++i) out.mantissa *= 10;
    return out;
  }
  int lead = std::stoi(s.substr(0, static_cast<std::size_t>(digits)));
  if (s[static_cast<std::size_t>(digits)] >= '5') ++lead;
  int limit = 1;
  for (int i = 0; i < digits; ++i) limit *= 10;
  if (lead == limit) {
    lead /= 10;
    ++out.exponent;
  }
  out.mantissa = lead;
  return out;
}

auto BoundReport::ok() const -> bool {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

auto BoundReport::value(const std::string& name) const -> const Integer& {
  for (const auto& q : quantities) {
    if (q.name == name) return q.value;
  }
  throw PreconditionError("no quantity named " + name);
}

auto thm_quant_pipeline() -> BoundReport {
  BoundReport rep;
  auto put = [&](const std::string& name, const Integer& v, const std::string& formula) {
    rep.quantities.push_back({name, v, formula});
    return v;
  };
  const auto tv = tilde_v3();
  const Integer index = put("index_U3_tildeV3", tv.index_ug_tilde, "|U_3 : 2 ker(C mod 2)| from lattice HNF");
  const Integer rank_tilde = put("rank_tildeV3", static_cast<unsigned long>(tv.tilde.rank()), "rank of 2 ker(C mod 2)");
  const Integer rank_u3 = put("rank_U3", static_cast<unsigned long>(tv.ug.rank()), "binom(6,3) - 6 via quotient presentation");
  const auto nb = nilpotency_bounds(3, 1);
  const Integer k = put("nilpotency_k", nb.bound, "4r + 1 with r = 4g^2 - 10g + 4 at g = 3");
  const Integer torelli_gens = put("torelli_generators", 35, "generators of the genus-3 Torelli group (input)");
  const Integer schreier = put("schreier", schreier_bound(torelli_gens, index), "(35 - 1) * index + 1");
  const Integer h2 = put("h2_generators", h2_generators(to_long(rank_tilde)), "binom(rank_tildeV3, 2)");
  const Integer five = put("five_term", five_term_bound(h2, schreier), "h2_generators + schreier");
  const Integer q_dim = put("h1_rational_dim", h2 + rank_u3, "h2_generators + rank_U3");
  const long r = to_long(rank_tilde);
  rep.integer_bound = put("integer_bound", lemalg_bound(to_long(k), r, five), "binom(k + r - 1, r) * five_term");
  rep.rational_bound = put("rational_bound", lemalg_bound(to_long(k), r, q_dim), "binom(k + r - 1, r) * h1_rational_dim");
  put("binom_54_14", binomial(Integer(54), 14), "binom(k + r - 1, r)");

  Integer two21;
  mpz_ui_pow_ui(two21.get_mpz_t(), 2, 21);
  Integer two20;
  mpz_ui_pow_ui(two20.get_mpz_t(), 2, 20);
  rep.integer_scientific = scientific(rep.integer_bound, 2);
  rep.rational_scientific = scientific(rep.rational_bound, 2);
  auto near = [](const Scientific& s, int mantissa, long exponent) {
    return s.exponent == exponent && std::abs(s.mantissa - mantissa) <= 1;
  };
  rep.checks = {
      {"index is 2^20", index == two20},
      {"k = 41", k == 41},
      {"rank of tildeV3 is 14", rank_tilde == 14},
      {"binom(14,2) = 91", h2 == 91},
      {"schreier = 34*2^20 + 1", schreier == 34 * two20 + 1},
      {"five_term = 17*2^21 + 92", five == 17 * two21 + 92},
      {"17*2^21 + 92 - 91 = 34*2^20 + 1", 17 * two21 + 92 - 91 == 34 * two20 + 1},
      {"rational dimension = 105", q_dim == 105},
      {"binom(54,14) agrees with Pascal's rule", binomial(Integer(54), 14) == pascal_binomial(54, 14)},
      {"integer bound = binom(54,14)*(17*2^21+92)", rep.integer_bound == binomial(Integer(54), 14) * (17 * two21 + 92)},
      {"rational bound = binom(54,14)*105", rep.rational_bound == binomial(Integer(54), 14) * 105},
      {"integer bound rounds to 1.2e20", near(rep.integer_scientific, 12, 20)},
      {"rational bound rounds to 3.4e14", near(rep.rational_scientific, 34, 14)},
  };
  return rep;
}

}  // namespace tw
