#pragma once

#include <array>
#include <string>

#include "json.hpp"
#include "tw/free_group.hpp"
#include "tw/functional_equations.hpp"
#include "tw/lattice.hpp"
#include "tw/module.hpp"
#include "tw/quasipoly.hpp"
#include "tw/sdp.hpp"

namespace tw {

using Json = nlohmann::json;

// Integers travel as JSON numbers when they fit in int64 and as decimal strings otherwise.
[[nodiscard]] auto to_json(const Integer& x) -> Json;
[[nodiscard]] auto to_json(const IntVector& v) -> Json;
[[nodiscard]] auto to_json(const IntMatrix& m) -> Json;
[[nodiscard]] auto integer_from_json(const Json& j) -> Integer;
[[nodiscard]] auto vector_from_json(const Json& j) -> IntVector;
// Rows of equal length; `cols` is used when the row list is empty.
[[nodiscard]] auto matrix_from_json(const Json& j, std::size_t cols) -> IntMatrix;
[[nodiscard]] auto long_from_json(const Json& j, const char* what) -> long;

// Window schema: {"target": {"free_rank": d, "torsion": [...]}, "box": [lo, hi] or [klo, khi, llo, lhi],
// "values": [element, ...]} with values row-major, k outer.
[[nodiscard]] auto target_from_json(const Json& j) -> TargetGroup;
[[nodiscard]] auto to_json(const TargetGroup& g) -> Json;
[[nodiscard]] auto window1_from_json(const Json& j) -> WindowFn1;
[[nodiscard]] auto window2_from_json(const Json& j) -> WindowFn2;
[[nodiscard]] auto to_json(const WindowFn1& f) -> Json;
[[nodiscard]] auto to_json(const WindowFn2& f) -> Json;
template <std::size_t N>
[[nodiscard]] auto box_from_json(const Json& j) -> std::array<Range, N> {
  if (!j.is_array() || j.size() != 2 * N) throw InputError("box must list " + std::to_string(2 * N) + " integers");
  std::array<Range, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = Range{long_from_json(j[2 * i], "box"), long_from_json(j[2 * i + 1], "box")};
  return out;
}

// Module schema: {"dim": d, "rank_A": r, "action": [matrix, ...], "inverses": [matrix, ...], "relations": [row, ...]}.
[[nodiscard]] auto module_from_json(const Json& j) -> MatrixModule;
// Certificate schema: {"directions": [{"a": [...], "k": n}, ...], "x": optional element}.
[[nodiscard]] auto certificate_from_json(const Json& j) -> FGCertificate;

// Endomorphism schema: {"n": n, "images": [[[idx, exp], ...], ...]}.
[[nodiscard]] auto endo_from_json(const Json& j) -> EndoOfFree;
[[nodiscard]] auto to_json(const EndoOfFree& e) -> Json;

// Instance schema: {"space": "Ug", "g": 3 (or "n"), "B": lattice or [row, ...], "X": [vector, ...], "xset": "neither_kernel"}.
struct LoadedInstance {
  InducedAction action;
  DisplacementInstance instance;
};
[[nodiscard]] auto instance_from_json(const Json& j) -> LoadedInstance;
[[nodiscard]] auto to_json(const InducedAction& act, const Witness& w) -> Json;

// Lattice schema: {"ambient_rank": r, "basis": [row, ...]}; rows are canonicalized on load.
[[nodiscard]] auto to_json(const Lattice& l) -> Json;
[[nodiscard]] auto lattice_from_json(const Json& j) -> Lattice;

// Parse a file; InputError on I/O or syntax failure.
[[nodiscard]] auto read_json_file(const std::string& path) -> Json;
void write_json_file(const std::string& path, const Json& j);

}  // namespace tw
