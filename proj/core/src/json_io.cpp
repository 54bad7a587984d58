#include "tw/json_io.hpp"

#include <fstream>
#include <limits>

#include "tw/errors.hpp"

namespace tw {
namespace {

auto require(const Json& j, const char* key) -> const Json& {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

auto element_from_json(const Json& j, const TargetGroup& g) -> GroupElement {
  if (g.size() == 1 && !j.is_array()) return g.normalize({integer_from_json(j)});
  auto v = vector_from_json(j);
  if (v.size() != g.size()) throw InputError("group element has the wrong number of coordinates");
  return g.normalize(std::move(v));
}

}  // namespace

auto to_json(const Integer& x) -> Json {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

auto to_json(const IntVector& v) -> Json {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

auto to_json(const IntMatrix& m) -> Json {
  Json out = Json::array();
  for (const auto& r : m.row_vectors()) out.push_back(to_json(r));
  return out;
}

auto integer_from_json(const Json& j) -> Integer {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long>()) : Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw InputError("not a decimal integer: " + j.get<std::string>());
    return x;
  }
  throw InputError("expected an integer, got " + j.dump());
}

auto long_from_json(const Json& j, const char* what) -> long {
  const Integer x = integer_from_json(j);
  if (!x.fits_slong_p()) throw InputError(std::string(what) + " out of range");
  return x.get_si();
}

auto vector_from_json(const Json& j) -> IntVector {
  if (!j.is_array()) throw InputError("expected an array of integers");
  IntVector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

auto matrix_from_json(const Json& j, std::size_t cols) -> IntMatrix {
  if (!j.is_array()) throw InputError("expected a matrix as an array of rows");
  std::vector<IntVector> rows;
  for (const auto& r : j) {
    rows.push_back(vector_from_json(r));
    if (rows.back().size() != cols) throw InputError("matrix row has the wrong length");
  }
  return IntMatrix::from_rows(rows, cols);
}

auto target_from_json(const Json& j) -> TargetGroup {
  const auto d = long_from_json(require(j, "free_rank"), "free_rank");
  if (d < 0) throw InputError("free_rank must be nonnegative");
  IntVector torsion;
  if (j.contains("torsion")) torsion = vector_from_json(j.at("torsion"));
  for (const auto& t : torsion) {
    if (t < 2) throw InputError("torsion moduli must be at least 2");
  }
  return {static_cast<std::size_t>(d), torsion};
}

auto to_json(const TargetGroup& g) -> Json {
  return Json{{"free_rank", g.free_rank()}, {"torsion", to_json(g.torsion())}};
}

auto window1_from_json(const Json& j) -> WindowFn1 {
  const auto g = target_from_json(require(j, "target"));
  const auto& box = require(j, "box");
  if (!box.is_array() || box.size() != 2) throw InputError("a one-variable window needs box [lo, hi]");
  const long lo = long_from_json(box[0], "box");
  const long hi = long_from_json(box[1], "box");
  if (hi < lo) throw InputError("empty window");
  const auto& values = require(j, "values");
  if (!values.is_array() || values.size() != static_cast<std::size_t>(hi - lo + 1)) {
    throw InputError("window needs hi - lo + 1 values");
  }
  WindowFn1 f(g, lo, hi);
  for (long t = lo; t <= hi; ++t) f.set(t, element_from_json(values[static_cast<std::size_t>(t - lo)], g));
  return f;
}

auto window2_from_json(const Json& j) -> WindowFn2 {
  const auto g = target_from_json(require(j, "target"));
  const auto& box = require(j, "box");
  if (!box.is_array() || box.size() != 4) throw InputError("a two-variable window needs box [klo, khi, llo, lhi]");
  const long klo = long_from_json(box[0], "box");
  const long khi = long_from_json(box[1], "box");
  const long llo = long_from_json(box[2], "box");
  const long lhi = long_from_json(box[3], "box");
  if (khi < klo || lhi < llo) throw InputError("empty window");
  const auto& values = require(j, "values");
  const auto count = static_cast<std::size_t>((khi - klo + 1) * (lhi - llo + 1));
  if (!values.is_array() || values.size() != count) throw InputError("window needs one value per box cell");
  WindowFn2 f(g, klo, khi, llo, lhi);
  std::size_t p = 0;
  for (long k = klo; k <= khi; ++k) {
    for (long l = llo; l <= lhi; ++l) f.set(k, l, element_from_json(values[p++], g));
  }
  return f;
}

auto to_json(const WindowFn1& f) -> Json {
  Json values = Json::array();
  for (const auto& v : f.values) values.push_back(to_json(v));
  return Json{{"target", to_json(f.group)}, {"box", {f.lo, f.hi}}, {"values", values}};
}

auto to_json(const WindowFn2& f) -> Json {
  Json values = Json::array();
  for (const auto& v : f.values) values.push_back(to_json(v));
  return Json{{"target", to_json(f.group)}, {"box", {f.klo, f.khi, f.llo, f.lhi}}, {"values", values}};
}

auto module_from_json(const Json& j) -> MatrixModule {
  const long d = long_from_json(require(j, "dim"), "dim");
  const long r = long_from_json(require(j, "rank_A"), "rank_A");
  if (d < 1 || r < 1) throw InputError("dim and rank_A must be positive");
  const auto& action = require(j, "action");
  const auto& inverses = require(j, "inverses");
  if (!action.is_array() || !inverses.is_array() || action.size() != static_cast<std::size_t>(r) ||
      inverses.size() != static_cast<std::size_t>(r)) {
    throw InputError("need rank_A action matrices and rank_A inverses");
  }
  const auto ud = static_cast<std::size_t>(d);
  std::vector<IntMatrix> rho;
  std::vector<IntMatrix> sigma;
  for (std::size_t i = 0; i < action.size(); ++i) {
    rho.push_back(matrix_from_json(action[i], ud));
    sigma.push_back(matrix_from_json(inverses[i], ud));
    if (rho.back().rows() != ud || sigma.back().rows() != ud) throw InputError("action matrices must be dim x dim");
  }
  Lattice rel(ud);
  if (j.contains("relations")) rel = Lattice::from_matrix(matrix_from_json(j.at("relations"), ud));
  return {ud, std::move(rho), std::move(sigma), std::move(rel)};
}

auto certificate_from_json(const Json& j) -> FGCertificate {
  const auto& dirs = require(j, "directions");
  if (!dirs.is_array()) throw InputError("directions must be an array");
  FGCertificate c;
  for (const auto& d : dirs) {
    const long k = long_from_json(require(d, "k"), "k");
    if (k < 1 || k > std::numeric_limits<int>::max()) throw InputError("k must be a positive integer");
    c.directions.emplace_back(vector_from_json(require(d, "a")), static_cast<int>(k));
  }
  return c;
}

auto endo_from_json(const Json& j) -> EndoOfFree {
  const long n = long_from_json(require(j, "n"), "n");
  const auto& images = require(j, "images");
  if (n < 1 || !images.is_array() || images.size() != static_cast<std::size_t>(n)) {
    throw InputError("endomorphism needs n images");
  }
  std::vector<FreeWord> words;
  for (const auto& w : images) {
    std::vector<int> letters;
    for (const auto& letter : w) {
      if (!letter.is_array() || letter.size() != 2) throw InputError("letters are [index, exponent] pairs");
      const long idx = long_from_json(letter[0], "index");
      const long e = long_from_json(letter[1], "exponent");
      if (idx < 1 || idx > n || (e != 1 && e != -1)) throw InputError("letter out of range");
      letters.push_back(static_cast<int>(e * idx));
    }
    words.emplace_back(std::move(letters));
  }
  return {static_cast<int>(n), std::move(words)};
}

auto to_json(const EndoOfFree& e) -> Json {
  Json images = Json::array();
  for (const auto& w : e.images()) {
    Json letters = Json::array();
    for (int x : w.letters()) letters.push_back({std::abs(x), x > 0 ? 1 : -1});
    images.push_back(letters);
  }
  return Json{{"n", e.rank()}, {"images", images}};
}

auto instance_from_json(const Json& j) -> LoadedInstance {
  if (!j.is_object() || !j.contains("space")) throw InputError("missing field \"space\"");
  const auto kind = parse_space(j.at("space").get<std::string>());
  const bool symplectic = kind == SpaceKind::Wedge3 || kind == SpaceKind::Ug;
  const long p = long_from_json(require(j, symplectic ? "g" : "n"), symplectic ? "g" : "n");
  if (symplectic ? p < 3 : p < 2) throw InputError("space parameter too small");
  if (p > 8) throw InputError("space parameter too large for desk-scale search");
  InducedAction act(kind, static_cast<int>(p));
  DisplacementInstance inst;
  inst.xset = j.contains("xset") ? parse_xset(j.at("xset").get<std::string>()) : XsetKind::NeitherKernel;
  const auto& b = require(j, "B");
  inst.b = b.is_object() ? lattice_from_json(b) : Lattice::from_matrix(matrix_from_json(b, act.dimension()));
  if (inst.b.ambient_rank() != act.dimension()) throw InputError("B lives in the wrong ambient rank");
  for (const auto& x : require(j, "X")) {
    inst.x.push_back(vector_from_json(x));
    if (inst.x.back().size() != act.dimension()) throw InputError("X vector has the wrong length");
  }
  return {std::move(act), std::move(inst)};
}

auto to_json(const InducedAction& act, const Witness& w) -> Json {
  Json letters = Json::array();
  for (const auto& [gen, exp] : w.letters) letters.push_back({{"generator", act.generators().at(gen).label}, {"index", gen}, {"exponent", exp}});
  return Json{{"length", w.letters.size()}, {"word", witness_string(act, w)}, {"letters", letters}};
}

auto to_json(const Lattice& l) -> Json {
  return Json{{"ambient_rank", l.ambient_rank()}, {"rank", l.rank()}, {"basis", to_json(l.basis())}};
}

auto lattice_from_json(const Json& j) -> Lattice {
  const long r = long_from_json(require(j, "ambient_rank"), "ambient_rank");
  if (r < 0) throw InputError("ambient_rank must be nonnegative");
  return Lattice::from_matrix(matrix_from_json(require(j, "basis"), static_cast<std::size_t>(r)));
}

auto read_json_file(const std::string& path) -> Json {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace tw
