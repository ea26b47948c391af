/**
 * @file io.hpp
 * @brief Algebra files: JSON parsing with positioned errors, validation and
 *        canonical serialization (load . serialize is the identity on
 *        canonical forms).
 *
 * Format (sparse triples; unspecified entries are zero; duplicate triples are
 * summed):
 *   {"name": "...", "field": "Q" | {"cyclotomic": N}, "dim": d,
 *    "grades": [...], "braiding": "trivial" | {"graded_q": "q"},
 *    "twist": "trivial" | {"graded_q": "q"},
 *    "mult": [[i, j, k, s], ...],   e_i e_j has coefficient s on e_k
 *    "unit": [...], "comult": [[i, j, k, s], ...],   D(e_i) has s on e_j (x) e_k
 *    "counit": [...], "antipode": [[row], ...],
 *    "pairs": [{"name": "...", "delta": [...], "sigma": [...]}],
 *    "module_coalgebra": {"dim": c, "grades": [...], "comult": [...],
 *                         "counit": [...], "action": [[i, j, k, s], ...]}}
 * Scalars are strings "p/q", polynomials in z such as "1+z^2", JSON integers,
 * or coefficient lists ["c0", "c1", ...] in the cyclotomic field.
 */
#pragma once

#include "builtins.hpp"
#include "cm.hpp"
#include "traces.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <tuple>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace braidcm {

using json = nlohmann::ordered_json;

/** Malformed or schema-violating input; line/column are 1-based (0 if unknown). */
struct ParseError : Error {
  int line = 0, column = 0;
  ParseError(const std::string& what, int l, int c)
      : Error(what + (l > 0 ? " (line " + std::to_string(l) + ", column " + std::to_string(c) + ")" : "")),
        line(l),
        column(c) {}
};

/** An algebra file after validation. */
struct LoadedAlgebra {
  AlgebraSpec spec;
  HopfAlgebra algebra;
  std::vector<ModularPair> pairs;
  std::optional<ModuleCoalgebra> module_coalgebra;
};

namespace detail {

/** Line/column of a byte offset. */
inline std::pair<int, int> line_column(const std::string& text, std::size_t offset) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

/** Byte offsets of the keys of the outermost object (first occurrence). */
inline std::map<std::string, std::size_t> top_level_keys(const std::string& text) {
  std::map<std::string, std::size_t> out;
  int depth = 0;
  bool expect_key = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '"') {
      std::size_t start = i;
      std::string s;
      for (++i; i < text.size() && text[i] != '"'; ++i) {
        if (text[i] == '\\') ++i;
        if (i < text.size()) s += text[i];
      }
      if (depth == 1 && expect_key) {
        out.emplace(s, start);
        expect_key = false;
      }
      continue;
    }
    if (c == '{' || c == '[') {
      ++depth;
      if (c == '{' && depth == 1) expect_key = true;
    } else if (c == '}' || c == ']') {
      --depth;
    } else if (c == ',' && depth == 1) {
      expect_key = true;
    }
  }
  return out;
}

/** Raises ParseError located at a top-level key of the source text. */
struct Locator {
  const std::string* text = nullptr;
  std::map<std::string, std::size_t> keys;

  [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
    int l = 0, c = 0;
    if (text) {
      auto it = keys.find(key);
      if (it != keys.end()) std::tie(l, c) = line_column(*text, it->second);
    }
    throw ParseError("'" + key + "': " + msg, l, c);
  }
};

inline Scalar scalar_from_json(const json& j, const FieldSpec& f, const Locator& loc, const std::string& key) {
  try {
    if (j.is_number_integer()) return Scalar(mpq_class(std::to_string(j.get<long long>())));
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), f);
    if (j.is_array()) {
      if (f.is_rational()) {
        if (j.size() != 1) loc.fail(key, "coefficient list used over the rationals");
        return scalar_from_json(j[0], f, loc, key);
      }
      std::vector<mpq_class> c;
      for (const auto& e : j) {
        if (!e.is_string() && !e.is_number_integer()) loc.fail(key, "coefficient lists hold rationals");
        c.push_back(e.is_string() ? Scalar::parse_rational(e.get<std::string>()) : mpq_class(std::to_string(e.get<long long>())));
      }
      return Scalar::from_coeffs(f.order, c);
    }
  } catch (const ScalarSyntaxError& e) {
    loc.fail(key, e.what());
  }
  loc.fail(key, "expected a scalar (string, integer or coefficient list)");
}

inline json scalar_to_json(const Scalar& s) {
  std::string t = s.to_string();
  if (t.empty() || t[0] != '[') return t;
  json arr = json::array();
  std::string cur;
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    if (t[i] == ',') {
      arr.push_back(cur);
      cur.clear();
    } else {
      cur += t[i];
    }
  }
  arr.push_back(cur);
  return arr;
}

inline const json& require(const json& obj, const std::string& key, const Locator& loc, const std::string& ctx) {
  if (!obj.contains(key)) loc.fail(ctx.empty() ? key : ctx, "missing field '" + key + "'");
  return obj.at(key);
}

inline std::vector<Scalar> vector_from_json(const json& j, std::size_t d, const FieldSpec& f, const Locator& loc,
                                            const std::string& key) {
  if (!j.is_array()) loc.fail(key, "expected an array");
  if (j.size() != d) loc.fail(key, "expected " + std::to_string(d) + " entries, found " + std::to_string(j.size()));
  std::vector<Scalar> v;
  for (const auto& e : j) v.push_back(scalar_from_json(e, f, loc, key));
  return v;
}

inline Triples triples_from_json(const json& j, std::size_t d0, std::size_t d1, std::size_t d2, const FieldSpec& f,
                                 const Locator& loc, const std::string& key) {
  if (!j.is_array()) loc.fail(key, "expected an array of [i, j, k, scalar] triples");
  Triples t;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
        !e[2].is_number_integer())
      loc.fail(key, "each entry must be [i, j, k, scalar]");
    long long i = e[0], jj = e[1], k = e[2];
    if (i < 0 || jj < 0 || k < 0 || static_cast<std::size_t>(i) >= d0 || static_cast<std::size_t>(jj) >= d1 ||
        static_cast<std::size_t>(k) >= d2)
      loc.fail(key, "index out of range in entry " + e.dump());
    add_triple(t, static_cast<int>(i), static_cast<int>(jj), static_cast<int>(k), scalar_from_json(e[3], f, loc, key));
  }
  return t;
}

inline json triples_to_json(const Triples& t) {
  json arr = json::array();
  for (const auto& [idx, s] : t) arr.push_back(json::array({idx[0], idx[1], idx[2], scalar_to_json(s)}));
  return arr;
}

inline json vector_to_json(const std::vector<Scalar>& v) {
  json arr = json::array();
  for (const auto& s : v) arr.push_back(scalar_to_json(s));
  return arr;
}

inline std::vector<int> grades_from_json(const json& j, std::size_t d, const Locator& loc, const std::string& key) {
  if (!j.is_array()) loc.fail(key, "expected an array of integers");
  if (j.size() != d)
    loc.fail(key, "dim is " + std::to_string(d) + " but " + std::to_string(j.size()) + " grades are given");
  std::vector<int> g;
  for (const auto& e : j) {
    if (!e.is_number_integer()) loc.fail(key, "grades must be integers");
    g.push_back(e.get<int>());
  }
  return g;
}

inline GradingSpec grading_from_json(const json& j, const FieldSpec& f, const Locator& loc, const std::string& key) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "trivial" || s == "identity") return {};
    loc.fail(key, "unknown kind '" + s + "'");
  }
  if (j.is_object() && j.contains("graded_q")) return {true, scalar_from_json(j.at("graded_q"), f, loc, key)};
  loc.fail(key, "expected \"trivial\" or {\"graded_q\": q}");
}

inline json grading_to_json(const GradingSpec& g) {
  if (!g.graded) return "trivial";
  return json{{"graded_q", scalar_to_json(g.q)}};
}

inline std::size_t dim_from_json(const json& j, const Locator& loc, const std::string& key) {
  if (!j.is_number_integer() || j.get<long long>() < 1) loc.fail(key, "dim must be a positive integer");
  return j.get<std::size_t>();
}

}  // namespace detail

/** Parses the JSON text into a canonical AlgebraSpec (no axiom validation). */
inline AlgebraSpec parse_algebra_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [l, c] = detail::line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(std::string("malformed JSON: ") + e.what(), l, c);
  }
  detail::Locator loc{&text, detail::top_level_keys(text)};
  if (!j.is_object()) throw ParseError("top level must be an object", 1, 1);
  AlgebraSpec s;
  s.name = j.value("name", std::string("algebra"));
  if (j.contains("field")) {
    const json& f = j.at("field");
    if (f.is_string() && f.get<std::string>() == "Q") {
      s.field = FieldSpec::rationals();
    } else if (f.is_object() && f.contains("cyclotomic") && f.at("cyclotomic").is_number_integer()) {
      int n = f.at("cyclotomic").get<int>();
      if (n < 1) loc.fail("field", "cyclotomic order must be positive");
      s.field = FieldSpec::cyclotomic(n);
    } else {
      loc.fail("field", "expected \"Q\" or {\"cyclotomic\": N}");
    }
  }
  const std::size_t d = detail::dim_from_json(detail::require(j, "dim", loc, ""), loc, "dim");
  s.grades = detail::grades_from_json(detail::require(j, "grades", loc, ""), d, loc, "grades");
  if (j.contains("braiding")) s.braiding = detail::grading_from_json(j.at("braiding"), s.field, loc, "braiding");
  if (j.contains("twist")) s.twist = detail::grading_from_json(j.at("twist"), s.field, loc, "twist");
  s.mult = detail::triples_from_json(detail::require(j, "mult", loc, ""), d, d, d, s.field, loc, "mult");
  s.unit = detail::vector_from_json(detail::require(j, "unit", loc, ""), d, s.field, loc, "unit");
  s.comult = detail::triples_from_json(detail::require(j, "comult", loc, ""), d, d, d, s.field, loc, "comult");
  s.counit = detail::vector_from_json(detail::require(j, "counit", loc, ""), d, s.field, loc, "counit");
  const json& S = detail::require(j, "antipode", loc, "");
  if (!S.is_array() || S.size() != d) loc.fail("antipode", "expected a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
  for (const auto& row : S) s.antipode.push_back(detail::vector_from_json(row, d, s.field, loc, "antipode"));
  if (j.contains("pairs")) {
    const json& P = j.at("pairs");
    if (!P.is_array()) loc.fail("pairs", "expected an array");
    for (const auto& p : P) {
      if (!p.is_object()) loc.fail("pairs", "each pair must be an object");
      PairSpec ps;
      ps.name = p.value("name", std::string("pair") + std::to_string(s.pairs.size()));
      ps.delta = detail::vector_from_json(detail::require(p, "delta", loc, "pairs"), d, s.field, loc, "pairs");
      ps.sigma = detail::vector_from_json(detail::require(p, "sigma", loc, "pairs"), d, s.field, loc, "pairs");
      s.pairs.push_back(std::move(ps));
    }
  }
  if (s.pairs.empty() || s.pairs.front().name != "eu") {
    bool has = false;
    for (const auto& p : s.pairs) has = has || p.name == "eu";
    if (!has) s.pairs.insert(s.pairs.begin(), PairSpec{"eu", s.counit, s.unit});
  }
  if (j.contains("module_coalgebra")) {
    const json& M = j.at("module_coalgebra");
    const std::string k = "module_coalgebra";
    if (!M.is_object()) loc.fail(k, "expected an object");
    ModuleCoalgebraSpec m;
    std::size_t c = detail::dim_from_json(detail::require(M, "dim", loc, k), loc, k);
    m.grades = detail::grades_from_json(detail::require(M, "grades", loc, k), c, loc, k);
    m.comult = detail::triples_from_json(detail::require(M, "comult", loc, k), c, c, c, s.field, loc, k);
    m.counit = detail::vector_from_json(detail::require(M, "counit", loc, k), c, s.field, loc, k);
    m.action = detail::triples_from_json(detail::require(M, "action", loc, k), c, d, c, s.field, loc, k);
    s.module_coalgebra = std::move(m);
  }
  if (d >= 6) s.n_max_cap = 3;
  return s;
}

/** Canonical JSON form of a spec (triples in index order, canonical scalars). */
inline json serialize_algebra(const AlgebraSpec& s) {
  json j;
  j["name"] = s.name;
  j["field"] = s.field.is_rational() ? json("Q") : json{{"cyclotomic", s.field.order}};
  j["dim"] = s.dim();
  j["grades"] = s.grades;
  j["braiding"] = detail::grading_to_json(s.braiding);
  j["twist"] = detail::grading_to_json(s.twist);
  j["mult"] = detail::triples_to_json(s.mult);
  j["unit"] = detail::vector_to_json(s.unit);
  j["comult"] = detail::triples_to_json(s.comult);
  j["counit"] = detail::vector_to_json(s.counit);
  json S = json::array();
  for (const auto& row : s.antipode) S.push_back(detail::vector_to_json(row));
  j["antipode"] = S;
  json P = json::array();
  for (const auto& p : s.pairs)
    P.push_back(json{{"name", p.name}, {"delta", detail::vector_to_json(p.delta)}, {"sigma", detail::vector_to_json(p.sigma)}});
  j["pairs"] = P;
  if (s.module_coalgebra) {
    const auto& m = *s.module_coalgebra;
    j["module_coalgebra"] = json{{"dim", m.grades.size()},
                                 {"grades", m.grades},
                                 {"comult", detail::triples_to_json(m.comult)},
                                 {"counit", detail::vector_to_json(m.counit)},
                                 {"action", detail::triples_to_json(m.action)}};
  }
  return j;
}

/** Validates a spec: Hopf axioms (ValidationError), pairs (InvalidPair), module coalgebra (ValidationError). */
inline LoadedAlgebra validate_spec(const AlgebraSpec& s) {
  LoadedAlgebra out{s, instantiate(s), {}, std::nullopt};
  for (const auto& p : s.pairs) out.pairs.push_back(make_pair(out.algebra, p));
  if (s.module_coalgebra) out.module_coalgebra = module_coalgebra_from_spec(out.algebra, *s.module_coalgebra);
  return out;
}

inline LoadedAlgebra load_algebra_text(const std::string& text) { return validate_spec(parse_algebra_spec(text)); }

/** Whole file as a string; throws Error if it cannot be opened. */
inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/** Reads and validates an algebra file. */
inline LoadedAlgebra load_algebra(const std::string& path) { return load_algebra_text(read_text_file(path)); }

/** Built-in by name with its pairs validated. */
inline LoadedAlgebra load_builtin(const std::string& name, const Scalar& q = Scalar(-1)) {
  return validate_spec(builtin(name, q));
}

/** 64-bit FNV-1a digest as 16 hex digits (used to fingerprint inputs in reports). */
inline std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 15];
    h >>= 4;
  }
  return out;
}

/** A morphism as JSON: boundary dimensions and sparse entries [row, col, scalar]. */
inline json mor_to_json(const Mor& f) {
  json entries = json::array();
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> all;
  for (std::size_t c = 0; c < f.cols(); ++c)
    for (const auto& e : f.column(c)) all.emplace_back(e.row, c, e.value);
  std::sort(all.begin(), all.end(),
            [](const auto& a, const auto& b) { return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b)); });
  for (const auto& [r, c, v] : all) entries.push_back(json::array({r, c, detail::scalar_to_json(v)}));
  return json{{"rows", f.rows()}, {"cols", f.cols()}, {"entries", entries}};
}

}  // namespace braidcm
