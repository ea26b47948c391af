/**
 * @file tensor.hpp
 * @brief Graded objects, exact morphisms and the strict monoidal calculus.
 *
 * Tensor products follow the Kronecker convention with the leftmost factor
 * as the most significant index: the basis vector e_i (x) e_j of X (x) Y sits
 * at position i * dim(Y) + j.  Every diagram in the library is compiled into
 * compositions and tensor products of Mor values using this one convention.
 *
 * Mor keeps its entries column-sparse internally; the contract is that of a
 * dense cod.dim x dom.dim matrix.
 */
#pragma once

#include "scalar.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace braidcm {

struct CompositionMismatch : Error {
  using Error::Error;
};
struct InvalidPermutation : Error {
  using Error::Error;
};
struct ShapeError : Error {
  using Error::Error;
};
struct SingularMatrix : Error {
  using Error::Error;
};

/** \brief A finite-dimensional graded space with a homogeneous basis. */
struct Obj {
  std::string name;
  std::vector<int> grades;
  FieldSpec field;

  Obj() = default;
  Obj(std::string n, std::vector<int> g, FieldSpec f = {})
      : name(std::move(n)), grades(std::move(g)), field(f) {}

  std::size_t dim() const { return grades.size(); }

  /** The monoidal unit over field f. */
  static Obj unit(FieldSpec f = {}) { return Obj("1", {0}, f); }

  /** Two objects are the same boundary when dims, grades and fields agree. */
  bool same_as(const Obj& o) const { return grades == o.grades && field == o.field; }
  bool is_unit() const { return grades.size() == 1 && grades[0] == 0; }

  std::string describe() const {
    std::ostringstream os;
    os << name << "(dim " << dim() << ", " << field.to_string() << ")";
    return os.str();
  }
};

/** tensor_obj: grades add in Kronecker order; the empty product is the unit. */
inline Obj tensor_obj(const std::vector<Obj>& xs) {
  if (xs.empty()) return Obj::unit();
  FieldSpec f = xs[0].field;
  std::vector<int> g{0};
  std::string name;
  for (const auto& x : xs) {
    if (!(x.field == f)) throw FieldMismatch("tensor_obj: objects over different fields");
    std::vector<int> ng;
    ng.reserve(g.size() * x.dim());
    for (int a : g)
      for (int b : x.grades) ng.push_back(a + b);
    g = std::move(ng);
    if (x.is_unit() && xs.size() > 1) continue;
    name += name.empty() ? x.name : "*" + x.name;
  }
  if (name.empty()) name = "1";
  return Obj(name, std::move(g), f);
}

inline Obj tensor_obj(const Obj& a, const Obj& b) { return tensor_obj({a, b}); }

/** X^{(x) n}; n = 0 gives the unit. */
inline Obj tensor_power(const Obj& x, int n) {
  if (n == 0) return Obj::unit(x.field);
  std::vector<Obj> xs(n, x);
  Obj r = tensor_obj(xs);
  r.name = n == 1 ? x.name : x.name + "^" + std::to_string(n);
  return r;
}

/** One nonzero entry of a sparse column. */
struct Entry {
  std::uint32_t row;
  Scalar value;
};

inline bool operator==(const Entry& a, const Entry& b) { return a.row == b.row && a.value == b.value; }

/** \brief An exact matrix with explicit domain and codomain objects. */
class Mor {
 public:
  Obj dom, cod;

  Mor() = default;
  Mor(Obj d, Obj c) : dom(std::move(d)), cod(std::move(c)), cols_(dom.dim()) {
    if (!(dom.field == cod.field)) throw FieldMismatch("Mor: domain and codomain over different fields");
  }

  static Mor zero(const Obj& d, const Obj& c) { return Mor(d, c); }

  static Mor identity(const Obj& x) {
    Mor m(x, x);
    for (std::size_t j = 0; j < x.dim(); ++j) m.cols_[j].push_back({static_cast<std::uint32_t>(j), Scalar(1)});
    return m;
  }

  /** Builds from dense rows (rows.size() == cod.dim, each of length dom.dim). */
  static Mor from_rows(const Obj& d, const Obj& c, const std::vector<std::vector<Scalar>>& rows) {
    if (rows.size() != c.dim()) throw ShapeError("from_rows: row count does not match codomain");
    Mor m(d, c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != d.dim()) throw ShapeError("from_rows: row length does not match domain");
      for (std::size_t j = 0; j < d.dim(); ++j)
        if (!rows[i][j].is_zero()) m.cols_[j].push_back({static_cast<std::uint32_t>(i), rows[i][j]});
    }
    return m;
  }

  std::size_t rows() const { return cod.dim(); }
  std::size_t cols() const { return dom.dim(); }

  Scalar at(std::size_t i, std::size_t j) const {
    for (const auto& e : cols_[j])
      if (e.row == i) return e.value;
    return Scalar();
  }

  /** Adds v to entry (i, j). */
  void add(std::size_t i, std::size_t j, const Scalar& v) {
    if (v.is_zero()) return;
    auto& col = cols_[j];
    auto it = std::lower_bound(col.begin(), col.end(), i,
                               [](const Entry& e, std::size_t r) { return e.row < r; });
    if (it != col.end() && it->row == i) {
      it->value += v;
      if (it->value.is_zero()) col.erase(it);
    } else {
      col.insert(it, Entry{static_cast<std::uint32_t>(i), v});
    }
  }

  const std::vector<Entry>& column(std::size_t j) const { return cols_[j]; }

  /** Replaces column j by entries sorted by row with no zeros. */
  void set_column(std::size_t j, std::vector<Entry> col) { cols_[j] = std::move(col); }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
  }

  bool is_zero() const { return nnz() == 0; }

  std::vector<std::vector<Scalar>> dense() const {
    std::vector<std::vector<Scalar>> r(rows(), std::vector<Scalar>(cols()));
    for (std::size_t j = 0; j < cols(); ++j)
      for (const auto& e : cols_[j]) r[e.row][j] = e.value;
    return r;
  }

  /** Exact entrywise equality of matrices (boundary grades must match too). */
  friend bool operator==(const Mor& a, const Mor& b) {
    return a.dom.same_as(b.dom) && a.cod.same_as(b.cod) && a.cols_ == b.cols_;
  }

  /** First (row, col) where a and b differ, in column-major order. */
  friend std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Mor& a, const Mor& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return std::make_pair(std::size_t(-1), std::size_t(-1));
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& x = a.cols_[j];
      const auto& y = b.cols_[j];
      std::size_t p = 0, q = 0;
      while (p < x.size() || q < y.size()) {
        if (q == y.size() || (p < x.size() && x[p].row < y[q].row)) return std::make_pair<std::size_t, std::size_t>(x[p].row, std::size_t(j));
        if (p == x.size() || y[q].row < x[p].row) return std::make_pair<std::size_t, std::size_t>(y[q].row, std::size_t(j));
        if (!(x[p].value == y[q].value)) return std::make_pair<std::size_t, std::size_t>(x[p].row, std::size_t(j));
        ++p;
        ++q;
      }
    }
    return std::nullopt;
  }


 private:
  std::vector<std::vector<Entry>> cols_;
};

/** Human-readable description of the first differing entry, or "" if equal. */
inline std::string describe_difference(const Mor& a, const Mor& b) {
  auto d = first_difference(a, b);
  if (!d) {
    if (!a.dom.same_as(b.dom) || !a.cod.same_as(b.cod)) return "boundary objects differ";
    return "";
  }
  if (d->first == std::size_t(-1)) return "shapes differ";
  std::ostringstream os;
  os << "entry (" << d->first << "," << d->second << "): " << a.at(d->first, d->second).to_string()
     << " vs " << b.at(d->first, d->second).to_string();
  return os.str();
}

/** compose(g, f) = g . f */
inline Mor compose(const Mor& g, const Mor& f) {
  if (!f.cod.same_as(g.dom))
    throw CompositionMismatch("cannot compose: codomain " + f.cod.describe() + " vs domain " + g.dom.describe());
  Mor r(f.dom, g.cod);
  std::vector<Scalar> acc(g.rows());
  std::vector<char> seen(g.rows(), 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t j = 0; j < f.cols(); ++j) {
    touched.clear();
    for (const auto& fe : f.column(j)) {
      for (const auto& ge : g.column(fe.row)) {
        if (!seen[ge.row]) {
          seen[ge.row] = 1;
          touched.push_back(ge.row);
          acc[ge.row] = ge.value * fe.value;
        } else {
          acc[ge.row] += ge.value * fe.value;
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    std::vector<Entry> col;
    for (auto i : touched) {
      seen[i] = 0;
      if (!acc[i].is_zero()) col.push_back({i, std::move(acc[i])});
      acc[i] = Scalar();
    }
    r.set_column(j, std::move(col));
  }
  return r;
}

/** Composes a chain written left to right as in g1 . g2 . ... . gk. */
inline Mor compose_all(const std::vector<Mor>& chain) {
  if (chain.empty()) throw ShapeError("compose_all: empty chain");
  Mor r = chain.back();
  for (std::size_t i = chain.size() - 1; i-- > 0;) r = compose(chain[i], r);
  return r;
}

/** Kronecker product f (x) g. */
inline Mor tensor_mor(const Mor& f, const Mor& g) {
  if (!(f.dom.field == g.dom.field)) throw FieldMismatch("tensor_mor: morphisms over different fields");
  Mor r(tensor_obj(f.dom, g.dom), tensor_obj(f.cod, g.cod));
  std::size_t r2 = g.rows(), c2 = g.cols();
  for (std::size_t j1 = 0; j1 < f.cols(); ++j1)
    for (std::size_t j2 = 0; j2 < c2; ++j2) {
      std::vector<Entry> col;
      col.reserve(f.column(j1).size() * g.column(j2).size());
      for (const auto& a : f.column(j1))
        for (const auto& b : g.column(j2))
          col.push_back({static_cast<std::uint32_t>(a.row * r2 + b.row), a.value * b.value});
      r.set_column(j1 * c2 + j2, std::move(col));
    }
  return r;
}

inline Mor tensor_mor(const std::vector<Mor>& fs) {
  if (fs.empty()) return Mor::identity(Obj::unit());
  Mor r = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) r = tensor_mor(r, fs[i]);
  return r;
}

inline Mor add(const Mor& a, const Mor& b) {
  if (!a.dom.same_as(b.dom) || !a.cod.same_as(b.cod)) throw ShapeError("add: boundary mismatch");
  Mor r = a;
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (const auto& e : b.column(j)) r.add(e.row, j, e.value);
  return r;
}

inline Mor scale(const Scalar& s, const Mor& a) {
  Mor r(a.dom, a.cod);
  if (s.is_zero()) return r;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    std::vector<Entry> col;
    for (const auto& e : a.column(j)) col.push_back({e.row, s * e.value});
    r.set_column(j, std::move(col));
  }
  return r;
}

inline Mor sub(const Mor& a, const Mor& b) { return add(a, scale(Scalar(-1), b)); }

/** The transpose, viewed as a morphism cod -> dom. */
inline Mor transpose(const Mor& a) {
  Mor r(a.cod, a.dom);
  std::vector<std::vector<Entry>> cols(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (const auto& e : a.column(j)) cols[e.row].push_back({static_cast<std::uint32_t>(j), e.value});
  for (std::size_t i = 0; i < cols.size(); ++i) r.set_column(i, std::move(cols[i]));
  return r;
}

/** Reinterprets the boundary objects (same dims) without touching entries. */
inline Mor relabel(const Mor& a, const Obj& dom, const Obj& cod) {
  if (dom.dim() != a.cols() || cod.dim() != a.rows()) throw ShapeError("relabel: dimension mismatch");
  Mor r(dom, cod);
  for (std::size_t j = 0; j < a.cols(); ++j) r.set_column(j, a.column(j));
  return r;
}

/**
 * \brief Wire permutation: input factor i is moved to output position perm[i].
 *
 * With this convention permutation_mor(q o p) = permutation_mor(q) o
 * permutation_mor(p), where (q o p)[i] = q[p[i]].
 */
inline Mor permutation_mor(const std::vector<Obj>& xs, const std::vector<int>& perm) {
  std::size_t k = xs.size();
  if (perm.size() != k) throw InvalidPermutation("permutation length does not match object list");
  std::vector<int> inv(k, -1);
  for (std::size_t i = 0; i < k; ++i) {
    if (perm[i] < 0 || static_cast<std::size_t>(perm[i]) >= k || inv[perm[i]] != -1)
      throw InvalidPermutation("not a bijection");
    inv[perm[i]] = static_cast<int>(i);
  }
  std::vector<Obj> out(k);
  for (std::size_t t = 0; t < k; ++t) out[t] = xs[inv[t]];
  Obj d = tensor_obj(xs), c = tensor_obj(out);
  Mor r(d, c);
  std::vector<std::size_t> in_stride(k, 1), out_stride(k, 1);
  for (std::size_t i = k; i-- > 1;) in_stride[i - 1] = in_stride[i] * xs[i].dim();
  for (std::size_t t = k; t-- > 1;) out_stride[t - 1] = out_stride[t] * out[t].dim();
  std::vector<std::size_t> digit(k, 0);
  for (std::size_t col = 0; col < d.dim(); ++col) {
    std::size_t rem = col;
    for (std::size_t i = 0; i < k; ++i) {
      digit[i] = rem / in_stride[i];
      rem %= in_stride[i];
    }
    std::size_t row = 0;
    for (std::size_t i = 0; i < k; ++i) row += digit[i] * out_stride[perm[i]];
    r.set_column(col, {Entry{static_cast<std::uint32_t>(row), Scalar(1)}});
  }
  return r;
}

/** Matrix power for endomorphisms (e >= 0). */
inline Mor power(const Mor& a, int e) {
  if (!a.dom.same_as(a.cod)) throw ShapeError("power: not an endomorphism");
  if (e < 0) throw Error("power: negative exponent (use inverse)");
  Mor r = Mor::identity(a.dom);
  for (int i = 0; i < e; ++i) r = compose(a, r);
  return r;
}

// ---------------------------------------------------------------------------
// Exact sparse Gaussian elimination.
// ---------------------------------------------------------------------------

using SparseRow = std::vector<std::pair<std::uint32_t, Scalar>>;

/**
 * \brief Incremental row echelon form over an exact field.
 *
 * Rows are inserted one at a time and reduced against existing pivots, so
 * `insert` returning false means the row was dependent.  `reduce_fully`
 * turns the echelon form into the reduced row echelon form.
 */
class Echelon {
 public:
  explicit Echelon(std::size_t ncols) : ncols_(ncols), pivot_of_col_(ncols, -1) {}

  /** Reduces a row against the current pivots (entries in pivot columns vanish). */
  SparseRow reduce(const SparseRow& row) const {
    std::map<std::uint32_t, Scalar> acc;
    for (const auto& [c, v] : row)
      if (!v.is_zero()) acc[c] += v;
    auto it = acc.begin();
    while (it != acc.end()) {
      if (it->second.is_zero()) {
        it = acc.erase(it);
        continue;
      }
      int p = pivot_of_col_[it->first];
      if (p < 0) {
        ++it;
        continue;
      }
      Scalar f = it->second;
      std::uint32_t c0 = it->first;
      for (const auto& [c, v] : rows_[p]) {
        auto& slot = acc[c];
        slot -= f * v;
      }
      it = acc.upper_bound(c0);
      acc.erase(c0);
    }
    SparseRow out;
    for (auto& [c, v] : acc)
      if (!v.is_zero()) out.emplace_back(c, std::move(v));
    return out;
  }

  bool insert(const SparseRow& row) {
    SparseRow r = reduce(row);
    if (r.empty()) return false;
    Scalar inv = r.front().second.inverse();
    for (auto& e : r) e.second *= inv;
    pivot_of_col_[r.front().first] = static_cast<int>(rows_.size());
    pivots_.push_back(r.front().first);
    rows_.push_back(std::move(r));
    return true;
  }

  /** Back-substitution: afterwards every pivot column is a unit vector. */
  void reduce_fully() {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] > pivots_[b]; });
    for (std::size_t idx : order) {
      // Clear this row's entries in other pivot columns (those right of its pivot).
      SparseRow& r = rows_[idx];
      std::map<std::uint32_t, Scalar> acc(r.begin(), r.end());
      bool changed = true;
      while (changed) {
        changed = false;
        for (auto it = acc.begin(); it != acc.end(); ++it) {
          if (it->first == pivots_[idx] || it->second.is_zero()) continue;
          int p = pivot_of_col_[it->first];
          if (p < 0) continue;
          Scalar f = it->second;
          for (const auto& [c, v] : rows_[p]) acc[c] -= f * v;
          changed = true;
          break;
        }
      }
      SparseRow out;
      for (auto& [c, v] : acc)
        if (!v.is_zero()) out.emplace_back(c, std::move(v));
      r = std::move(out);
    }
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const std::vector<SparseRow>& rows() const { return rows_; }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }
  int pivot_row(std::size_t col) const { return pivot_of_col_[col]; }

 private:
  std::size_t ncols_;
  std::vector<int> pivot_of_col_;
  std::vector<std::uint32_t> pivots_;
  std::vector<SparseRow> rows_;
};

/** Rows of a morphism's matrix as sparse rows. */
inline std::vector<SparseRow> sparse_rows(const Mor& a) {
  std::vector<SparseRow> rows(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (const auto& e : a.column(j)) rows[e.row].emplace_back(static_cast<std::uint32_t>(j), e.value);
  return rows;
}

inline std::size_t rank(const Mor& a) {
  // Eliminate along the smaller side.
  Mor m = a.rows() <= a.cols() ? a : transpose(a);
  Echelon ech(m.cols());
  for (const auto& r : sparse_rows(m)) ech.insert(r);
  return ech.rank();
}

/** Basis of the kernel of a (as vectors of length a.cols()). */
inline std::vector<std::vector<Scalar>> kernel_basis(std::size_t ncols, const std::vector<SparseRow>& rows) {
  Echelon ech(ncols);
  for (const auto& r : rows) ech.insert(r);
  ech.reduce_fully();
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (ech.pivot_row(f) >= 0) continue;
    std::vector<Scalar> v(ncols);
    v[f] = Scalar(1);
    for (std::size_t k = 0; k < ech.rank(); ++k) {
      for (const auto& [c, val] : ech.rows()[k])
        if (c == f) v[ech.pivots()[k]] = -val;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/**
 * \brief solve_linear: basis of the common kernel of stacked linear forms.
 *
 * Each constraint is a Mor from `unknown` to some object; the solution space
 * is the intersection of their kernels.  An empty result means only zero
 * satisfies every constraint.
 */
inline std::vector<std::vector<Scalar>> solve_linear(const std::vector<Mor>& constraints, const Obj& unknown) {
  std::vector<SparseRow> rows;
  for (const auto& c : constraints) {
    if (c.cols() != unknown.dim()) throw ShapeError("solve_linear: constraint does not act on the unknown space");
    if (!(c.dom.field == unknown.field)) throw FieldMismatch("solve_linear: constraint over a different field");
    for (auto& r : sparse_rows(c)) rows.push_back(std::move(r));
  }
  return kernel_basis(unknown.dim(), rows);
}

/** Exact inverse of a square matrix; throws SingularMatrix. */
inline Mor inverse(const Mor& a) {
  std::size_t n = a.rows();
  if (a.cols() != n) throw ShapeError("inverse: matrix is not square");
  Echelon ech(2 * n);
  auto rows = sparse_rows(a);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].emplace_back(static_cast<std::uint32_t>(n + i), Scalar(1));
    ech.insert(rows[i]);
  }
  if (ech.rank() != n) throw SingularMatrix("inverse: singular matrix");
  for (std::size_t k = 0; k < n; ++k)
    if (ech.pivots()[k] >= n) throw SingularMatrix("inverse: singular matrix");
  ech.reduce_fully();
  Mor r(a.cod, a.dom);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t i = ech.pivots()[k];
    for (const auto& [c, v] : ech.rows()[k])
      if (c >= n) r.add(i, c - n, v);
  }
  return r;
}

/** A vector in X as a morphism 1 -> X. */
inline Mor vector_mor(const Obj& x, const std::vector<Scalar>& v) {
  if (v.size() != x.dim()) throw ShapeError("vector_mor: length mismatch");
  Mor m(Obj::unit(x.field), x);
  for (std::size_t i = 0; i < v.size(); ++i) m.add(i, 0, v[i]);
  return m;
}

/** A linear form on X as a morphism X -> 1. */
inline Mor covector_mor(const Obj& x, const std::vector<Scalar>& v) {
  if (v.size() != x.dim()) throw ShapeError("covector_mor: length mismatch");
  Mor m(x, Obj::unit(x.field));
  for (std::size_t i = 0; i < v.size(); ++i) m.add(0, i, v[i]);
  return m;
}

}  // namespace braidcm
