/**
 * @file homology.hpp
 * @brief Connes' cyclic bicomplex of a (co)cyclic vector-space module, its
 *        total complex, exact cyclic (co)homology dimensions and induced maps.
 *
 * Convention: for a cyclic module with faces d_i, degeneracies s_j and cyclic
 * operators t, column p of the bicomplex is X_q in row q; even columns carry
 * b = sum_i (-1)^i d_i, odd columns carry -b' = -sum_{i<q} (-1)^i d_i; the
 * horizontal maps are 1 - lambda (odd -> even column) and
 * N = sum_{k=0}^{q} lambda^k (even -> odd column), lambda = (-1)^q t.
 *
 * A cocyclic module is handled by transposing all of its operators, which
 * gives a cyclic module; its cochain complex is the transpose of that chain
 * complex, so chain and cochain sides share one core.
 */
#pragma once

#include "parallel.hpp"
#include "simplicial.hpp"

#include <string>
#include <vector>

namespace braidcm {

struct NotCyclic : Error {
  using Error::Error;
};
struct NotAMorphism : Error {
  using Error::Error;
};

namespace detail {

/** The cyclic module whose chain complex computes the (co)homology of X. */
inline CyclicModuleData cyclic_view(const CyclicModuleData& X) {
  if (X.variance == Variance::Cyclic) return X;
  CyclicModuleData Y;
  Y.variance = Variance::Cyclic;
  Y.N_max = X.N_max;
  Y.levels = X.levels;
  Y.d.resize(X.d.size());
  Y.s.resize(X.s.size());
  for (std::size_t n = 0; n < X.d.size(); ++n)
    for (const auto& f : X.d[n]) Y.d[n].push_back(transpose(f));
  for (std::size_t n = 0; n < X.s.size(); ++n)
    for (const auto& f : X.s[n]) Y.s[n].push_back(transpose(f));
  for (const auto& f : X.t) Y.t.push_back(transpose(f));
  return Y;
}

}  // namespace detail

/**
 * \brief The bicomplex truncated at total degree `degree_bound`, its total
 *        differentials and the exact identity checks.
 *
 * total[n] : Tot_n -> Tot_{n-1} (n >= 1) for the chain version; for a
 * cocyclic input the cochain differential Tot^n -> Tot^{n+1} is
 * transpose(total[n+1]).  Tot_n = (+)_{p=0}^{n} X_{n-p}, blocks in order of
 * increasing column p.
 */
struct Bicomplex {
  Variance variance = Variance::Cyclic;
  int degree_bound = 0;
  std::vector<Obj> levels;                 // X_0 .. X_D
  std::vector<Mor> b, bprime, lambda, norm;  // per row q
  std::vector<Obj> tot;                    // Tot_0 .. Tot_D
  std::vector<Mor> total;                  // total[0] unused
  Report checks;
};

/** Builds the truncated bicomplex; throws NotCyclic when t^{n+1} != id. */
inline Bicomplex build_bicomplex(const CyclicModuleData& X_in, int degree_bound) {
  if (degree_bound < 0) throw Error("build_bicomplex: negative degree bound");
  if (degree_bound > X_in.N_max)
    throw TruncationError("build_bicomplex: degree bound " + std::to_string(degree_bound) + " exceeds the module's " +
                          std::to_string(X_in.N_max) + " levels");
  CyclicModuleData X = detail::cyclic_view(X_in);
  const int D = degree_bound;
  for (int n = 0; n <= D; ++n)
    if (!(power(X.t[n], n + 1) == Mor::identity(X.levels[n])))
      throw NotCyclic("cyclic operator at level " + std::to_string(n) + " does not satisfy t^(n+1) = id");

  Bicomplex B;
  B.variance = X_in.variance;
  B.degree_bound = D;
  B.levels.assign(X.levels.begin(), X.levels.begin() + D + 1);
  B.b.resize(D + 1);
  B.bprime.resize(D + 1);
  B.lambda.resize(D + 1);
  B.norm.resize(D + 1);
  parallel_for(static_cast<std::size_t>(D + 1), [&](std::size_t qq) {
    int q = static_cast<int>(qq);
    const Obj& Xq = X.levels[q];
    const Obj& Xm = q > 0 ? X.levels[q - 1] : Xq;
    Mor b(Xq, Xm), bp(Xq, Xm);
    for (int i = 0; i <= q && q >= 1; ++i) {
      Mor term = (i % 2 == 0) ? X.d[q][i] : scale(Scalar(-1), X.d[q][i]);
      b = add(b, term);
      if (i < q) bp = add(bp, term);
    }
    if (q == 0) b = bp = Mor(Xq, Obj("0", {}, Xq.field));
    Mor lam = (q % 2 == 0) ? X.t[q] : scale(Scalar(-1), X.t[q]);
    Mor N = Mor::identity(Xq), p = Mor::identity(Xq);
    for (int k = 1; k <= q; ++k) {
      p = compose(lam, p);
      N = add(N, p);
    }
    B.b[q] = std::move(b);
    B.bprime[q] = std::move(bp);
    B.lambda[q] = std::move(lam);
    B.norm[q] = std::move(N);
  });

  // Total complex.
  B.tot.resize(D + 1);
  std::vector<std::vector<std::size_t>> offset(D + 1);
  for (int n = 0; n <= D; ++n) {
    std::vector<int> grades;
    for (int p = 0; p <= n; ++p) {
      offset[n].push_back(grades.size());
      grades.insert(grades.end(), B.levels[n - p].grades.begin(), B.levels[n - p].grades.end());
    }
    B.tot[n] = Obj("Tot" + std::to_string(n), grades, X.levels[0].field);
  }
  B.total.resize(D + 1);
  for (int n = 1; n <= D; ++n) {
    Mor T(B.tot[n], B.tot[n - 1]);
    auto place = [&](const Mor& f, std::size_t row0, std::size_t col0) {
      for (std::size_t j = 0; j < f.cols(); ++j)
        for (const auto& e : f.column(j)) T.add(row0 + e.row, col0 + j, e.value);
    };
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      std::size_t col0 = offset[n][p];
      if (q >= 1) {  // vertical: (p, q) -> (p, q-1)
        Mor v = (p % 2 == 0) ? B.b[q] : scale(Scalar(-1), B.bprime[q]);
        place(v, offset[n - 1][p], col0);
      }
      if (p >= 1) {  // horizontal: (p, q) -> (p-1, q)
        Mor h = (p % 2 == 1) ? sub(Mor::identity(B.levels[q]), B.lambda[q]) : B.norm[q];
        place(h, offset[n - 1][p - 1], col0);
      }
    }
    B.total[n] = std::move(T);
  }

  // Exact identities.
  auto zero_check = [&](const std::string& name, const Mor& f) {
    B.checks.expect(name, f.nnz() == 0, "nonzero composite");
  };
  for (int q = 0; q <= D; ++q) {
    std::string sq = " q=" + std::to_string(q);
    Mor one_minus = sub(Mor::identity(B.levels[q]), B.lambda[q]);
    zero_check("(1-lambda)N = 0" + sq, compose(one_minus, B.norm[q]));
    zero_check("N(1-lambda) = 0" + sq, compose(B.norm[q], one_minus));
    if (q >= 2) {
      zero_check("b b = 0" + sq, compose(B.b[q - 1], B.b[q]));
      zero_check("b' b' = 0" + sq, compose(B.bprime[q - 1], B.bprime[q]));
    }
    if (q >= 1) {
      Mor om1 = sub(Mor::identity(B.levels[q - 1]), B.lambda[q - 1]);
      B.checks.expect_equal("b(1-lambda) = (1-lambda)b'" + sq, compose(B.b[q], one_minus), compose(om1, B.bprime[q]));
      B.checks.expect_equal("b'N = Nb" + sq, compose(B.bprime[q], B.norm[q]), compose(B.norm[q - 1], B.b[q]));
    }
  }
  for (int n = 2; n <= D; ++n) zero_check("total d^2 = 0 n=" + std::to_string(n), compose(B.total[n - 1], B.total[n]));
  return B;
}

/**
 * \brief Per-degree dimensions, ranks and (co)homology dimensions.
 *
 * rank_out[n] is the rank of the differential leaving degree n, rank_in[n]
 * of the one entering it.  Degree D = degree_bound has no incoming (chain) or
 * outgoing (cochain) differential available, so its value is only an upper
 * bound and is flagged untrusted.
 */
struct ComplexReport {
  Variance variance = Variance::Cyclic;
  int degree_bound = 0;
  std::vector<std::size_t> dims, rank_out, rank_in, homology;
  std::vector<bool> trusted;
  Report checks;
  bool passed() const { return checks.passed(); }
};

/** Exact (co)homology dimensions of the total complex. */
inline ComplexReport total_homology(const Bicomplex& B) {
  const int D = B.degree_bound;
  ComplexReport R;
  R.variance = B.variance;
  R.degree_bound = D;
  R.checks = B.checks;
  std::vector<std::size_t> rk(D + 2, 0);  // rk[n] = rank of total[n], n in 1..D
  parallel_for(static_cast<std::size_t>(D), [&](std::size_t k) { rk[k + 1] = rank(B.total[k + 1]); });
  bool cochain = B.variance == Variance::Cocyclic;
  for (int n = 0; n <= D; ++n) {
    std::size_t dim = B.tot[n].dim();
    // chain: out = total[n], in = total[n+1]; cochain: out = total[n+1]^T, in = total[n]^T
    std::size_t r_lo = n >= 1 ? rk[n] : 0;
    std::size_t r_hi = n + 1 <= D ? rk[n + 1] : 0;
    std::size_t out = cochain ? r_hi : r_lo;
    std::size_t in = cochain ? r_lo : r_hi;
    R.dims.push_back(dim);
    R.rank_out.push_back(out);
    R.rank_in.push_back(in);
    R.homology.push_back(dim - out - in);
    R.trusted.push_back(n < D);
  }
  return R;
}

/** Convenience: bicomplex plus homology in one call. */
inline ComplexReport cyclic_homology(const CyclicModuleData& X, int degree_bound) {
  return total_homology(build_bicomplex(X, degree_bound));
}

namespace detail {

/** Coefficients c with sum_k c_k cols[k] = v; cols must be independent and v in their span. */
inline std::vector<Scalar> coordinates(const std::vector<std::vector<Scalar>>& cols, const std::vector<Scalar>& v) {
  std::size_t K = cols.size();
  Echelon ech(K + 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    SparseRow row;
    for (std::size_t k = 0; k < K; ++k)
      if (!cols[k][i].is_zero()) row.emplace_back(static_cast<std::uint32_t>(k), cols[k][i]);
    if (!v[i].is_zero()) row.emplace_back(static_cast<std::uint32_t>(K), v[i]);
    ech.insert(row);
  }
  ech.reduce_fully();
  std::vector<Scalar> c(K);
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    std::uint32_t pc = ech.pivots()[r];
    if (pc == K) throw Error("coordinates: vector outside the span");
    for (const auto& [col, val] : ech.rows()[r])
      if (col == K) c[pc] = val;
  }
  return c;
}

inline std::vector<Scalar> column_vector(const Mor& f, std::size_t j) {
  std::vector<Scalar> v(f.rows());
  for (const auto& e : f.column(j)) v[e.row] = e.value;
  return v;
}

inline std::vector<Scalar> apply(const Mor& f, const std::vector<Scalar>& x) {
  std::vector<Scalar> y(f.rows());
  for (std::size_t j = 0; j < f.cols(); ++j) {
    if (x[j].is_zero()) continue;
    for (const auto& e : f.column(j)) y[e.row] += e.value * x[j];
  }
  return y;
}

/** Boundaries (independent) followed by cycle representatives completing them. */
struct HomologyBasis {
  std::vector<std::vector<Scalar>> boundaries, reps;
};

inline HomologyBasis homology_basis(std::size_t dim, const Mor* out, const Mor* in) {
  HomologyBasis hb;
  std::vector<std::vector<Scalar>> cycles;
  if (out) {
    cycles = kernel_basis(dim, sparse_rows(*out));
  } else {
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<Scalar> e(dim);
      e[i] = Scalar(1);
      cycles.push_back(std::move(e));
    }
  }
  Echelon ech(dim);
  auto as_row = [](const std::vector<Scalar>& v) {
    SparseRow r;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) r.emplace_back(static_cast<std::uint32_t>(i), v[i]);
    return r;
  };
  if (in)
    for (std::size_t j = 0; j < in->cols(); ++j) {
      auto v = column_vector(*in, j);
      if (ech.insert(as_row(v))) hb.boundaries.push_back(std::move(v));
    }
  for (auto& z : cycles)
    if (ech.insert(as_row(z))) hb.reps.push_back(std::move(z));
  return hb;
}

}  // namespace detail

/**
 * \brief Maps induced on (co)homology by levelwise maps f[n]: source_n ->
 *        target_n, degrees 0 .. degree_bound - 1.
 *
 * The maps must commute with every generator (else NotAMorphism); each
 * result is a matrix from the source (co)homology basis to the target one.
 */
inline std::vector<Mor> induced_map_on_hc(const CyclicModuleData& source, const CyclicModuleData& target,
                                          const std::vector<Mor>& f, int degree_bound) {
  if (source.variance != target.variance) throw NotAMorphism("induced_map_on_hc: source and target variance differ");
  const int D = degree_bound;
  if (static_cast<int>(f.size()) < D + 1) throw ShapeError("induced_map_on_hc: need maps on levels 0..degree_bound");
  bool co = source.variance == Variance::Cocyclic;
  auto fail = [](const std::string& what, int n, int i) {
    throw NotAMorphism("levelwise maps do not commute with " + what + " n=" + std::to_string(n) + " i=" +
                       std::to_string(i));
  };
  for (int n = 0; n <= D; ++n) {
    if (!f[n].dom.same_as(source.levels[n]) || !f[n].cod.same_as(target.levels[n]))
      throw ShapeError("induced_map_on_hc: level map " + std::to_string(n) + " has wrong boundary");
    if (!(compose(f[n], source.t[n]) == compose(target.t[n], f[n]))) fail("the cyclic operator", n, 0);
    for (int i = 0; i <= n && n >= 1; ++i) {
      bool ok = co ? compose(f[n], source.d[n][i]) == compose(target.d[n][i], f[n - 1])
                   : compose(f[n - 1], source.d[n][i]) == compose(target.d[n][i], f[n]);
      if (!ok) fail("the (co)faces", n, i);
    }
    for (int j = 0; j < n; ++j) {  // codegeneracies between levels n and n-1
      bool ok = co ? compose(f[n - 1], source.s[n - 1][j]) == compose(target.s[n - 1][j], f[n])
                   : compose(f[n], source.s[n - 1][j]) == compose(target.s[n - 1][j], f[n - 1]);
      if (!ok) fail("the (co)degeneracies", n, j);
    }
  }
  Bicomplex S = build_bicomplex(source, D), T = build_bicomplex(target, D);
  std::vector<Mor> result(D);
  parallel_for(static_cast<std::size_t>(D), [&](std::size_t nn) {
    int n = static_cast<int>(nn);
    auto ends = [&](const Bicomplex& B, Mor& out, Mor& in, bool& has_out, bool& has_in) {
      if (co) {
        out = transpose(B.total[n + 1]);
        has_out = true;
        has_in = n >= 1;
        if (has_in) in = transpose(B.total[n]);
      } else {
        has_out = n >= 1;
        if (has_out) out = B.total[n];
        in = B.total[n + 1];
        has_in = true;
      }
    };
    Mor so, si, to, ti;
    bool sho, shi, tho, thi;
    ends(S, so, si, sho, shi);
    ends(T, to, ti, tho, thi);
    auto hs = detail::homology_basis(S.tot[n].dim(), sho ? &so : nullptr, shi ? &si : nullptr);
    auto ht = detail::homology_basis(T.tot[n].dim(), tho ? &to : nullptr, thi ? &ti : nullptr);
    // Total-degree map: block-diagonal over columns p with f[n-p].
    std::vector<Mor> blocks;
    for (int p = 0; p <= n; ++p) blocks.push_back(f[n - p]);
    Mor F(S.tot[n], T.tot[n]);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& blk : blocks) {
      for (std::size_t j = 0; j < blk.cols(); ++j)
        for (const auto& e : blk.column(j)) F.add(r0 + e.row, c0 + j, e.value);
      r0 += blk.rows();
      c0 += blk.cols();
    }
    std::vector<std::vector<Scalar>> cols = ht.boundaries;
    cols.insert(cols.end(), ht.reps.begin(), ht.reps.end());
    Obj hsrc("HC_src" + std::to_string(n), std::vector<int>(hs.reps.size(), 0), S.tot[n].field);
    Obj htgt("HC_tgt" + std::to_string(n), std::vector<int>(ht.reps.size(), 0), T.tot[n].field);
    Mor M(hsrc, htgt);
    for (std::size_t k = 0; k < hs.reps.size(); ++k) {
      auto c = detail::coordinates(cols, detail::apply(F, hs.reps[k]));
      for (std::size_t l = 0; l < ht.reps.size(); ++l)
        if (!c[ht.boundaries.size() + l].is_zero()) M.add(l, k, c[ht.boundaries.size() + l]);
    }
    result[n] = std::move(M);
  });
  return result;
}

/** The point module: every level one-dimensional, every operator the identity. */
inline CyclicModuleData point_module(int N_max, Variance v = Variance::Cocyclic, FieldSpec field = {}) {
  CyclicModuleData X;
  X.variance = v;
  X.N_max = N_max;
  for (int n = 0; n <= N_max; ++n) X.levels.push_back(Obj::unit(field));
  X.d.resize(N_max + 1);
  X.s.resize(N_max + 1);
  Mor id = Mor::identity(Obj::unit(field));
  for (int n = 1; n <= N_max; ++n) X.d[n].assign(n + 1, id);
  for (int n = 0; n + 1 <= N_max; ++n) X.s[n].assign(n + 1, id);
  X.t.assign(N_max + 1, id);
  return X;
}

}  // namespace braidcm
