/**
 * @file oracles.hpp
 * @brief Independent reference computations for tests: dense rational ranks
 *        and cyclic (co)homology through Connes' quotient complex.
 */
#pragma once

#include <braidcm/simplicial.hpp>

#include <gmpxx.h>

#include <vector>

namespace braidcm::oracles {

using Dense = std::vector<std::vector<mpq_class>>;

inline Dense to_q(const Mor& m) {
  Dense out;
  for (const auto& row : m.dense()) {
    std::vector<mpq_class> r;
    for (const auto& x : row) r.emplace_back(x.to_string());
    out.push_back(r);
  }
  return out;
}

inline Dense transpose_q(const Dense& m, std::size_t rows, std::size_t cols) {
  Dense t(cols, std::vector<mpq_class>(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

inline std::size_t rank_q(Dense m) {
  std::size_t r = 0, cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i)
      if (m[i][c] != 0) {
        mpq_class f = m[i][c] / m[r][c];
        for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
      }
    ++r;
  }
  return r;
}

/** [A | B] for matrices with the same number of rows. */
inline Dense hcat(const Dense& a, const Dense& b) {
  Dense out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i].insert(out[i].end(), b[i].begin(), b[i].end());
  return out;
}

/**
 * Cyclic (co)homology dimensions in degrees 0..top-1 through Connes' quotient
 * complex C_n = X_n / (1 - lambda) with the Hochschild boundary descended to
 * it (valid over the rationals).  A cocyclic module is dualised first.
 */
inline std::vector<std::size_t> connes_oracle(const CyclicModuleData& X, int top) {
  bool co = X.variance == Variance::Cocyclic;
  std::vector<std::size_t> dim(top + 1);
  std::vector<Dense> b(top + 1), one_minus(top + 1);
  for (int n = 0; n <= top; ++n) {
    std::size_t d = X.levels[n].dim();
    dim[n] = d;
    Dense t = to_q(X.t[n]);
    if (co) t = transpose_q(t, d, d);
    Dense im(d, std::vector<mpq_class>(d, 0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) im[i][j] = (i == j ? 1 : 0) - (n % 2 == 0 ? 1 : -1) * t[i][j];
    one_minus[n] = im;
    if (n >= 1) {
      std::size_t dl = X.levels[n - 1].dim();
      Dense bn(dl, std::vector<mpq_class>(d, 0));
      for (int i = 0; i <= n; ++i) {
        Dense f = to_q(X.d[n][i]);
        if (co) f = transpose_q(f, d, dl);
        for (std::size_t r = 0; r < dl; ++r)
          for (std::size_t c = 0; c < d; ++c) bn[r][c] += (i % 2 == 0 ? 1 : -1) * f[r][c];
      }
      b[n] = bn;
    }
  }
  auto quotient_dim = [&](int n) { return dim[n] - rank_q(one_minus[n]); };
  auto bar_rank = [&](int n) -> std::size_t {  // rank of b: C_n -> C_{n-1}
    if (n < 1) return 0;
    std::size_t with = rank_q(hcat(b[n], one_minus[n - 1]));
    return with - rank_q(one_minus[n - 1]);
  };
  std::vector<std::size_t> hc;
  for (int n = 0; n < top; ++n) hc.push_back(quotient_dim(n) - bar_rank(n) - bar_rank(n + 1));
  return hc;
}

}  // namespace braidcm::oracles
