/**
 * @file cm.hpp
 * @brief Modular pairs, the twisted involution predicate, the paracocyclic
 *        operators tau_n(delta, sigma), the object CM(H, delta, sigma) and
 *        the verifier for the closed formulas of the powers of tau_n.
 */
#pragma once

#include "builtins.hpp"
#include "parallel.hpp"
#include "simplicial.hpp"

#include <string>
#include <vector>

namespace braidcm {

struct InvalidPair : Error {
  using Error::Error;
};
struct RangeError : Error {
  using Error::Error;
};

/** \brief delta: H -> 1 and sigma: 1 -> H. */
struct ModularPair {
  std::string name;
  Mor delta;
  Mor sigma;
};

/** \brief Outcome of the modular-pair conditions with human-readable reasons. */
struct PairCheck {
  bool valid = true;
  std::vector<std::string> diagnostics;
};

/** Checks that delta is an algebra morphism, sigma a coalgebra morphism and delta.sigma = id. */
inline PairCheck check_modular_pair(const HopfAlgebra& a, const Mor& delta, const Mor& sigma) {
  if (!delta.dom.same_as(a.H) || !delta.cod.same_as(a.one()))
    throw ShapeError("delta must be a morphism H -> 1");
  if (!sigma.dom.same_as(a.one()) || !sigma.cod.same_as(a.H)) throw ShapeError("sigma must be a morphism 1 -> H");
  PairCheck c;
  if (!detail::is_algebra_morphism(a, delta)) {
    c.valid = false;
    c.diagnostics.push_back("delta not an algebra morphism");
  }
  if (!detail::is_coalgebra_morphism(a, sigma)) {
    c.valid = false;
    c.diagnostics.push_back("sigma not a coalgebra morphism");
  }
  if (!(compose(delta, sigma) == Mor::identity(a.one()))) {
    c.valid = false;
    c.diagnostics.push_back("delta.sigma is not the identity");
  }
  return c;
}

/** Builds a checked pair; throws InvalidPair listing every violated condition. */
inline ModularPair make_pair(const HopfAlgebra& a, const PairSpec& s) {
  if (s.delta.size() != a.H.dim() || s.sigma.size() != a.H.dim())
    throw ShapeError("pair '" + s.name + "' has vectors of the wrong length");
  ModularPair p{s.name, covector_mor(a.H, s.delta), vector_mor(a.H, s.sigma)};
  PairCheck c = check_modular_pair(a, p.delta, p.sigma);
  if (!c.valid) {
    std::string why;
    for (const auto& d : c.diagnostics) why += (why.empty() ? "" : "; ") + d;
    throw InvalidPair("pair '" + s.name + "': " + why);
  }
  return p;
}

/** The pair (counit, unit). */
inline ModularPair unit_pair(const HopfAlgebra& a) { return {"eu", a.counit, a.unit}; }

namespace detail {

/** Cache key identifying a pair by its entries. */
inline std::string pair_key(const ModularPair& p) {
  std::string k;
  for (std::size_t j = 0; j < p.delta.cols(); ++j) k += p.delta.at(0, j).to_string() + ",";
  k += "|";
  for (std::size_t i = 0; i < p.sigma.rows(); ++i) k += p.sigma.at(i, 0).to_string() + ",";
  return k;
}

/** Right multiplication by sigma, h -> h sigma, as an endomorphism of H. */
inline Mor right_mult(const HopfAlgebra& a, const Mor& sigma) {
  return relabel(compose(a.mult, tensor_mor(a.id(1), sigma)), a.H, a.H);
}

}  // namespace detail

/** Twisted antipode of the pair, memoised. */
inline Mor twisted_antipode(const HopfAlgebra& a, const ModularPair& p) {
  return a.memo("St:" + detail::pair_key(p), [&] { return a.twisted_antipode(p.delta); });
}

/**
 * \brief Both sides of the twisted involution condition:
 *        St^2 versus h -> sigma theta(h) S(sigma).
 */
inline std::pair<Mor, Mor> twisted_mpi_sides(const HopfAlgebra& a, const ModularPair& p) {
  Mor st = twisted_antipode(a, p);
  Mor lhs = compose(st, st);
  Mor rhs = compose_all({a.mult, tensor_mor(a.mult, compose(a.antipode, p.sigma)), tensor_mor(p.sigma, a.theta(1))});
  return {lhs, relabel(rhs, a.H, a.H)};
}

inline bool check_twisted_mpi(const HopfAlgebra& a, const ModularPair& p) {
  auto [l, r] = twisted_mpi_sides(a, p);
  return l == r;
}

/**
 * \brief tau_0 = id; tau_n = l_n (St (x) id_{n-1} (x) sigma) for n >= 1, where
 *        l_n is the left diagonal action on H^n.
 */
inline Mor tau(const HopfAlgebra& a, const ModularPair& p, int n) {
  if (n < 0) throw RangeError("tau: negative level");
  return a.memo("cmtau:" + detail::pair_key(p) + ":" + std::to_string(n), [&]() -> Mor {
    if (n == 0) return Mor::identity(a.one());
    Mor dec = tensor_mor({twisted_antipode(a, p), a.id(n - 1), p.sigma});
    return compose(a.diagonal_action(Side::Left, n), relabel(dec, a.Hn(n), a.Hn(n + 1)));
  });
}

/** tau_n^k, memoised per (pair, n, k). */
inline Mor tau_power(const HopfAlgebra& a, const ModularPair& p, int n, int k) {
  if (k < 0) throw RangeError("tau_power: negative exponent");
  return a.memo("cmtaupow:" + detail::pair_key(p) + ":" + std::to_string(n) + ":" + std::to_string(k),
                [&]() -> Mor {
                  if (k == 0) return a.id(n);
                  return compose(tau(a, p, n), tau_power(a, p, n, k - 1));
                });
}

/**
 * \brief The paracocyclic object with levels H^n: d(n,0) = u in front,
 *        d(n,i) = D on tensorand i (1-based) for 1 <= i < n, d(n,n) = sigma at
 *        the end; s(n,j) = counit on tensorand j+1; tau as above.
 */
inline ParaCocyclicData build_cm(const HopfAlgebra& a, const ModularPair& p, int N_max) {
  if (N_max < 1) throw RangeError("build_cm: N_max must be at least 1");
  ParaCocyclicData P;
  P.name = "CM(" + a.H.name + "," + p.name + ")";
  P.ctx = a.ctx;
  P.N_max = N_max;
  for (int n = 0; n <= N_max; ++n) P.levels.push_back(a.Hn(n));
  P.cofaces.resize(N_max + 1);
  P.codegens.resize(N_max + 1);
  for (int n = 1; n <= N_max; ++n) {
    P.cofaces[n].push_back(relabel(tensor_mor(a.unit, a.id(n - 1)), a.Hn(n - 1), a.Hn(n)));
    for (int i = 1; i <= n - 1; ++i) P.cofaces[n].push_back(a.around(i - 1, a.comult, n - 1 - i));
    P.cofaces[n].push_back(relabel(tensor_mor(a.id(n - 1), p.sigma), a.Hn(n - 1), a.Hn(n)));
  }
  for (int n = 0; n + 1 <= N_max; ++n)
    for (int j = 0; j <= n; ++j) P.codegens[n].push_back(relabel(a.around(j, a.counit, n - j), a.Hn(n + 1), a.Hn(n)));
  for (int n = 0; n <= N_max; ++n) P.tau.push_back(tau(a, p, n));
  P.validate();
  return P;
}

enum class PowerFormula { KthPower, NPlus1, ViaUnitPair };

inline std::string formula_name(PowerFormula f) {
  switch (f) {
    case PowerFormula::KthPower: return "kth-power";
    case PowerFormula::NPlus1: return "top-power";
    case PowerFormula::ViaUnitPair: return "via-unit-pair";
  }
  return "?";
}

namespace detail {

/**
 * ad_R,m (X (x) sigma) (delta (x) id_m) coad_L,m : H^m -> H^m, the decoration
 * that expresses a top power for (delta, sigma) through one for (counit, unit).
 */
inline Mor pair_decoration(const HopfAlgebra& a, const ModularPair& p, int m, const Mor& x) {
  Mor coad = a.coadjoint_coaction(Side::Left, m);
  Mor evd = relabel(tensor_mor(p.delta, a.id(m)), a.Hn(m + 1), a.Hn(m));
  Mor ins = relabel(tensor_mor(x, p.sigma), a.Hn(m), a.Hn(m + 1));
  return compose_all({a.adjoint_action(Side::Right, m), ins, evd, coad});
}

}  // namespace detail

/**
 * \brief Right-hand side of the closed formula for tau_n(delta, sigma)^k.
 *
 * KthPower (n >= 2, 2 <= k <= n): decorate the first k-2 tensorands with
 * (delta (x) id) coad_L, split tensorand k, multiply St(h^{k-1}) with
 * the first leg, bring the product in front of the first k-2 strands with the
 * positive braiding, apply tau_{n-1}(e,u)^{k-1} followed by right
 * multiplication by sigma on its last k-1 outputs to the other n-1 strands,
 * carry the product past them with the positive braiding and finish it with
 * tau_1(delta,sigma).
 *
 * NPlus1 (k = n+1, n >= 1): for n = 1 the decorated square of the antipode;
 * for n >= 2, tau_1(delta,sigma)^2 on the first strand and the decorated
 * tau_{n-1}(e,u)^n on the rest, after the double braiding of H with H^{n-1}.
 *
 * ViaUnitPair (k = n+1, n >= 0): the decorated tau_n(e,u)^{n+1}.
 */
inline Mor rhs_power_formula(const HopfAlgebra& a, const ModularPair& p, int n, int k, PowerFormula which) {
  ModularPair eu = unit_pair(a);
  switch (which) {
    case PowerFormula::KthPower: {
      if (n < 2 || k < 2 || k > n) throw RangeError("kth-power formula needs n >= 2 and 2 <= k <= n");
      Mor coad = a.coadjoint_coaction(Side::Left, k - 2);
      Mor evd = relabel(compose(tensor_mor(p.delta, a.id(k - 2)), coad), a.Hn(k - 2), a.Hn(k - 2));
      Mor pre = tensor_mor(evd, a.id(n - k + 2));
      Mor split = a.around(k - 1, a.comult, n - k);
      Mor prod = compose(a.mult, tensor_mor(twisted_antipode(a, p), a.id(1)));
      Mor join = a.around(k - 2, prod, n - k + 1);
      Mor front = a.around(0, a.tau(k - 2, 1), n - k + 1);
      Mor rs = detail::right_mult(a, p.sigma);
      Mor rblock = a.id(n - k);
      for (int t = 0; t < k - 1; ++t) rblock = tensor_mor(rblock, rs);
      rblock = relabel(rblock, a.Hn(n - 1), a.Hn(n - 1));
      Mor block = tensor_mor(a.id(1), compose(rblock, tau_power(a, eu, n - 1, k - 1)));
      Mor back = a.tau(1, n - 1);
      Mor last = tensor_mor(a.id(n - 1), tau(a, p, 1));
      return compose_all({last, back, block, front, join, split, pre});
    }
    case PowerFormula::NPlus1: {
      if (n < 1 || k != n + 1) throw RangeError("top-power formula needs n >= 1 and k = n+1");
      if (n == 1) return detail::pair_decoration(a, p, 1, compose(a.antipode, a.antipode));
      Mor dec = detail::pair_decoration(a, p, n - 1, tau_power(a, eu, n - 1, n));
      Mor top = tensor_mor(tau_power(a, p, 1, 2), dec);
      return compose_all({top, a.tau(n - 1, 1), a.tau(1, n - 1)});
    }
    case PowerFormula::ViaUnitPair: {
      if (n < 0 || k != n + 1) throw RangeError("via-unit-pair formula needs n >= 0 and k = n+1");
      return detail::pair_decoration(a, p, n, tau_power(a, eu, n, n + 1));
    }
  }
  throw RangeError("unknown formula");
}

/** \brief One comparison of tau_n^k against a closed formula or the twist. */
struct PowerRecord {
  int n = 0;
  int k = 0;
  std::string formula;  // kth-power, top-power, via-unit-pair, twist
  bool pass = true;
  std::string detail;
};

struct PowersReport {
  bool twisted_mpi = false;
  std::vector<PowerRecord> records;

  bool passed() const {
    for (const auto& r : records)
      if (!r.pass) return false;
    return true;
  }
};

/**
 * \brief Compares tau_n^k with every applicable closed formula for n <= n_max,
 *        and tau_n^{n+1} with the twist iff the twisted involution predicate holds.
 */
inline PowersReport verify_powers(const HopfAlgebra& a, const ModularPair& p, int n_max) {
  PowersReport rep;
  rep.twisted_mpi = check_twisted_mpi(a, p);
  struct Job {
    int n, k;
    std::string formula;
    std::function<Mor()> rhs;
  };
  std::vector<Job> jobs;
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 2; k <= n; ++k)
      jobs.push_back({n, k, formula_name(PowerFormula::KthPower),
                      [=, &a, &p] { return rhs_power_formula(a, p, n, k, PowerFormula::KthPower); }});
    if (n >= 1)
      jobs.push_back({n, n + 1, formula_name(PowerFormula::NPlus1),
                      [=, &a, &p] { return rhs_power_formula(a, p, n, n + 1, PowerFormula::NPlus1); }});
    jobs.push_back({n, n + 1, formula_name(PowerFormula::ViaUnitPair),
                    [=, &a, &p] { return rhs_power_formula(a, p, n, n + 1, PowerFormula::ViaUnitPair); }});
    if (rep.twisted_mpi) jobs.push_back({n, n + 1, "twist", [=, &a] { return a.theta(n); }});
  }
  // Warm the power caches level by level so parallel jobs share them.
  for (int n = 0; n <= n_max; ++n) tau_power(a, p, n, n + 1);
  rep.records.resize(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    const Job& j = jobs[i];
    Mor lhs = tau_power(a, p, j.n, j.k);
    std::string diff = describe_difference(lhs, j.rhs());
    rep.records[i] = {j.n, j.k, j.formula, diff.empty(), diff};
  });
  return rep;
}

}  // namespace braidcm
