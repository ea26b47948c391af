/**
 * @file lemmas.hpp
 * @brief Executable property suite for the twisted antipode and the
 *        paracocyclic operators: each item compares two composition chains
 *        by exact matrix equality.
 */
#pragma once

#include "cm.hpp"

#include <functional>
#include <string>
#include <vector>

namespace braidcm {

namespace detail {

/** (delta (x) id_n) coad_L,n : H^n -> H^n */
inline Mor delta_coaction(const HopfAlgebra& a, const ModularPair& p, int n) {
  return relabel(compose(tensor_mor(p.delta, a.id(n)), a.coadjoint_coaction(Side::Left, n)), a.Hn(n), a.Hn(n));
}

/** Left multiplication by a fixed element x: 1 -> H. */
inline Mor left_mult(const HopfAlgebra& a, const Mor& x) {
  return relabel(compose(a.mult, tensor_mor(x, a.id(1))), a.H, a.H);
}

}  // namespace detail

/**
 * \brief Runs every identity of the suite for n up to n_max.
 *
 * Items are independent and evaluated in parallel; the report order is the
 * fixed enumeration order below.
 */
inline Report run_lemma_suite(const HopfAlgebra& a, const ModularPair& p, int n_max = 4) {
  using Pair = std::pair<Mor, Mor>;
  struct Item {
    std::string name;
    std::function<Pair()> sides;
  };
  std::vector<Item> items;
  const ModularPair eu = unit_pair(a);
  const Mor& m = a.mult;
  const Mor& D = a.comult;
  const Mor& S = a.antipode;
  const Mor& u = a.unit;
  const Mor& e = a.counit;
  auto St = [&] { return twisted_antipode(a, p); };
  auto c11 = [&] { return a.tau(1, 1); };
  auto ud = [&] { return compose(u, p.delta); };

  // Twisted antipode.
  items.push_back({"twisted antipode: coproduct", [&] {
                     return Pair{compose(D, St()), compose_all({tensor_mor(S, St()), c11(), D})};
                   }});
  items.push_back({"twisted antipode: anti-multiplicative", [&] {
                     return Pair{compose(St(), m), compose_all({m, tensor_mor(St(), St()), c11()})};
                   }});
  items.push_back({"twisted antipode: convolution with identity", [&] {
                     return Pair{compose_all({m, tensor_mor(St(), a.id(1)), D}), ud()};
                   }});
  items.push_back({"twisted antipode: delta-evaluated coproduct", [&] {
                     Mor lhs = relabel(compose_all({tensor_mor(p.delta, a.id(1)), D, St()}), a.H, a.H);
                     Mor rhs = relabel(compose(tensor_mor(p.delta, S), a.coadjoint_coaction(Side::Left, 1)), a.H, a.H);
                     return Pair{lhs, rhs};
                   }});
  items.push_back({"twisted antipode: square", [&] {
                     Mor rhs = relabel(compose(tensor_mor(p.delta, compose(S, S)), a.coadjoint_coaction(Side::Left, 1)),
                                       a.H, a.H);
                     return Pair{compose(St(), St()), rhs};
                   }});
  items.push_back({"twisted antipode: convolution with square of antipode", [&] {
                     return Pair{compose_all({m, tensor_mor(compose(S, S), St()), c11(), D}), ud()};
                   }});
  items.push_back({"twisted antipode: counit", [&] { return Pair{compose(e, St()), p.delta}; }});
  items.push_back({"twisted antipode: on sigma", [&] {
                     return Pair{compose(St(), p.sigma), compose(S, p.sigma)};
                   }});
  items.push_back({"twisted antipode: sigma is invertible", [&] {
                     Mor lhs = compose(m, tensor_mor(compose(St(), p.sigma), p.sigma));
                     return Pair{relabel(lhs, a.one(), a.H), u};
                   }});

  for (int n = 2; n <= n_max; ++n) {
    std::string sn = " n=" + std::to_string(n);
    // Recurrences for tau_n(delta, sigma).
    items.push_back({"tau recurrence through the last strand" + sn, [&, n] {
                       Mor Mn = compose(a.around(n - 2, m, 0), tensor_mor(tau(a, eu, n - 1), a.id(1)));
                       Mor rhs = compose_all({tensor_mor(Mn, tau(a, p, 1)), tensor_mor(a.id(1), a.tau(1, n - 1)),
                                              a.around(0, c11(), n - 1), a.around(0, D, n - 1)});
                       return Pair{tau(a, p, n), rhs};
                     }});
    items.push_back({"tau recurrence through the first strand" + sn, [&, n] {
                       Mor rhs = compose_all({tensor_mor(m, tau(a, p, n - 1)), tensor_mor({S, c11(), a.id(n - 2)}),
                                              tensor_mor(compose(c11(), D), a.id(n - 1))});
                       return Pair{tau(a, p, n), rhs};
                     }});
    // Identities for tau_n(e, u).
    items.push_back({"unit-pair tau: unit in the last slot" + sn, [&, n] {
                       Mor lhs = compose(a.around(n - 2, D, 0), tau(a, eu, n - 1));
                       Mor rhs = compose(tau(a, eu, n), relabel(tensor_mor(a.id(n - 1), u), a.Hn(n - 1), a.Hn(n)));
                       return Pair{lhs, rhs};
                     }});
    items.push_back({"unit-pair tau: product in the first slot" + sn, [&, n] {
                       Mor lhs = compose(tau(a, eu, n), a.around(0, m, n - 1));
                       Mor rhs = compose_all({a.diagonal_action(Side::Left, n), tensor_mor(a.id(1), tau(a, eu, n)),
                                              a.around(0, S, n), a.around(0, c11(), n - 1)});
                       return Pair{lhs, rhs};
                     }});
    items.push_back({"unit-pair tau: counit on the last slot" + sn, [&, n] {
                       Mor lhs = relabel(compose(tensor_mor(a.id(n - 1), e), tau(a, eu, n)), a.Hn(n), a.Hn(n - 1));
                       Mor rhs = compose(a.around(n - 2, m, 0), tensor_mor(tau(a, eu, n - 1), a.id(1)));
                       return Pair{lhs, rhs};
                     }});
    items.push_back({"unit-pair tau: square" + sn, [&, n] {
                       Mor rhs = compose_all({tensor_mor(tau(a, eu, n - 1), S), a.tau(1, n - 1),
                                              a.around(0, compose(m, tensor_mor(S, a.id(1))), n - 1),
                                              a.around(1, D, n - 2)});
                       return Pair{tau_power(a, eu, n, 2), rhs};
                     }});
  }
  for (int n = 1; n <= n_max; ++n) {
    std::string sn = " n=" + std::to_string(n);
    Mor rs = detail::right_mult(a, p.sigma);
    items.push_back({"unit-pair tau: sigma in the first slot" + sn, [&, n, rs] {
                       Mor ls = detail::left_mult(a, compose(S, p.sigma));
                       Mor lsn = ls;
                       for (int t = 1; t < n; ++t) lsn = tensor_mor(lsn, ls);
                       lsn = relabel(lsn, a.Hn(n), a.Hn(n));
                       return Pair{compose(tau(a, eu, n), a.around(0, rs, n - 1)), compose(lsn, tau(a, eu, n))};
                     }});
    for (int j = 2; j <= n; ++j)
      items.push_back({"unit-pair tau: sigma in slot " + std::to_string(j) + sn, [&, n, j, rs] {
                         return Pair{compose(tau(a, eu, n), a.around(j - 1, rs, n - j)),
                                     compose(a.around(j - 2, rs, n - j + 1), tau(a, eu, n))};
                       }});
  }
  // The delta-coaction D_delta = (delta (x) id) coad_L.
  items.push_back({"delta-coaction: multiplicative", [&] {
                     Mor Dd = detail::delta_coaction(a, p, 1);
                     return Pair{compose(Dd, m), compose(m, tensor_mor(Dd, Dd))};
                   }});
  items.push_back({"delta-coaction: unital", [&] {
                     return Pair{compose(detail::delta_coaction(a, p, 1), u), u};
                   }});
  items.push_back({"delta-coaction: comultiplicative", [&] {
                     Mor Dd = detail::delta_coaction(a, p, 1);
                     return Pair{compose(D, Dd), compose(tensor_mor(Dd, Dd), D)};
                   }});
  items.push_back({"delta-coaction: counital", [&] {
                     return Pair{compose(e, detail::delta_coaction(a, p, 1)), e};
                   }});
  for (int n = 1; n <= n_max; ++n) {
    std::string sn = " n=" + std::to_string(n);
    items.push_back({"delta-coaction: intertwines the left diagonal action" + sn, [&, n] {
                       Mor lhs = compose(detail::delta_coaction(a, p, n), a.diagonal_action(Side::Left, n));
                       Mor rhs = compose(a.diagonal_action(Side::Left, n),
                                         tensor_mor(detail::delta_coaction(a, p, 1), detail::delta_coaction(a, p, n)));
                       return Pair{lhs, rhs};
                     }});
    items.push_back({"right adjoint action by sigma" + sn, [&, n] {
                       Mor lhs = relabel(compose(a.adjoint_action(Side::Right, n), tensor_mor(a.id(n), p.sigma)),
                                         a.Hn(n), a.Hn(n));
                       Mor lam = a.diagonal_action(Side::Left, n);
                       Mor rhs = compose_all({a.diagonal_action(Side::Right, n), tensor_mor(lam, a.id(1)),
                                              tensor_mor({compose(S, p.sigma), a.id(n), p.sigma})});
                       return Pair{lhs, relabel(rhs, a.Hn(n), a.Hn(n))};
                     }});
  }

  std::vector<CheckItem> out(items.size());
  parallel_for(items.size(), [&](std::size_t i) {
    auto [l, r] = items[i].sides();
    std::string diff = describe_difference(l, r);
    out[i] = {items[i].name, diff.empty(), diff};
  });
  Report rep;
  rep.items = std::move(out);
  return rep;
}

}  // namespace braidcm
