/**
 * @file hopf.hpp
 * @brief Hopf algebras in a braided category and their derived operators.
 *
 * Every derived operator is a single composition chain of structure maps,
 * identities and braidings.  The crossing used by each chain is listed in
 * `transcription_table()`; "positive" means `braiding`, "inverse" means
 * `braiding_inverse`.
 */
#pragma once

#include "braided.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace braidcm {

struct ValidationError : Error {
  Report report;
  ValidationError(const std::string& what, Report r) : Error(what), report(std::move(r)) {}
};

struct NotAlgebraMorphism : Error {
  using Error::Error;
};

/** One row of the diagram transcription table. */
struct Transcription {
  std::string diagram;
  std::string crossing;  // "positive", "inverse" or "none"
  std::string chain;
};

/** How every derived diagram was transcribed into matrix calculus. */
inline std::vector<Transcription> transcription_table() {
  return {
      {"braided bialgebra axiom", "positive", "(m(x)m)(id(x)tau(x)id)(D(x)D)"},
      {"left diagonal action", "positive", "(m(x)l_{n-1})(id(x)tau_{H,H}(x)id)(D(x)id)"},
      {"right diagonal action", "positive", "(r_{n-1}(x)m)(id(x)tau_{H,H}(x)id)(id(x)D)"},
      {"left adjoint action", "positive", "m(m(x)S)(id(x)tau_{H,H})(D(x)id); tensor power as left diagonal"},
      {"right adjoint action", "positive", "m(m(x)id)(S(x)id(x)id)(tau_{H,H}(x)id)(id(x)D); tensor power as right diagonal"},
      {"left coadjoint coaction", "inverse", "(m(id(x)S)(x)id)(id(x)tau^{-1}_{H,H})D_3; tensor power (m(x)id)(id(x)tau_{M,H}(x)id)"},
      {"right coadjoint coaction", "inverse", "(id(x)m(S(x)id))(tau^{-1}_{H,H}(x)id)D_3; tensor power (id(x)m)(id(x)tau_{H,N}(x)id)"},
      {"twisted antipode", "none", "(delta(x)S)D"},
      {"paracocyclic operator tau_n(delta,sigma)", "positive", "l_n(St(x)id(x)sigma)"},
      {"cofaces/codegeneracies of CM", "none", "u, D in slot i-1, sigma appended; e in slot j"},
      {"paracocyclic operator of C", "positive", "tau_{C,C^n}(theta(x)id); wrap-around coface tau_n d_0"},
      {"trace morphism alpha_n", "positive", "(id(x)r^{(x)n}) shuffle(tau_{C^k,H}) (D_C^{n+1}alpha(x)id)"},
      {"sigma-trace condition", "positive", "(id(x)r)(D_C alpha(x)sigma) = (id(x)theta)tau_{C,C} D_C alpha"},
      {"twisted modular pair in involution", "none", "St^2 = m(m(sigma(x)theta)(x)S(sigma))"},
  };
}

/**
 * \brief A Hopf algebra H in the category described by `ctx`.
 *
 * Construct with `HopfAlgebra::checked` (validates every axiom) or
 * `HopfAlgebra::unchecked` (negative tests only).  Derived operators are
 * memoised in an internally synchronised cache shared between copies.
 */
class HopfAlgebra {
 public:
  CategoryCtx ctx;
  Obj H;
  Mor mult, unit, comult, counit, antipode;

  static HopfAlgebra unchecked(CategoryCtx ctx, Obj h, Mor m, Mor u, Mor d, Mor e, Mor s) {
    HopfAlgebra a;
    a.ctx = std::move(ctx);
    a.H = std::move(h);
    a.mult = std::move(m);
    a.unit = std::move(u);
    a.comult = std::move(d);
    a.counit = std::move(e);
    a.antipode = std::move(s);
    a.cache_ = std::make_shared<Cache>();
    return a;
  }

  static HopfAlgebra checked(CategoryCtx ctx, Obj h, Mor m, Mor u, Mor d, Mor e, Mor s);

  const Obj& one() const { return cache_->one(H.field); }
  Obj Hn(int n) const { return tensor_power(H, n); }
  Mor id(int n) const { return Mor::identity(Hn(n)); }

  /** id_{H^l} (x) f (x) id_{H^r} */
  Mor around(int l, const Mor& f, int r) const {
    Mor x = f;
    if (l > 0) x = tensor_mor(id(l), x);
    if (r > 0) x = tensor_mor(x, id(r));
    return x;
  }

  /** tau_{H^a, H^b} */
  Mor tau(int a, int b) const {
    return memo("tau:" + std::to_string(a) + "," + std::to_string(b), [&] { return braiding(ctx, Hn(a), Hn(b)); });
  }
  Mor tau_inv(int a, int b) const {
    return memo("tauinv:" + std::to_string(a) + "," + std::to_string(b),
                [&] { return braiding_inverse(ctx, Hn(a), Hn(b)); });
  }
  Mor theta(int n) const {
    return memo("theta:" + std::to_string(n), [&] { return twist(ctx, Hn(n)); });
  }

  Mor antipode_inverse() const {
    return memo("Sinv", [&] { return inverse(antipode); });
  }

  /** m_0 = u, m_{n+1} = m(id (x) m_n) */
  Mor iterated_mult(int n) const {
    return memo("mult:" + std::to_string(n), [&]() -> Mor {
      if (n == 0) return unit;
      if (n == 1) return id(1);
      return compose(mult, around(1, iterated_mult(n - 1), 0));
    });
  }

  /** D_0 = e, D_{n+1} = (id (x) D_n) D */
  Mor iterated_comult(int n) const {
    return memo("comult:" + std::to_string(n), [&]() -> Mor {
      if (n == 0) return counit;
      if (n == 1) return id(1);
      return compose(around(1, iterated_comult(n - 1), 0), comult);
    });
  }

  /** Left diagonal action H (x) H^n -> H^n, or right H^n (x) H -> H^n. */
  Mor diagonal_action(Side side, int n) const {
    return memo(std::string(side == Side::Left ? "lam:" : "rho:") + std::to_string(n), [&]() -> Mor {
      if (n == 0) return counit;
      if (n == 1) return mult;
      if (side == Side::Left) {
        // (m (x) l_{n-1})(id (x) tau_{H,H} (x) id_{n-1})(D (x) id_n)
        return compose_all({tensor_mor(mult, diagonal_action(Side::Left, n - 1)), around(1, tau(1, 1), n - 1),
                            around(0, comult, n)});
      }
      // (r_{n-1} (x) m)(id_{n-1} (x) tau_{H,H} (x) id)(id_n (x) D)
      return compose_all({tensor_mor(diagonal_action(Side::Right, n - 1), mult), around(n - 1, tau(1, 1), 1),
                          around(n, comult, 0)});
    });
  }

  /** Left adjoint action H (x) H^n -> H^n, right adjoint H^n (x) H -> H^n. */
  Mor adjoint_action(Side side, int n) const {
    return memo(std::string(side == Side::Left ? "adL:" : "adR:") + std::to_string(n), [&]() -> Mor {
      if (n == 0) return counit;
      if (side == Side::Left) {
        if (n == 1) {
          // a (x) h -> a_1 h S(a_2)
          return compose_all({mult, tensor_mor(mult, antipode), around(1, tau(1, 1), 0), around(0, comult, 1)});
        }
        return compose_all({tensor_mor(adjoint_action(Side::Left, 1), adjoint_action(Side::Left, n - 1)),
                            around(1, tau(1, 1), n - 1), around(0, comult, n)});
      }
      if (n == 1) {
        // h (x) a -> S(a_1) h a_2
        return compose_all({mult, around(0, mult, 1), around(0, antipode, 2), around(0, tau(1, 1), 1),
                            around(1, comult, 0)});
      }
      return compose_all({tensor_mor(adjoint_action(Side::Right, n - 1), adjoint_action(Side::Right, 1)),
                          around(n - 1, tau(1, 1), 1), around(n, comult, 0)});
    });
  }

  /** Left coadjoint coaction H^n -> H (x) H^n, right H^n -> H^n (x) H. */
  Mor coadjoint_coaction(Side side, int n) const {
    return memo(std::string(side == Side::Left ? "coadL:" : "coadR:") + std::to_string(n), [&]() -> Mor {
      if (n == 0) return unit;
      if (side == Side::Left) {
        if (n == 1) {
          // h -> h_1 S(h_3) (x) h_2
          return compose_all({around(0, compose(mult, around(1, antipode, 0)), 1), around(1, tau_inv(1, 1), 0),
                              iterated_comult(3)});
        }
        // (m (x) id)(id (x) tau_{M,H} (x) id)(g_1 (x) g_{n-1})
        return compose_all({around(0, mult, n), around(1, tau(1, 1), n - 1),
                            tensor_mor(coadjoint_coaction(Side::Left, 1), coadjoint_coaction(Side::Left, n - 1))});
      }
      if (n == 1) {
        // h -> h_2 (x) S(h_1) h_3
        return compose_all({around(1, compose(mult, around(0, antipode, 1)), 0), around(0, tau_inv(1, 1), 1),
                            iterated_comult(3)});
      }
      return compose_all({around(n, mult, 0), around(n - 1, tau(1, 1), 1),
                          tensor_mor(coadjoint_coaction(Side::Right, n - 1), coadjoint_coaction(Side::Right, 1))});
    });
  }

  /** Twisted antipode (delta (x) S) D : H -> H */
  Mor twisted_antipode(const Mor& delta) const;

  /** Generic memoisation hook for derived operators of this algebra. */
  template <class F>
  Mor memo(const std::string& key, F&& make) const {
    {
      std::lock_guard<std::mutex> lock(cache_->mu);
      auto it = cache_->table.find(key);
      if (it != cache_->table.end()) return it->second;
    }
    Mor v = make();
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->table.emplace(key, std::move(v)).first->second;
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, Mor> table;
    Obj unit_obj;
    const Obj& one(FieldSpec f) {
      std::lock_guard<std::mutex> lock(mu);
      if (unit_obj.grades.empty()) unit_obj = Obj::unit(f);
      return unit_obj;
    }
  };
  std::shared_ptr<Cache> cache_;
};

namespace detail {

inline std::string grade_violation(const Mor& f) {
  for (std::size_t j = 0; j < f.cols(); ++j)
    for (const auto& e : f.column(j))
      if (f.cod.grades[e.row] != f.dom.grades[j])
        return "entry (" + std::to_string(e.row) + "," + std::to_string(j) + ") changes the grade";
  return "";
}

inline bool is_algebra_morphism(const HopfAlgebra& a, const Mor& delta) {
  Mor lhs = compose(delta, a.mult);
  Mor rhs = relabel(tensor_mor(delta, delta), a.Hn(2), a.one());
  return lhs == rhs && compose(delta, a.unit) == Mor::identity(a.one());
}

inline bool is_coalgebra_morphism(const HopfAlgebra& a, const Mor& sigma) {
  Mor lhs = compose(a.comult, sigma);
  Mor rhs = relabel(tensor_mor(sigma, sigma), a.one(), a.Hn(2));
  return lhs == rhs && compose(a.counit, sigma) == Mor::identity(a.one());
}

}  // namespace detail

/**
 * \brief Every Hopf axiom as exact matrix equality.
 *
 * Throws ShapeError before checking anything if a structure map has the wrong
 * boundary objects.
 */
inline Report check_hopf_axioms(const HopfAlgebra& a) {
  const Obj& H = a.H;
  Obj one = Obj::unit(H.field);
  Obj H2 = a.Hn(2);
  auto shape = [&](const Mor& f, const Obj& d, const Obj& c, const char* name) {
    if (!f.dom.same_as(d) || !f.cod.same_as(c) || f.cols() != d.dim() || f.rows() != c.dim())
      throw ShapeError(std::string("structure map '") + name + "' has wrong boundary objects");
  };
  if (!(H.field == a.ctx.field)) throw ShapeError("carrier is not over the category's field");
  shape(a.mult, H2, H, "mult");
  shape(a.unit, one, H, "unit");
  shape(a.comult, H, H2, "comult");
  shape(a.counit, H, one, "counit");
  shape(a.antipode, H, H, "antipode");

  Report r;
  Mor idH = a.id(1);
  const Mor &m = a.mult, &u = a.unit, &D = a.comult, &e = a.counit, &S = a.antipode;
  r.expect_equal("associativity", compose(m, tensor_mor(m, idH)), compose(m, tensor_mor(idH, m)));
  r.expect_equal("unitality (left)", relabel(compose(m, tensor_mor(u, idH)), H, H), idH);
  r.expect_equal("unitality (right)", relabel(compose(m, tensor_mor(idH, u)), H, H), idH);
  r.expect_equal("coassociativity", compose(tensor_mor(D, idH), D), compose(tensor_mor(idH, D), D));
  r.expect_equal("counitality (left)", relabel(compose(tensor_mor(e, idH), D), H, H), idH);
  r.expect_equal("counitality (right)", relabel(compose(tensor_mor(idH, e), D), H, H), idH);
  r.expect_equal("bialgebra: comultiplication multiplicative", compose(D, m),
                 compose_all({tensor_mor(m, m), a.around(1, braiding(a.ctx, H, H), 1), tensor_mor(D, D)}));
  r.expect_equal("bialgebra: comultiplication unital", compose(D, u), relabel(tensor_mor(u, u), one, H2));
  r.expect_equal("bialgebra: counit multiplicative", compose(e, m), relabel(tensor_mor(e, e), H2, one));
  r.expect_equal("bialgebra: counit of unit", compose(e, u), Mor::identity(one));
  Mor ue = compose(u, e);
  r.expect_equal("antipode (left)", compose_all({m, tensor_mor(S, idH), D}), ue);
  r.expect_equal("antipode (right)", compose_all({m, tensor_mor(idH, S), D}), ue);
  bool invertible = rank(S) == H.dim();
  r.expect("antipode invertible", invertible, "antipode is singular");
  std::string gv;
  for (const Mor* f : {&m, &u, &D, &e, &S}) {
    gv = detail::grade_violation(*f);
    if (!gv.empty()) break;
  }
  r.expect("grade-homogeneity", gv.empty(), gv);
  return r;
}

inline HopfAlgebra HopfAlgebra::checked(CategoryCtx ctx, Obj h, Mor m, Mor u, Mor d, Mor e, Mor s) {
  HopfAlgebra a = unchecked(std::move(ctx), std::move(h), std::move(m), std::move(u), std::move(d), std::move(e),
                            std::move(s));
  Report r = check_hopf_axioms(a);
  if (!r.passed()) throw ValidationError("Hopf axiom '" + r.first_failure()->name + "' fails", r);
  return a;
}

inline Mor HopfAlgebra::twisted_antipode(const Mor& delta) const {
  if (!detail::is_algebra_morphism(*this, delta)) throw NotAlgebraMorphism("delta is not an algebra morphism");
  return relabel(compose(tensor_mor(delta, antipode), comult), H, H);
}

}  // namespace braidcm
