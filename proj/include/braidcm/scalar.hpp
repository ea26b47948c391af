/**
 * @file scalar.hpp
 * @brief Exact scalars: rationals and cyclotomic extensions Q[t]/(Phi_N(t)).
 *
 * A Scalar stores its rational constant term in `re` and, when it lies in a
 * proper cyclotomic extension, the remaining coefficients (t^1 .. t^{phi(N)-1})
 * in `hi`.  Purely rational values never carry `hi`, which keeps the common
 * case allocation-free.  The canonical form is unique, so equality is
 * structural.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidcm {

/** \brief Base class of every error raised by the library. */
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error {
  using Error::Error;
};

struct ScalarSyntaxError : Error {
  using Error::Error;
};

/** \brief Rationals (order 0) or the N-th cyclotomic field (order N >= 3). */
struct FieldSpec {
  int order = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec cyclotomic(int n) {
    if (n < 1) throw Error("cyclotomic order must be positive");
    return FieldSpec{n <= 2 ? 0 : n};
  }
  bool is_rational() const { return order == 0; }
  bool operator==(const FieldSpec&) const = default;
  std::string to_string() const {
    return order == 0 ? "Q" : "Q(z" + std::to_string(order) + ")";
  }
};

namespace detail {

/** Integer polynomial, coefficient i is the coefficient of t^i. */
using IntPoly = std::vector<mpz_class>;

inline IntPoly poly_divide_exact(IntPoly num, const IntPoly& den) {
  // den is monic
  IntPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class c = num[k + den.size() - 1];
    q[k] = c;
    if (c != 0)
      for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
  }
  return q;
}

/** The N-th cyclotomic polynomial, memoised behind a mutex. */
inline const IntPoly& cyclotomic_poly(int n) {
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Compute recursively without re-locking: build all divisors bottom-up.
  std::map<int, IntPoly> local;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    IntPoly p(d + 1, 0);
    p[0] = -1;
    p[d] = 1;
    for (auto& [e, phi] : local)
      if (d % e == 0) p = poly_divide_exact(p, phi);
    local[d] = p;
  }
  return cache.emplace(n, local[n]).first->second;
}

inline int cyclotomic_degree(int n) {
  return static_cast<int>(cyclotomic_poly(n).size()) - 1;
}

}  // namespace detail

/**
 * \brief An exact field element.
 *
 * `order` is the cyclotomic order the value lives in (0 for Q).  Values in a
 * cyclotomic field that happen to be rational are stored as rationals, so a
 * rational constant mixes freely with any field.
 */
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}
  Scalar(int v) : re_(v) {}
  Scalar(const mpq_class& v) : re_(v) {}
  Scalar(long num, long den) : re_(num, den) { re_.canonicalize(); }

  /** The generator z of Cyclotomic(n); for n <= 2 this is 1 or -1. */
  static Scalar root_of_unity(int n) {
    FieldSpec f = FieldSpec::cyclotomic(n);
    if (f.is_rational()) return Scalar(n == 1 ? 1 : -1);
    std::vector<mpq_class> c(detail::cyclotomic_degree(n), 0);
    c[1] = 1;
    return from_coeffs(n, std::move(c));
  }

  /** Builds a canonical scalar from reduced coefficients in Cyclotomic(n). */
  static Scalar from_coeffs(int n, std::vector<mpq_class> c) {
    Scalar s;
    if (c.empty()) return s;
    s.re_ = c[0];
    bool rational = true;
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] != 0) rational = false;
    if (!rational && n >= 3) {
      s.order_ = n;
      s.hi_.assign(c.begin() + 1, c.end());
    }
    return s;
  }

  bool is_zero() const { return hi_.empty() && re_ == 0; }
  bool is_one() const { return hi_.empty() && re_ == 1; }
  bool is_rational() const { return hi_.empty(); }
  int order() const { return order_; }
  const mpq_class& rational_part() const { return re_; }

  /** All coefficients padded to the degree of Phi_n (n >= 3). */
  std::vector<mpq_class> coeffs(int n) const {
    if (n < 3) return {re_};
    std::vector<mpq_class> c(detail::cyclotomic_degree(n), 0);
    c[0] = re_;
    for (std::size_t i = 0; i < hi_.size(); ++i) c[i + 1] = hi_[i];
    return c;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.hi_.empty() != b.hi_.empty()) return false;
    if (a.re_ != b.re_) return false;
    if (a.hi_.empty()) return true;
    return a.order_ == b.order_ && a.hi_ == b.hi_;
  }

  Scalar operator-() const {
    Scalar r = *this;
    r.re_ = -r.re_;
    for (auto& c : r.hi_) c = -c;
    return r;
  }

  Scalar& operator+=(const Scalar& b) {
    if (b.hi_.empty()) {
      re_ += b.re_;
      return *this;
    }
    int n = common_order(b);
    if (hi_.empty()) {
      order_ = n;
      hi_ = b.hi_;
    } else {
      for (std::size_t i = 0; i < hi_.size(); ++i) hi_[i] += b.hi_[i];
    }
    re_ += b.re_;
    normalize();
    return *this;
  }
  Scalar& operator-=(const Scalar& b) { return *this += -b; }

  Scalar& operator*=(const Scalar& b) {
    if (b.hi_.empty()) {
      if (b.re_ == 0) {
        *this = Scalar();
        return *this;
      }
      re_ *= b.re_;
      for (auto& c : hi_) c *= b.re_;
      return *this;
    }
    if (hi_.empty()) {
      mpq_class r = re_;
      *this = b;
      *this *= Scalar(r);
      return *this;
    }
    int n = common_order(b);
    auto x = coeffs(n), y = b.coeffs(n);
    std::vector<mpq_class> prod(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < y.size(); ++j) prod[i + j] += x[i] * y[j];
    }
    *this = from_coeffs(n, reduce(n, std::move(prod)));
    return *this;
  }

  Scalar inverse() const {
    if (is_zero()) throw Error("division by zero scalar");
    if (hi_.empty()) return Scalar(mpq_class(1) / re_);
    // Solve (multiplication by *this) * x = 1 over Q.
    int n = order_;
    int d = detail::cyclotomic_degree(n);
    std::vector<std::vector<mpq_class>> a(d, std::vector<mpq_class>(d + 1, 0));
    auto c = coeffs(n);
    for (int j = 0; j < d; ++j) {
      std::vector<mpq_class> prod(d + j, 0);
      for (int i = 0; i < d; ++i) prod[i + j] = c[i];
      auto col = reduce(n, std::move(prod));
      for (int i = 0; i < d; ++i) a[i][j] = col[i];
    }
    a[0][d] = 1;
    for (int col = 0; col < d; ++col) {
      int piv = col;
      while (a[piv][col] == 0) ++piv;
      std::swap(a[piv], a[col]);
      mpq_class inv = 1 / a[col][col];
      for (int k = col; k <= d; ++k) a[col][k] *= inv;
      for (int r = 0; r < d; ++r) {
        if (r == col || a[r][col] == 0) continue;
        mpq_class f = a[r][col];
        for (int k = col; k <= d; ++k) a[r][k] -= f * a[col][k];
      }
    }
    std::vector<mpq_class> x(d);
    for (int i = 0; i < d; ++i) x[i] = a[i][d];
    return from_coeffs(n, std::move(x));
  }

  Scalar& operator/=(const Scalar& b) { return *this *= b.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /** Integer power (negative exponents invert). */
  Scalar pow(long e) const {
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Scalar r(1);
    while (k) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  /** Canonical text: "p/q" (or "p" when q = 1) for rationals, else "[c0,c1,..]" */
  std::string to_string() const {
    if (hi_.empty()) return rational_text(re_);
    std::string s = "[";
    auto c = coeffs(order_);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += rational_text(c[i]);
    }
    return s + "]";
  }

  static std::string rational_text(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }

  static mpq_class parse_rational(const std::string& text) {
    std::string t;
    for (char ch : text)
      if (ch != ' ') t += ch;
    if (t.empty()) throw ScalarSyntaxError("empty scalar");
    auto slash = t.find('/');
    auto valid_int = [](const std::string& s) {
      std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
      if (i >= s.size()) return false;
      for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
      return true;
    };
    std::string num = t.substr(0, slash);
    if (!num.empty() && num[0] == '+') num = num.substr(1);
    if (!valid_int(num)) throw ScalarSyntaxError("malformed rational '" + text + "'");
    mpq_class q;
    if (slash == std::string::npos) {
      q = mpq_class(mpz_class(num));
    } else {
      std::string den = t.substr(slash + 1);
      if (!valid_int(den) || mpz_class(den) == 0)
        throw ScalarSyntaxError("malformed rational '" + text + "'");
      q = mpq_class(mpz_class(num), mpz_class(den));
      q.canonicalize();
    }
    return q;
  }

  /**
   * Parses "p/q" or a polynomial in z such as "1/2-3z^2+z" in field f.
   * Powers of z are reduced modulo Phi_N.
   */
  static Scalar parse(const std::string& text, FieldSpec f) {
    if (text.find('z') == std::string::npos) return Scalar(parse_rational(text));
    int n = f.order;
    if (n < 3) throw ScalarSyntaxError("z used over the rationals: '" + text + "'");
    std::string t;
    for (char ch : text)
      if (ch != ' ' && ch != '*') t += ch;
    Scalar acc;
    Scalar z = root_of_unity(n);
    std::size_t i = 0;
    while (i < t.size()) {
      std::size_t j = i + 1;
      while (j < t.size() && t[j] != '+' && t[j] != '-') ++j;
      std::string term = t.substr(i, j - i);
      i = j;
      bool neg = false;
      if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
        neg = term[0] == '-';
        term = term.substr(1);
      }
      auto zp = term.find('z');
      Scalar v;
      if (zp == std::string::npos) {
        v = Scalar(parse_rational(term));
      } else {
        std::string coef = term.substr(0, zp);
        std::string rest = term.substr(zp + 1);
        long e = 1;
        if (!rest.empty()) {
          if (rest[0] != '^' || rest.size() < 2) throw ScalarSyntaxError("malformed power in '" + text + "'");
          try {
            e = std::stol(rest.substr(1));
          } catch (...) {
            throw ScalarSyntaxError("malformed power in '" + text + "'");
          }
          if (e < 0) throw ScalarSyntaxError("negative power in '" + text + "'");
        }
        v = coef.empty() ? Scalar(1) : Scalar(parse_rational(coef));
        v *= z.pow(e);
      }
      acc += neg ? -v : v;
    }
    return acc;
  }

 private:
  int common_order(const Scalar& b) const {
    if (!hi_.empty() && !b.hi_.empty() && order_ != b.order_)
      throw FieldMismatch("scalars from different cyclotomic fields");
    return hi_.empty() ? b.order_ : order_;
  }

  static std::vector<mpq_class> reduce(int n, std::vector<mpq_class> p) {
    const auto& phi = detail::cyclotomic_poly(n);
    std::size_t d = phi.size() - 1;
    for (std::size_t k = p.size(); k-- > d;) {
      if (p[k] == 0) continue;
      mpq_class c = p[k];
      for (std::size_t i = 0; i <= d; ++i) p[k - d + i] -= c * mpq_class(phi[i]);
    }
    p.resize(d, 0);
    return p;
  }

  void normalize() {
    bool rational = true;
    for (auto& c : hi_)
      if (c != 0) rational = false;
    if (rational) {
      hi_.clear();
      order_ = 0;
    }
  }

  mpq_class re_ = 0;
  int order_ = 0;
  std::vector<mpq_class> hi_;
};

}  // namespace braidcm
