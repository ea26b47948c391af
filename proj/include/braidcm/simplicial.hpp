/**
 * @file simplicial.hpp
 * @brief Generator words for the paracyclic category, normal forms,
 *        truncated paracocyclic objects, relation checks and Hom transport.
 *
 * Notation: d(n,i) is the coface n-1 -> n, s(n,j) the codegeneracy n+1 -> n,
 * t(n) the paracocyclic operator on level n and t^-1(n) its inverse.  Words are
 * written like compositions, right to left: "t(2).d(2,0)" applies d(2,0)
 * first.
 *
 * Normal form: d-string with strictly decreasing indices, then an s-string
 * with strictly increasing indices, then a power of t on the source level.
 */
#pragma once

#include "braided.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

namespace braidcm {

struct WordError : Error {
  using Error::Error;
};
struct TruncationError : Error {
  using Error::Error;
};

/** \brief One generator of the paracyclic category. */
struct Gen {
  enum class Kind { Coface, Codegen, Tau, TauInv };
  Kind kind;
  int n;
  int i = 0;

  int src() const {
    switch (kind) {
      case Kind::Coface: return n - 1;
      case Kind::Codegen: return n + 1;
      default: return n;
    }
  }
  int dst() const { return n; }
  bool operator==(const Gen&) const = default;

  std::string to_string() const {
    switch (kind) {
      case Kind::Coface: return "d(" + std::to_string(n) + "," + std::to_string(i) + ")";
      case Kind::Codegen: return "s(" + std::to_string(n) + "," + std::to_string(i) + ")";
      case Kind::Tau: return "t(" + std::to_string(n) + ")";
      case Kind::TauInv: return "t^-1(" + std::to_string(n) + ")";
    }
    return "?";
  }
};

/** \brief A composable word; `gens` is in written order (last applied first). */
struct GenWord {
  int source = 0;
  int target = 0;
  std::vector<Gen> gens;

  bool operator==(const GenWord&) const = default;

  std::string to_string() const {
    if (gens.empty()) return "id(" + std::to_string(source) + ")";
    std::string s;
    for (std::size_t k = 0; k < gens.size(); ++k) s += (k ? "." : "") + gens[k].to_string();
    return s;
  }
};

/** Validates index ranges and level compatibility; fills source/target. */
inline GenWord make_word(std::vector<Gen> gens, int level_if_empty = 0) {
  GenWord w;
  w.gens = std::move(gens);
  for (const auto& g : w.gens) {
    if (g.n < 0) throw WordError("negative level in " + g.to_string());
    switch (g.kind) {
      case Gen::Kind::Coface:
        if (g.n < 1 || g.i < 0 || g.i > g.n) throw WordError("coface index out of range: " + g.to_string());
        break;
      case Gen::Kind::Codegen:
        if (g.i < 0 || g.i > g.n) throw WordError("codegeneracy index out of range: " + g.to_string());
        break;
      default:
        break;
    }
  }
  for (std::size_t k = 0; k + 1 < w.gens.size(); ++k)
    if (w.gens[k].src() != w.gens[k + 1].dst())
      throw WordError("levels do not match between " + w.gens[k].to_string() + " and " + w.gens[k + 1].to_string());
  if (w.gens.empty()) {
    if (level_if_empty < 0) throw WordError("negative level");
    w.source = w.target = level_if_empty;
  } else {
    w.source = w.gens.back().src();
    w.target = w.gens.front().dst();
  }
  return w;
}

/** Parses "d(n,i)", "s(n,j)", "t(n)", "t^-1(n)" joined by '.', or "id(n)". */
inline GenWord parse_word(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw WordError("empty word text (use id(n))");
  auto parse_args = [&](const std::string& tok, std::size_t open) {
    if (tok.back() != ')') throw WordError("malformed generator '" + tok + "'");
    std::string inner = tok.substr(open + 1, tok.size() - open - 2);
    std::vector<int> args;
    std::size_t p = 0;
    while (p <= inner.size()) {
      std::size_t c = inner.find(',', p);
      std::string a = inner.substr(p, c == std::string::npos ? std::string::npos : c - p);
      if (a.empty() || a.find_first_not_of("0123456789") != std::string::npos)
        throw WordError("malformed argument in '" + tok + "'");
      args.push_back(std::stoi(a));
      if (c == std::string::npos) break;
      p = c + 1;
    }
    return args;
  };
  std::vector<Gen> gens;
  std::size_t start = 0;
  while (start <= t.size()) {
    std::size_t dot = t.find('.', start);
    std::string tok = t.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (tok.empty()) throw WordError("empty generator in '" + text + "'");
    auto open = tok.find('(');
    if (open == std::string::npos) throw WordError("malformed generator '" + tok + "'");
    std::string head = tok.substr(0, open);
    auto args = parse_args(tok, open);
    if (head == "id") {
      if (args.size() != 1 || t != tok) throw WordError("id(n) must stand alone");
      return make_word({}, args[0]);
    }
    if (head == "d" && args.size() == 2) gens.push_back({Gen::Kind::Coface, args[0], args[1]});
    else if (head == "s" && args.size() == 2) gens.push_back({Gen::Kind::Codegen, args[0], args[1]});
    else if (head == "t" && args.size() == 1) gens.push_back({Gen::Kind::Tau, args[0], 0});
    else if (head == "t^-1" && args.size() == 1) gens.push_back({Gen::Kind::TauInv, args[0], 0});
    else throw WordError("unknown generator '" + tok + "'");
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return make_word(std::move(gens));
}

/** \brief Canonical factorisation d-string . s-string . t^tau. */
struct NormalForm {
  int source = 0;
  int target = 0;
  std::vector<int> cofaces;   // written order, strictly decreasing
  std::vector<int> codegens;  // written order, strictly increasing
  long tau = 0;

  bool operator==(const NormalForm&) const = default;

  /** The word d_{i1} ... d_{ir} s_{j1} ... s_{js} t^tau with explicit levels. */
  GenWord to_word() const {
    std::vector<Gen> gens;
    int s = static_cast<int>(codegens.size()), r = static_cast<int>(cofaces.size());
    int m = source - s;
    for (int p = 0; p < r; ++p) gens.push_back({Gen::Kind::Coface, m + (r - p), cofaces[p]});
    for (int p = 0; p < s; ++p) gens.push_back({Gen::Kind::Codegen, source - (s - p), codegens[p]});
    for (long k = 0; k < (tau < 0 ? -tau : tau); ++k)
      gens.push_back({tau > 0 ? Gen::Kind::Tau : Gen::Kind::TauInv, source, 0});
    return make_word(std::move(gens), source);
  }

  std::string to_string() const { return to_word().to_string(); }
};

namespace detail {

struct Item {
  enum class K { D, S, T } k;
  int n;
  int i;   // index for D/S
  long e;  // exponent for T
};

inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace detail

/**
 * \brief Rewrites a word to its normal form using the simplicial and
 *        paracyclic relations.
 *
 * Powers of t are pushed to the right first; since t_n^{n+1} commutes past a
 * coface as t_{n-1}^{n} and past a codegeneracy as t_{n+1}^{n+2}, an
 * arbitrary power moves in O(n) steps.  The remaining simplicial word is then
 * sorted with the simplicial relations.
 */
inline NormalForm normalize(const GenWord& word) {
  using detail::Item;
  using K = Item::K;
  GenWord w = make_word(word.gens, word.source);  // re-validate
  std::vector<Item> it;
  for (const auto& g : w.gens) {
    switch (g.kind) {
      case Gen::Kind::Coface: it.push_back({K::D, g.n, g.i, 0}); break;
      case Gen::Kind::Codegen: it.push_back({K::S, g.n, g.i, 0}); break;
      case Gen::Kind::Tau: it.push_back({K::T, g.n, 0, 1}); break;
      case Gen::Kind::TauInv: it.push_back({K::T, g.n, 0, -1}); break;
    }
  }
  // Phase 1: merge and push powers of t to the right.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < it.size(); ++p) {
      Item& a = it[p];
      Item& b = it[p + 1];
      if (a.k != K::T) continue;
      if (a.e == 0) {
        it.erase(it.begin() + p);
        changed = true;
        break;
      }
      if (b.k == K::T) {
        a.e += b.e;
        it.erase(it.begin() + p + 1);
        changed = true;
        break;
      }
      long n = a.n;
      long q = detail::floor_div(a.e, n + 1);
      long r = a.e - q * (n + 1);
      long idx = b.i;
      long right;
      if (b.k == K::D) {
        right = q * n;
        for (long s = 0; s < r; ++s) {
          if (idx >= 1) {
            --idx;
            ++right;
          } else {
            idx = n;
          }
        }
        Item nd{K::D, static_cast<int>(n), static_cast<int>(idx), 0};
        Item nt{K::T, static_cast<int>(n - 1), 0, right};
        it[p] = nd;
        it[p + 1] = nt;
      } else {
        right = q * (n + 2);
        for (long s = 0; s < r; ++s) {
          if (idx >= 1) {
            --idx;
            ++right;
          } else {
            idx = n;
            right += 2;
          }
        }
        Item ns{K::S, static_cast<int>(n), static_cast<int>(idx), 0};
        Item nt{K::T, static_cast<int>(n + 1), 0, right};
        it[p] = ns;
        it[p + 1] = nt;
      }
      changed = true;
      break;
    }
  }
  long tau = 0;
  if (!it.empty() && it.back().k == K::T) {
    tau = it.back().e;
    it.pop_back();
  }
  // Phase 2: simplicial sorting.
  changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < it.size(); ++p) {
      Item a = it[p], b = it[p + 1];
      if (a.k == K::S && b.k == K::D) {
        int j = a.i, i = b.i, n = a.n;
        if (i == j || i == j + 1) {
          it.erase(it.begin() + p, it.begin() + p + 2);
        } else if (i < j) {
          it[p] = {K::D, n, i, 0};
          it[p + 1] = {K::S, n - 1, j - 1, 0};
        } else {
          it[p] = {K::D, n, i - 1, 0};
          it[p + 1] = {K::S, n - 1, j, 0};
        }
        changed = true;
        break;
      }
      if (a.k == K::D && b.k == K::D && a.i <= b.i) {
        it[p] = {K::D, a.n, b.i + 1, 0};
        it[p + 1] = {K::D, b.n, a.i, 0};
        changed = true;
        break;
      }
      if (a.k == K::S && b.k == K::S && a.i >= b.i) {
        it[p] = {K::S, a.n, b.i, 0};
        it[p + 1] = {K::S, b.n, a.i + 1, 0};
        changed = true;
        break;
      }
    }
  }
  NormalForm nf;
  nf.source = w.source;
  nf.target = w.target;
  nf.tau = tau;
  for (const auto& x : it) (x.k == K::D ? nf.cofaces : nf.codegens).push_back(x.i);
  return nf;
}

/**
 * \brief A paracocyclic object truncated at level N_max.
 *
 * cofaces[n][i]: levels[n-1] -> levels[n] for 1 <= n <= N_max;
 * codegens[n][j]: levels[n+1] -> levels[n] for n + 1 <= N_max;
 * tau[n]: levels[n] -> levels[n].
 */
struct ParaCocyclicData {
  std::string name;
  CategoryCtx ctx;
  int N_max = 0;
  std::vector<Obj> levels;
  std::vector<std::vector<Mor>> cofaces;
  std::vector<std::vector<Mor>> codegens;
  std::vector<Mor> tau;

  ParaCocyclicData() : inv_cache_(std::make_shared<InvCache>()) {}

  /** tau_n^{-1}, computed once and cached. */
  Mor tau_inverse(int n) const {
    std::lock_guard<std::mutex> lock(inv_cache_->mu);
    auto it = inv_cache_->inv.find(n);
    if (it != inv_cache_->inv.end()) return it->second;
    return inv_cache_->inv.emplace(n, inverse(tau.at(n))).first->second;
  }

  /** Boundary consistency of every generator. */
  void validate() const {
    if (static_cast<int>(levels.size()) != N_max + 1) throw ShapeError("levels do not match N_max");
    for (int n = 1; n <= N_max; ++n)
      for (int i = 0; i <= n; ++i) {
        const Mor& f = cofaces.at(n).at(i);
        if (!f.dom.same_as(levels[n - 1]) || !f.cod.same_as(levels[n])) throw ShapeError("coface boundary mismatch");
      }
    for (int n = 0; n + 1 <= N_max; ++n)
      for (int j = 0; j <= n; ++j) {
        const Mor& f = codegens.at(n).at(j);
        if (!f.dom.same_as(levels[n + 1]) || !f.cod.same_as(levels[n]))
          throw ShapeError("codegeneracy boundary mismatch");
      }
    for (int n = 0; n <= N_max; ++n)
      if (!tau.at(n).dom.same_as(levels[n]) || !tau.at(n).cod.same_as(levels[n]))
        throw ShapeError("tau boundary mismatch");
  }

 private:
  struct InvCache {
    std::mutex mu;
    std::map<int, Mor> inv;
  };
  std::shared_ptr<InvCache> inv_cache_;
};

/** Composite matrix of a word; throws TruncationError beyond N_max. */
inline Mor evaluate_word(const ParaCocyclicData& P, const GenWord& word) {
  GenWord w = make_word(word.gens, word.source);
  auto check = [&](int lvl) {
    if (lvl > P.N_max) throw TruncationError("word reaches level " + std::to_string(lvl) + " beyond N_max");
  };
  check(w.source);
  Mor r = Mor::identity(P.levels[w.source]);
  for (std::size_t k = w.gens.size(); k-- > 0;) {
    const Gen& g = w.gens[k];
    check(g.src());
    check(g.dst());
    switch (g.kind) {
      case Gen::Kind::Coface: r = compose(P.cofaces[g.n][g.i], r); break;
      case Gen::Kind::Codegen: r = compose(P.codegens[g.n][g.i], r); break;
      case Gen::Kind::Tau: r = compose(P.tau[g.n], r); break;
      case Gen::Kind::TauInv: r = compose(P.tau_inverse(g.n), r); break;
    }
  }
  return r;
}

inline Mor evaluate_word(const ParaCocyclicData& P, const NormalForm& nf) { return evaluate_word(P, nf.to_word()); }

enum class Family { SR, PCR, CC, TwistedCC };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::SR: return "SR";
    case Family::PCR: return "PCR";
    case Family::CC: return "CC";
    case Family::TwistedCC: return "TwistedCC";
  }
  return "?";
}

/** \brief One checked relation instance. */
struct RelationRecord {
  std::string relation;  // e.g. "SR.dd", "PCR.ts0"
  int level = 0;
  std::vector<int> indices;
  bool pass = true;
  std::string detail;
};

/** \brief Relation instances ordered by level, relation id, then indices. */
struct RelationReport {
  std::vector<RelationRecord> records;
  int skipped = 0;  // instances that would need levels beyond N_max

  bool passed() const {
    for (const auto& r : records)
      if (!r.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& r : records) n += !r.pass;
    return n;
  }
};

/**
 * \brief Uniform access to the generators of a paracocyclic object or of a
 *        (co)cyclic module.
 *
 * `coface(n,i)` etc. always name the generator by its cocyclic label.  For a
 * cyclic module (`opposite == true`) the stored maps go the other way and
 * every relation is checked with composition order reversed, which yields
 * the familiar face/degeneracy relations verbatim.
 */
struct GeneratorAccess {
  int N_max = 0;
  bool opposite = false;
  std::function<Mor(int, int)> coface, codegen;
  std::function<Mor(int)> tau, ident, theta;
};

namespace detail {

struct Instance {
  RelationRecord rec;
  std::function<std::pair<Mor, Mor>()> sides;
};

inline std::vector<Instance> relation_instances(const GeneratorAccess& A, int up_to, const std::set<Family>& fams,
                                                int& skipped) {
  std::vector<Instance> out;
  // c(X, Y) = X . Y in cocyclic reading, Y . X for the opposite (cyclic) reading
  auto c = [op = A.opposite](const Mor& x, const Mor& y) { return op ? compose(y, x) : compose(x, y); };
  auto add = [&](const std::string& rel, int level, std::vector<int> idx, int touches,
                 std::function<std::pair<Mor, Mor>()> f) {
    if (touches > A.N_max) {
      ++skipped;
      return;
    }
    out.push_back({RelationRecord{rel, level, std::move(idx), true, ""}, std::move(f)});
  };
  for (int n = 0; n <= up_to; ++n) {
    if (fams.count(Family::SR)) {
      for (int j = 1; j <= n && n >= 2; ++j)
        for (int i = 0; i < j; ++i)
          add("SR.dd", n, {i, j}, n, [=, &A] {
            return std::make_pair(c(A.coface(n, j), A.coface(n - 1, i)), c(A.coface(n, i), A.coface(n - 1, j - 1)));
          });
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i)
          add("SR.ss", n, {i, j}, n + 2, [=, &A] {
            return std::make_pair(c(A.codegen(n, j), A.codegen(n + 1, i)),
                                  c(A.codegen(n, i), A.codegen(n + 1, j + 1)));
          });
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i)
          add("SR.sd", n, {i, j}, n + 1, [=, &A] {
            Mor lhs = c(A.codegen(n, j), A.coface(n + 1, i));
            if (i < j) return std::make_pair(lhs, c(A.coface(n, i), A.codegen(n - 1, j - 1)));
            if (i == j || i == j + 1) return std::make_pair(lhs, A.ident(n));
            return std::make_pair(lhs, c(A.coface(n, i - 1), A.codegen(n - 1, j)));
          });
    }
    if (fams.count(Family::PCR)) {
      if (n >= 1) {
        add("PCR.td0", n, {0}, n, [=, &A] { return std::make_pair(c(A.tau(n), A.coface(n, 0)), A.coface(n, n)); });
        for (int i = 1; i <= n; ++i)
          add("PCR.td", n, {i}, n, [=, &A] {
            return std::make_pair(c(A.tau(n), A.coface(n, i)), c(A.coface(n, i - 1), A.tau(n - 1)));
          });
      }
      add("PCR.ts0", n, {0}, n + 1, [=, &A] {
        return std::make_pair(c(A.tau(n), A.codegen(n, 0)), c(A.codegen(n, n), c(A.tau(n + 1), A.tau(n + 1))));
      });
      for (int i = 1; i <= n; ++i)
        add("PCR.ts", n, {i}, n + 1, [=, &A] {
          return std::make_pair(c(A.tau(n), A.codegen(n, i)), c(A.codegen(n, i - 1), A.tau(n + 1)));
        });
    }
    if (fams.count(Family::CC))
      add("CC", n, {}, n, [=, &A] { return std::make_pair(power(A.tau(n), n + 1), A.ident(n)); });
    if (fams.count(Family::TwistedCC))
      add("TwistedCC", n, {}, n, [=, &A] { return std::make_pair(power(A.tau(n), n + 1), A.theta(n)); });
  }
  return out;
}

}  // namespace detail

/** Evaluates every instance of the requested families up to level up_to. */
inline RelationReport check_relations(const GeneratorAccess& A, int up_to, const std::set<Family>& families) {
  if (up_to > A.N_max) throw TruncationError("up_to exceeds N_max");
  RelationReport rep;
  auto inst = detail::relation_instances(A, up_to, families, rep.skipped);
  parallel_for(inst.size(), [&](std::size_t k) {
    auto [l, r] = inst[k].sides();
    std::string diff = describe_difference(l, r);
    inst[k].rec.pass = diff.empty();
    inst[k].rec.detail = diff;
  });
  for (auto& x : inst) rep.records.push_back(std::move(x.rec));
  std::stable_sort(rep.records.begin(), rep.records.end(), [](const RelationRecord& a, const RelationRecord& b) {
    if (a.level != b.level) return a.level < b.level;
    if (a.relation != b.relation) return a.relation < b.relation;
    return a.indices < b.indices;
  });
  return rep;
}

inline GeneratorAccess access(const ParaCocyclicData& P) {
  GeneratorAccess A;
  A.N_max = P.N_max;
  A.coface = [&P](int n, int i) { return P.cofaces.at(n).at(i); };
  A.codegen = [&P](int n, int j) { return P.codegens.at(n).at(j); };
  A.tau = [&P](int n) { return P.tau.at(n); };
  A.ident = [&P](int n) { return Mor::identity(P.levels.at(n)); };
  A.theta = [&P](int n) { return twist(P.ctx, P.levels.at(n)); };
  return A;
}

inline RelationReport check_relations(const ParaCocyclicData& P, int up_to, const std::set<Family>& families) {
  return check_relations(access(P), up_to, families);
}

enum class Variance { Cocyclic, Cyclic };
enum class HomDirection { FromUnit, ToUnit };

/**
 * \brief A truncated (co)cyclic vector-space module.
 *
 * For Variance::Cocyclic, d[n][i]: levels[n-1] -> levels[n] are cofaces and
 * s[n][j]: levels[n+1] -> levels[n] codegeneracies.  For Variance::Cyclic
 * the same slots hold faces d[n][i]: levels[n] -> levels[n-1] and
 * degeneracies s[n][j]: levels[n] -> levels[n+1].
 */
struct CyclicModuleData {
  Variance variance = Variance::Cocyclic;
  int N_max = 0;
  std::vector<Obj> levels;
  std::vector<std::vector<Mor>> d;
  std::vector<std::vector<Mor>> s;
  std::vector<Mor> t;
};

inline GeneratorAccess access(const CyclicModuleData& X) {
  GeneratorAccess A;
  A.N_max = X.N_max;
  A.opposite = X.variance == Variance::Cyclic;
  A.coface = [&X](int n, int i) { return X.d.at(n).at(i); };
  A.codegen = [&X](int n, int j) { return X.s.at(n).at(j); };
  A.tau = [&X](int n) { return X.t.at(n); };
  A.ident = [&X](int n) { return Mor::identity(X.levels.at(n)); };
  A.theta = A.ident;
  return A;
}

namespace detail {

inline std::vector<std::size_t> grade_zero(const Obj& x) {
  std::vector<std::size_t> z;
  for (std::size_t i = 0; i < x.dim(); ++i)
    if (x.grades[i] == 0) z.push_back(i);
  return z;
}

/** Restriction of a grade-preserving map to the grade-0 subspaces. */
inline Mor restrict_grade_zero(const Mor& f, const Obj& dom0, const Obj& cod0, const std::vector<std::size_t>& zd,
                               const std::vector<std::size_t>& zc) {
  std::vector<long> pos(f.rows(), -1);
  for (std::size_t k = 0; k < zc.size(); ++k) pos[zc[k]] = static_cast<long>(k);
  Mor r(dom0, cod0);
  for (std::size_t k = 0; k < zd.size(); ++k) {
    std::vector<Entry> col;
    for (const auto& e : f.column(zd[k]))
      if (pos[e.row] >= 0) col.push_back({static_cast<std::uint32_t>(pos[e.row]), e.value});
    r.set_column(k, std::move(col));
  }
  return r;
}

}  // namespace detail

/**
 * \brief Transport along Hom(1, -) (postcomposition) or Hom(-, 1)
 *        (precomposition).
 *
 * Morphisms are grade preserving, so Hom(1, X) and Hom(X, 1) are both
 * spanned by the grade-0 basis vectors of X.  FromUnit restricts every
 * generator to that subspace (a cocyclic module when TwistedCC holds, since
 * the twist is trivial on grade 0).  ToUnit takes transposes of the
 * restrictions, giving a cyclic module that satisfies the face/degeneracy
 * relations d_i d_j = d_{j-1} d_i (i < j), d_i t_n = t_{n-1} d_{i-1},
 * d_0 t_n = d_n, s_i t_n = t_{n+1} s_{i-1}, s_0 t_n = t_{n+1}^2 s_n.
 */
inline CyclicModuleData hom_transport(const ParaCocyclicData& P, HomDirection dir) {
  CyclicModuleData X;
  X.variance = dir == HomDirection::FromUnit ? Variance::Cocyclic : Variance::Cyclic;
  X.N_max = P.N_max;
  std::vector<std::vector<std::size_t>> z;
  for (int n = 0; n <= P.N_max; ++n) {
    z.push_back(detail::grade_zero(P.levels[n]));
    X.levels.push_back(Obj("Hom" + std::to_string(n), std::vector<int>(z.back().size(), 0), P.ctx.field));
  }
  auto tr = [&](const Mor& f, int a, int b) {
    Mor r = detail::restrict_grade_zero(f, X.levels[a], X.levels[b], z[a], z[b]);
    return dir == HomDirection::FromUnit ? r : transpose(r);
  };
  X.d.resize(P.N_max + 1);
  X.s.resize(P.N_max + 1);
  for (int n = 1; n <= P.N_max; ++n)
    for (int i = 0; i <= n; ++i) X.d[n].push_back(tr(P.cofaces[n][i], n - 1, n));
  for (int n = 0; n + 1 <= P.N_max; ++n)
    for (int j = 0; j <= n; ++j) X.s[n].push_back(tr(P.codegens[n][j], n + 1, n));
  for (int n = 0; n <= P.N_max; ++n) X.t.push_back(tr(P.tau[n], n, n));
  return X;
}

inline RelationReport check_relations(const CyclicModuleData& X, int up_to, const std::set<Family>& families) {
  return check_relations(access(X), up_to, families);
}

}  // namespace braidcm
