#pragma once

// Homogeneous symmetric functions with LaurentQT coefficients in the m, h,
// p and s bases, finite-variable polynomials, Gessel's fundamental
// quasisymmetric functions, the Hall inner product and omega.
//
// The p basis is stored scaled: a coefficient c on key λ means c·p_λ/z_λ,
// which keeps every integral symmetric function integral.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "poly.hpp"
#include "ptn.hpp"

namespace ratcat {

enum class Basis { m, h, p, s };

inline std::string basis_name(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::h: return "h";
    case Basis::p: return "p";
    case Basis::s: return "s";
  }
  return "?";
}

class SymExpansion {
 public:
  using Terms = std::map<Partition, LaurentQT, std::greater<>>;

  SymExpansion(int degree, Basis basis) : degree_(degree), basis_(basis) {
    require(degree >= 0, "SymExpansion: negative degree");
  }

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentQT coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? LaurentQT() : it->second;
  }

  void add(const Partition& lambda, const LaurentQT& c) {
    require(lambda.size() == degree_, "SymExpansion: partition " + lambda.to_string() + " has the wrong size");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SymExpansion& operator+=(const SymExpansion& o) {
    require(o.degree_ == degree_ && o.basis_ == basis_, "SymExpansion: mismatched degree or basis");
    for (const auto& [l, c] : o.terms_) add(l, c);
    return *this;
  }
  SymExpansion& operator-=(const SymExpansion& o) {
    require(o.degree_ == degree_ && o.basis_ == basis_, "SymExpansion: mismatched degree or basis");
    for (const auto& [l, c] : o.terms_) add(l, -c);
    return *this;
  }
  friend SymExpansion operator+(SymExpansion a, const SymExpansion& b) { return a += b; }
  friend SymExpansion operator-(SymExpansion a, const SymExpansion& b) { return a -= b; }

  SymExpansion map_coefficients(const std::function<LaurentQT(const LaurentQT&)>& fn) const {
    SymExpansion r(degree_, basis_);
    for (const auto& [l, c] : terms_) r.add(l, fn(c));
    return r;
  }

  friend bool operator==(const SymExpansion&, const SymExpansion&) = default;

 private:
  int degree_;
  Basis basis_;
  Terms terms_;
};

inline SymExpansion single(Basis basis, const Partition& lambda, const LaurentQT& c = LaurentQT(1)) {
  SymExpansion f(lambda.size(), basis);
  f.add(lambda, c);
  return f;
}

inline Json to_json(const SymExpansion& f) {
  Json terms = Json::array();
  for (const auto& [l, c] : f.terms()) terms.push_back({to_json(l), to_json(c)});
  return {{"degree", f.degree()}, {"basis", basis_name(f.basis())}, {"terms", terms}};
}

// Polynomial in k commuting variables x_1..x_k.
class VarPoly {
 public:
  using Exponent = std::vector<int>;

  explicit VarPoly(int k) : k_(k) { require(k >= 0, "VarPoly: negative variable count"); }

  static VarPoly constant(int k, const LaurentQT& c) {
    VarPoly p(k);
    p.add(Exponent(k, 0), c);
    return p;
  }

  int variables() const { return k_; }
  const std::map<Exponent, LaurentQT>& terms() const { return terms_; }

  LaurentQT coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? LaurentQT() : it->second;
  }

  void add(const Exponent& e, const LaurentQT& c) {
    require(static_cast<int>(e.size()) == k_, "VarPoly: exponent length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  VarPoly& operator+=(const VarPoly& o) {
    require(o.k_ == k_, "VarPoly: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  friend VarPoly operator+(VarPoly a, const VarPoly& b) { return a += b; }

  friend VarPoly operator*(const VarPoly& a, const VarPoly& b) {
    require(a.k_ == b.k_, "VarPoly: variable count mismatch");
    VarPoly r(a.k_);
    Exponent e(a.k_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.k_; ++i) e[i] = ea[i] + eb[i];
        r.add(e, ca * cb);
      }
    return r;
  }

  friend bool operator==(const VarPoly&, const VarPoly&) = default;

 private:
  int k_;
  std::map<Exponent, LaurentQT> terms_;
};

// F_{n,S} in k variables: weakly increasing index chains, strict at S.
inline VarPoly expand_fundamental(int n, const std::set<int>& S, int k) {
  require(n >= 0 && k >= n, "expand_fundamental: need k >= n variables");
  for (int s : S) require(s >= 1 && s < n, "expand_fundamental: S must lie in [n-1]");
  VarPoly out(k);
  VarPoly::Exponent e(k, 0);
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos > n) {
      out.add(e, LaurentQT(1));
      return;
    }
    for (int i = lo; i <= k; ++i) {
      ++e[i - 1];
      rec(pos + 1, S.count(pos) ? i + 1 : i);
      --e[i - 1];
    }
  };
  rec(1, 1);
  return out;
}

inline SymExpansion varpoly_to_m(const VarPoly& p, int n) {
  const int k = p.variables();
  require(k >= n, "varpoly_to_m: need at least n variables");
  SymExpansion out(n, Basis::m);
  std::size_t covered = 0;
  for (const auto& lambda : partitions_of(n)) {
    auto e = lambda.padded(k);
    const LaurentQT c = p.coefficient(e);
    auto rev = e;
    std::reverse(rev.begin(), rev.end());
    require(p.coefficient(rev) == c, "varpoly_to_m: input is not symmetric at " + lambda.to_string());
    out.add(lambda, c);
    if (!c.is_zero()) {
      // number of distinct rearrangements of e
      std::map<int, int> mult;
      for (int x : e) ++mult[x];
      Integer r = factorial(k);
      for (auto [v, m] : mult) r /= factorial(m);
      covered += static_cast<std::size_t>(r);
    }
  }
  for (const auto& [e, c] : p.terms()) {
    int deg = 0;
    for (int x : e) deg += x;
    require(deg == n, "varpoly_to_m: input is not homogeneous of degree n");
  }
  require(covered == p.terms().size(), "varpoly_to_m: input is not symmetric");
  return out;
}

namespace detail {

// SSYT of shape λ (skew-free) with content μ (any weak composition).
inline Integer kostka_rec(const std::vector<int>& lambda, const std::vector<int>& mu,
                          std::map<std::pair<std::vector<int>, std::vector<int>>, Integer>& memo) {
  int size = 0;
  for (int x : lambda) size += x;
  if (mu.empty()) return size == 0 ? 1 : 0;
  auto key = std::make_pair(lambda, mu);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  // the largest entry fills a horizontal strip of size mu.back()
  const int strip = mu.back();
  std::vector<int> rest(mu.begin(), mu.end() - 1);
  Integer total = 0;
  std::vector<int> shrunk(lambda.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == lambda.size()) {
      if (left == 0) {
        std::vector<int> t(shrunk);
        while (!t.empty() && t.back() == 0) t.pop_back();
        total += kostka_rec(t, rest, memo);
      }
      return;
    }
    const int next = i + 1 < lambda.size() ? lambda[i + 1] : 0;
    for (int r = 0; r <= std::min(left, lambda[i] - next); ++r) {
      shrunk[i] = lambda[i] - r;
      rec(i + 1, left - r);
    }
  };
  rec(0, strip);
  memo.emplace(std::move(key), total);
  return total;
}

// Nonnegative integer matrices with row sums `rows` and column sums `cols`.
inline Integer contingency_count(std::vector<int> rows, std::vector<int> cols) {
  if (rows.empty()) {
    for (int c : cols)
      if (c) return 0;
    return 1;
  }
  const int r = rows.back();
  rows.pop_back();
  Integer total = 0;
  std::function<void(std::size_t, int)> rec = [&](std::size_t j, int left) {
    if (j == cols.size()) {
      if (left == 0) total += contingency_count(rows, cols);
      return;
    }
    for (int v = 0; v <= std::min(left, cols[j]); ++v) {
      cols[j] -= v;
      rec(j + 1, left - v);
      cols[j] += v;
    }
  };
  rec(0, r);
  return total;
}

// Ways to send each part of λ to one variable so that variable j gets μ_j.
inline Integer part_assignments(const std::vector<int>& parts, std::vector<int> bins, std::size_t i = 0) {
  if (i == parts.size()) {
    for (int b : bins)
      if (b) return 0;
    return 1;
  }
  Integer total = 0;
  for (auto& b : bins)
    if (b >= parts[i]) {
      b -= parts[i];
      total += part_assignments(parts, bins, i + 1);
      b += parts[i];
    }
  return total;
}

// Integer transition matrices at one degree, indexed by `parts` (lex
// decreasing).
struct DegreeTables {
  int n = 0;
  std::vector<Partition> parts;
  std::map<Partition, std::size_t> index;
  std::vector<std::vector<Integer>> kostka;  // s_λ = Σ K[λ][μ] m_μ
  std::vector<std::vector<Integer>> h_to_m;  // h_λ = Σ N[λ][μ] m_μ
  std::vector<std::vector<Integer>> p_to_m;  // p_λ = Σ R[λ][μ] m_μ
  std::vector<std::vector<Integer>> p_to_h;  // p_λ = Σ H[λ][μ] h_μ
  std::vector<Integer> z;
};

inline std::map<std::pair<std::vector<int>, std::vector<int>>, Integer>& kostka_memo() {
  thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> memo;
  return memo;
}

}  // namespace detail

inline Integer kostka(const Partition& lambda, const std::vector<int>& content) {
  for (int c : content) require(c >= 0, "kostka: negative content");
  return detail::kostka_rec(lambda.parts(), content, detail::kostka_memo());
}

inline Integer kostka(const Partition& lambda, const Partition& mu) { return kostka(lambda, mu.parts()); }

// s_λ(1^b): hook-content formula.
inline Integer schur_principal_special(const Partition& lambda, int b) {
  require(b >= 0, "schur_principal_special: negative b");
  const Partition conj = conjugate(lambda);
  Integer num = 1, den = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) {
      const int content = j - i;
      const int hook = (lambda.part(i) - j) + (conj.part(j) - i) + 1;
      if (b + content <= 0) return 0;
      num *= b + content;
      den *= hook;
    }
  ensure(num % den == 0, "schur_principal_special: hook-content quotient is not integral");
  return num / den;
}

namespace detail {

inline std::unique_ptr<DegreeTables> build_tables(int n);

inline const DegreeTables& tables(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<DegreeTables>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = build_tables(n);
  return *slot;
}

inline std::unique_ptr<DegreeTables> build_tables(int n) {
  auto t = std::make_unique<DegreeTables>();
  t->n = n;
  t->parts = partitions_of(n);
  const std::size_t P = t->parts.size();
  for (std::size_t i = 0; i < P; ++i) t->index[t->parts[i]] = i;
  auto square = [P] { return std::vector<std::vector<Integer>>(P, std::vector<Integer>(P, 0)); };
  t->kostka = square();
  t->h_to_m = square();
  t->p_to_m = square();
  t->p_to_h = square();
  std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> memo;
  for (std::size_t i = 0; i < P; ++i) {
    t->z.push_back(z_lambda(t->parts[i]));
    for (std::size_t j = 0; j < P; ++j) {
      const auto& l = t->parts[i].parts();
      const auto& m = t->parts[j].parts();
      t->kostka[i][j] = kostka_rec(l, m, memo);
      t->h_to_m[i][j] = contingency_count(l, m);
      t->p_to_m[i][j] = part_assignments(l, m);
    }
  }
  // p -> h: express p_λ in m, peel to s (lex greatest first), then s -> h
  // (lex smallest first).
  for (std::size_t i = 0; i < P; ++i) {
    std::vector<Integer> c = t->p_to_m[i];
    std::vector<Integer> s(P, 0);
    for (std::size_t l = 0; l < P; ++l) {
      s[l] = c[l];
      if (s[l] != 0)
        for (std::size_t j = l; j < P; ++j) c[j] -= s[l] * t->kostka[l][j];
    }
    for (std::size_t l = P; l-- > 0;) {
      const Integer d = s[l];
      t->p_to_h[i][l] = d;
      if (d != 0)
        for (std::size_t v = 0; v <= l; ++v) s[v] -= d * t->kostka[v][l];
    }
    for (const auto& x : s) ensure(x == 0, "build_tables: s -> h peel left a remainder");
  }
  return t;
}

inline LaurentQT scale(const LaurentQT& c, const Integer& k) {
  if (k == 0) return LaurentQT();
  if (k == 1) return c;
  LaurentQT r;
  for (const auto& [e, v] : c.terms()) r.add_term(e.first, e.second, v * k);
  return r;
}

inline SymExpansion to_m(const SymExpansion& f) {
  const int n = f.degree();
  if (f.basis() == Basis::m) return f;
  const auto& t = tables(n);
  SymExpansion out(n, Basis::m);
  if (f.basis() == Basis::p) {
    const Integer nf = factorial(n);
    for (const auto& [l, c] : f.terms()) {
      const std::size_t i = t.index.at(l);
      const Integer w = nf / t.z[i];
      for (std::size_t j = 0; j < t.parts.size(); ++j)
        if (t.p_to_m[i][j] != 0) out.add(t.parts[j], scale(c, t.p_to_m[i][j] * w));
    }
    return out.map_coefficients([&](const LaurentQT& c) { return c.divided_by(nf); });
  }
  const auto& M = f.basis() == Basis::h ? t.h_to_m : t.kostka;
  for (const auto& [l, c] : f.terms()) {
    const std::size_t i = t.index.at(l);
    for (std::size_t j = 0; j < t.parts.size(); ++j)
      if (M[i][j] != 0) out.add(t.parts[j], scale(c, M[i][j]));
  }
  return out;
}

inline SymExpansion m_to_s(const SymExpansion& f) {
  const auto& t = tables(f.degree());
  std::vector<LaurentQT> c(t.parts.size());
  for (const auto& [l, v] : f.terms()) c[t.index.at(l)] = v;
  SymExpansion out(f.degree(), Basis::s);
  for (std::size_t l = 0; l < t.parts.size(); ++l) {
    if (c[l].is_zero()) continue;
    const LaurentQT d = c[l];
    out.add(t.parts[l], d);
    for (std::size_t j = l; j < t.parts.size(); ++j)
      if (t.kostka[l][j] != 0) c[j] -= scale(d, t.kostka[l][j]);
  }
  return out;
}

inline SymExpansion s_to_h(const SymExpansion& f) {
  const auto& t = tables(f.degree());
  std::vector<LaurentQT> c(t.parts.size());
  for (const auto& [l, v] : f.terms()) c[t.index.at(l)] = v;
  SymExpansion out(f.degree(), Basis::h);
  for (std::size_t l = t.parts.size(); l-- > 0;) {
    if (c[l].is_zero()) continue;
    const LaurentQT d = c[l];
    out.add(t.parts[l], d);
    for (std::size_t v = 0; v <= l; ++v)
      if (t.kostka[v][l] != 0) c[v] -= scale(d, t.kostka[v][l]);
  }
  return out;
}

// Coefficient on p_λ/z_λ is <f, p_λ> = Σ_μ c_μ H[λ][μ] with f = Σ c_μ m_μ.
inline SymExpansion m_to_p(const SymExpansion& f) {
  const auto& t = tables(f.degree());
  SymExpansion out(f.degree(), Basis::p);
  for (std::size_t l = 0; l < t.parts.size(); ++l) {
    LaurentQT acc;
    for (const auto& [mu, c] : f.terms()) {
      const Integer& H = t.p_to_h[l][t.index.at(mu)];
      if (H != 0) acc += scale(c, H);
    }
    out.add(t.parts[l], acc);
  }
  return out;
}

}  // namespace detail

inline SymExpansion basis_convert(const SymExpansion& f, Basis target) {
  if (f.basis() == target) return f;
  const SymExpansion m = detail::to_m(f);
  switch (target) {
    case Basis::m: return m;
    case Basis::s: return detail::m_to_s(m);
    case Basis::h: return detail::s_to_h(detail::m_to_s(m));
    case Basis::p: return detail::m_to_p(m);
  }
  return m;
}

// Every partition of n is a key of the degree tables; exposed for callers
// that want the same ordering.
inline const std::vector<Partition>& partitions_lex_desc(int n) { return detail::tables(n).parts; }

inline LaurentQT hall_inner(const SymExpansion& f, const SymExpansion& g) {
  require(f.degree() == g.degree(), "hall_inner: degree mismatch");
  const SymExpansion fm = basis_convert(f, Basis::m);
  const SymExpansion gh = basis_convert(g, Basis::h);
  LaurentQT acc;
  for (const auto& [l, c] : fm.terms()) {
    const LaurentQT d = gh.coefficient(l);
    if (!d.is_zero()) acc += c * d;
  }
  return acc;
}

// p_k -> (-1)^{k-1} p_k, so p_λ picks up (-1)^{n - ℓ(λ)}.
inline SymExpansion omega(const SymExpansion& f) {
  const SymExpansion p = basis_convert(f, Basis::p);
  SymExpansion out(f.degree(), Basis::p);
  for (const auto& [l, c] : p.terms()) out.add(l, (f.degree() - l.length()) % 2 ? -c : c);
  return basis_convert(out, f.basis());
}

// Σ_S c_S F_{n,S} collected into m: F_{n,S} has coefficient 1 on m_λ
// exactly when S is contained in the partial sums of λ.
inline SymExpansion fundamental_to_m(int n, const std::map<std::set<int>, LaurentQT>& fcoeffs) {
  SymExpansion out(n, Basis::m);
  for (const auto& lambda : partitions_of(n)) {
    std::set<int> sums;
    int s = 0;
    for (int i = 0; i + 1 < lambda.length(); ++i) sums.insert(s += lambda.part(i + 1));
    LaurentQT acc;
    for (const auto& [S, c] : fcoeffs)
      if (std::includes(sums.begin(), sums.end(), S.begin(), S.end())) acc += c;
    out.add(lambda, acc);
  }
  return out;
}

}  // namespace ratcat
