#pragma once

// Frobenius characteristics of PF_{a,b} (closed forms and the generating
// function route), rational Schröder numbers, Cat_{a,b}(q,t), the graded
// series PF_{a,b}(q,t), the classical shuffle side, and q,t-matrix output.

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "parallel.hpp"
#include "paths.hpp"
#include "pf.hpp"
#include "poly.hpp"
#include "ptn.hpp"
#include "symf.hpp"

namespace ratcat {

namespace detail {
inline void require_coprime(Frame f, const char* who) {
  require(f.a > 0 && f.b > 0 && f.coprime(), std::string(who) + ": frame must be coprime");
}
}  // namespace detail

// coefficient of h_λ: (1/b) · b! / ((b-ℓ)! m_1! m_2! ...)
inline SymExpansion frob_h(Frame f) {
  detail::require_coprime(f, "frob_h");
  SymExpansion out(f.a, Basis::h);
  for (const auto& lambda : partitions_of(f.a)) {
    if (lambda.length() > f.b) continue;
    Integer den = factorial(f.b - lambda.length());
    for (int j = 1; j <= f.a; ++j) den *= factorial(lambda.multiplicity(j));
    const Integer num = factorial(f.b);
    ensure(num % den == 0, "frob_h: multinomial not integral");
    const Integer multinomial = num / den;
    ensure(multinomial % f.b == 0, "frob_h: multinomial not divisible by b at " + lambda.to_string());
    out.add(lambda, LaurentQT(multinomial / f.b));
  }
  return out;
}

// coefficient of p_λ/z_λ: b^{ℓ(λ)-1}
inline SymExpansion frob_p(Frame f) {
  detail::require_coprime(f, "frob_p");
  SymExpansion out(f.a, Basis::p);
  for (const auto& lambda : partitions_of(f.a)) out.add(lambda, LaurentQT(Integer(boost::multiprecision::pow(Integer(f.b), lambda.length() - 1))));
  return out;
}

// coefficient of s_λ: s_λ(1^b)/b
inline SymExpansion frob_s(Frame f) {
  detail::require_coprime(f, "frob_s");
  SymExpansion out(f.a, Basis::s);
  for (const auto& lambda : partitions_of(f.a)) {
    const Integer v = schur_principal_special(lambda, f.b);
    ensure(v % f.b == 0, "frob_s: s_lambda(1^b) not divisible by b at " + lambda.to_string());
    out.add(lambda, LaurentQT(v / f.b));
  }
  return out;
}

// Coefficient of u^a in (1/b) H(u)^b, computed in a variables.
inline SymExpansion frob_via_genfunc(Frame f) {
  detail::require_coprime(f, "frob_via_genfunc");
  const int k = f.a;
  std::vector<VarPoly> h;  // h_i(x_1..x_k), i = 0..a
  for (int i = 0; i <= f.a; ++i) h.push_back(expand_fundamental(i, {}, std::max(k, i)));
  std::vector<VarPoly> power(f.a + 1, VarPoly(k));
  power[0] = VarPoly::constant(k, LaurentQT(1));
  for (int step = 0; step < f.b; ++step) {
    std::vector<VarPoly> next(f.a + 1, VarPoly(k));
    for (int d = 0; d <= f.a; ++d)
      for (int i = 0; i <= d; ++i)
        if (!power[d - i].terms().empty()) next[d] += power[d - i] * h[i];
    power = std::move(next);
  }
  const SymExpansion m = varpoly_to_m(power[f.a], f.a);
  return m.map_coefficients([&](const LaurentQT& c) { return c.divided_by(f.b); });
}

inline Integer schroeder(Frame f, int k) {
  detail::require_coprime(f, "schroeder");
  require(0 <= k && k <= f.a - 1, "schroeder: k must lie in [0, a-1]");
  const Integer num = binomial(f.a - 1, k) * binomial(f.b + k, f.a);
  ensure(num % f.b == 0, "schroeder: quotient not integral");
  return num / f.b;
}

inline Partition hook(int a, int k) {
  std::vector<int> parts{k + 1};
  parts.insert(parts.end(), static_cast<std::size_t>(a - k - 1), 1);
  return Partition(parts);
}

inline LaurentQT cat_qt(Frame f, int threads = 1) {
  detail::require_coprime(f, "cat_qt");
  const auto paths = enumerate_dyck(f);
  return parallel_reduce(
      paths, threads, LaurentQT(),
      [](LaurentQT& acc, const DyckPath& d) { acc.add_term(area(d), area(sweep(d)), 1); },
      [](LaurentQT& acc, const LaurentQT& part) { acc += part; });
}

using FundamentalSeries = std::map<std::set<int>, LaurentQT>;

namespace detail {
inline void merge_series(FundamentalSeries& acc, const FundamentalSeries& part) {
  for (const auto& [S, c] : part) {
    auto& slot = acc[S];
    slot += c;
    if (slot.is_zero()) acc.erase(S);
  }
}
}  // namespace detail

// Σ_P q^area t^dinv F_{a, IDes(P)} as a map IDes -> q,t-coefficient.
inline FundamentalSeries pf_qt_fundamental(Frame f, int threads = 1, ReadOrder order = ReadOrder::increasing) {
  detail::require_coprime(f, "pf_qt");
  const auto paths = enumerate_dyck(f);
  return parallel_reduce(
      paths, threads, FundamentalSeries{},
      [&](FundamentalSeries& acc, const DyckPath& d) {
        const int ar = area(d);
        MaxStretchedDinv max_dinv;
        for (auto& l : labelings(d)) {
          const ParkingFunction pf(d, std::move(l));
          acc[ides(drw_rational(pf, order))].add_term(ar, dinv_rational(pf, max_dinv), 1);
        }
      },
      detail::merge_series);
}

inline bool has_negative_coefficient(const LaurentQT& p) {
  for (const auto& [e, c] : p.terms())
    if (c < 0) return true;
  return false;
}

inline SymExpansion pf_qt(Frame f, int threads = 1, ReadOrder order = ReadOrder::increasing) {
  const auto series = pf_qt_fundamental(f, threads, order);
  SymExpansion s = basis_convert(fundamental_to_m(f.a, series), Basis::s);
  for (const auto& [lambda, c] : s.terms())
    ensure(!has_negative_coefficient(c), "pf_qt: negative Schur coefficient at " + lambda.to_string());
  return s;
}

// Σ_P q^area t^dinv over PF_{a,b}, summed directly.
inline LaurentQT hilb(Frame f, int threads = 1) {
  detail::require_coprime(f, "hilb");
  const auto paths = enumerate_dyck(f);
  return parallel_reduce(
      paths, threads, LaurentQT(),
      [](LaurentQT& acc, const DyckPath& d) {
        const int ar = area(d);
        MaxStretchedDinv max_dinv;
        for (auto& l : labelings(d)) acc.add_term(ar, dinv_rational(ParkingFunction(d, std::move(l)), max_dinv), 1);
      },
      [](LaurentQT& acc, const LaurentQT& part) { acc += part; });
}

// Σ_{P in PF_n} q^area t^dinv F_{n, IDes(drw(P))}, classical conventions.
inline SymExpansion classical_shuffle_side(int n, int threads = 1) {
  require(n >= 1, "classical_shuffle_side: n must be positive");
  const auto paths = enumerate_dyck(Frame{n, n});
  const auto series = parallel_reduce(
      paths, threads, FundamentalSeries{},
      [](FundamentalSeries& acc, const DyckPath& d) {
        const int ar = area(d);
        for (auto& l : labelings(d)) {
          const ParkingFunction pf(d, std::move(l));
          acc[ides(drw_classical(pf))].add_term(ar, dinv_classical(pf), 1);
        }
      },
      detail::merge_series);
  return basis_convert(fundamental_to_m(n, series), Basis::s);
}

// Σ_D q^area t^dinv over unlabeled classical Dyck paths, dinv(D) counting
// pairs i<j with g_i - g_j in {0, 1}.
inline LaurentQT classical_cat_qt(int n) {
  LaurentQT acc;
  for (const auto& d : enumerate_dyck(Frame{n, n})) {
    const auto cols = north_columns(d.word());
    int dinv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int diff = (i - cols[i]) - (j - cols[j]);
        if (diff == 0 || diff == 1) ++dinv;
      }
    acc.add_term(area(d), dinv, 1);
  }
  return acc;
}

// Standard Young tableaux count, hook-length formula.
inline Integer f_lambda(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  Integer den = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) den *= (lambda.part(i) - j) + (conj.part(j) - i) + 1;
  const Integer num = factorial(lambda.size());
  ensure(num % den == 0, "f_lambda: hook-length quotient not integral");
  return num / den;
}

// Rows are q exponents, columns t exponents, both from 0 to the maximum.
struct QTMatrix {
  std::vector<std::vector<Integer>> cells;

  std::size_t rows() const { return cells.size(); }
  std::size_t cols() const { return cells.empty() ? 0 : cells.front().size(); }
  friend bool operator==(const QTMatrix&, const QTMatrix&) = default;
};

inline QTMatrix to_matrix(const LaurentQT& p) {
  require(!p.has_negative_exponent(), "to_matrix: polynomial has a negative exponent");
  if (p.is_zero()) return QTMatrix{{{Integer(0)}}};
  QTMatrix m;
  m.cells.assign(static_cast<std::size_t>(p.max_q_exponent()) + 1,
                 std::vector<Integer>(static_cast<std::size_t>(p.max_t_exponent()) + 1, Integer(0)));
  for (const auto& [e, c] : p.terms()) m.cells[e.first][e.second] = c;
  return m;
}

enum class MatrixStyle { plain, tex };

// Plain: columns right-aligned, single-space separated, "." for zero.
// TeX: an array environment with " & " separators.
inline std::string render_matrix(const QTMatrix& m, MatrixStyle style = MatrixStyle::plain) {
  std::vector<std::vector<std::string>> text(m.rows());
  std::vector<std::size_t> width(m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      text[i].push_back(m.cells[i][j] == 0 ? "." : m.cells[i][j].str());
      width[j] = std::max(width[j], text[i][j].size());
    }
  std::ostringstream out;
  if (style == MatrixStyle::tex) {
    out << "\\left[\\begin{array}{" << std::string(m.cols(), 'r') << "}\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " & " : "") << text[i][j];
      out << (i + 1 < m.rows() ? " \\\\\n" : "\n");
    }
    out << "\\end{array}\\right]\n";
    return out.str();
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << std::string(width[j] - text[i][j].size(), ' ') << text[i][j];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ratcat
