#pragma once

// Exact sparse Laurent polynomials in two variables q, t with
// arbitrary-precision integer coefficients, plus the q-analogues
// ([n]_q, q-binomials, rational q-Catalan numbers) built on them.

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "errors.hpp"

namespace ratcat {

using Integer = boost::multiprecision::cpp_int;
using Json = nlohmann::ordered_json;

class LaurentQT {
 public:
  // (q exponent, t exponent); the map's lexicographic order is the term order
  // used by exact division.
  using Exponent = std::pair<int, int>;
  using TermMap = std::map<Exponent, Integer>;

  LaurentQT() = default;
  LaurentQT(int c) { add_term(0, 0, c); }  // NOLINT: constants convert implicitly
  LaurentQT(const Integer& c) { add_term(0, 0, c); }  // NOLINT

  static LaurentQT monomial(int q_exp, int t_exp, const Integer& c = 1) {
    LaurentQT p;
    p.add_term(q_exp, t_exp, c);
    return p;
  }
  static LaurentQT q(int e = 1) { return monomial(e, 0); }
  static LaurentQT t(int e = 1) { return monomial(0, e); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Integer coefficient(int q_exp, int t_exp) const {
    auto it = terms_.find({q_exp, t_exp});
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(int q_exp, int t_exp, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({q_exp, t_exp}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentQT& operator+=(const LaurentQT& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
  }
  LaurentQT& operator-=(const LaurentQT& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
  }
  LaurentQT& operator*=(const LaurentQT& o) { return *this = *this * o; }

  friend LaurentQT operator+(LaurentQT a, const LaurentQT& b) { return a += b; }
  friend LaurentQT operator-(LaurentQT a, const LaurentQT& b) { return a -= b; }
  friend LaurentQT operator-(const LaurentQT& a) {
    LaurentQT r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend LaurentQT operator*(const LaurentQT& a, const LaurentQT& b) {
    LaurentQT r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
  }
  friend bool operator==(const LaurentQT&, const LaurentQT&) = default;

  // Exact division by an integer scalar; any coefficient not divisible is a
  // contract violation.
  LaurentQT divided_by(const Integer& d) const {
    require(d != 0, "LaurentQT: division by zero scalar");
    LaurentQT r;
    for (const auto& [e, c] : terms_) {
      ensure(c % d == 0, "LaurentQT: inexact scalar division");
      r.terms_.emplace(e, c / d);
    }
    return r;
  }

  Integer evaluate_at_one() const {
    Integer s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  LaurentQT swap_q_t() const {
    LaurentQT r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.second, e.first}, c);
    return r;
  }

  // t -> q^{t_as_q_power}, then multiply by q^{q_shift}. The result has no t.
  LaurentQT specialize_t(int t_as_q_power, int q_shift) const {
    LaurentQT r;
    for (const auto& [e, c] : terms_)
      r.add_term(e.first + t_as_q_power * e.second + q_shift, 0, c);
    return r;
  }

  bool has_negative_exponent() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return kv.first.first < 0 || kv.first.second < 0; });
  }

  int max_q_exponent() const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first || e.first > m) m = e.first;
      first = false;
    }
    return m;
  }
  int max_t_exponent() const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first || e.second > m) m = e.second;
      first = false;
    }
    return m;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Integer mag = c < 0 ? Integer(-c) : c;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      const bool bare = e.first == 0 && e.second == 0;
      if (mag != 1 || bare) os << mag;
      auto var = [&](char v, int k, bool need_star) {
        if (k == 0) return;
        if (need_star) os << "*";
        os << v;
        if (k != 1) os << "^" << k;
      };
      var('q', e.first, mag != 1);
      var('t', e.second, mag != 1 || e.first != 0);
    }
    return os.str();
  }

 private:
  TermMap terms_;
};

// Quotient of a Laurent polynomial division, or a ContractViolation when the
// remainder is nonzero. Leading terms are eliminated in (q, t) lexicographic
// order; since that order is compatible with multiplication, every term of a
// genuine quotient lies at or above lexmin(num) - lexmin(den), which bounds
// the loop.
inline LaurentQT exact_divide(const LaurentQT& num, const LaurentQT& den) {
  require(!den.is_zero(), "exact_divide: division by zero polynomial");
  if (num.is_zero()) return {};
  const auto& [dlead, dcoef] = *den.terms().rbegin();
  const auto dlow = den.terms().begin()->first;
  const auto nlow = num.terms().begin()->first;
  const LaurentQT::Exponent floor{nlow.first - dlow.first, nlow.second - dlow.second};

  LaurentQT rem = num;
  LaurentQT quot;
  while (!rem.is_zero()) {
    const auto& [rlead, rcoef] = *rem.terms().rbegin();
    const LaurentQT::Exponent qe{rlead.first - dlead.first, rlead.second - dlead.second};
    ensure(!(qe < floor), "exact_divide: nonzero remainder");
    ensure(rcoef % dcoef == 0, "exact_divide: nonzero remainder (coefficient)");
    LaurentQT step = LaurentQT::monomial(qe.first, qe.second, rcoef / dcoef);
    quot += step;
    rem -= step * den;
  }
  return quot;
}

inline LaurentQT q_int(int n) {
  require(n >= 0, "q_int: n must be nonnegative");
  LaurentQT r;
  for (int i = 0; i < n; ++i) r.add_term(i, 0, 1);
  return r;
}

inline LaurentQT q_factorial(int n) {
  LaurentQT r = 1;
  for (int j = 1; j <= n; ++j) r *= q_int(j);
  return r;
}

inline LaurentQT q_binomial(int n, int k) {
  require(n >= 0 && k >= 0 && k <= n, "q_binomial: need 0 <= k <= n");
  return exact_divide(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

namespace detail {
// q-count of partitions with at most `rows` parts, each at most `max_part`.
inline void box_partitions(int rows, int max_part, int size, LaurentQT& acc) {
  if (rows == 0) {
    acc.add_term(size, 0, 1);
    return;
  }
  for (int part = 0; part <= max_part; ++part)
    box_partitions(rows - 1, part, size + part, acc);
}
}  // namespace detail

// Sum of q^{|mu|} over partitions fitting in a box of s rows and r columns.
inline LaurentQT q_binomial_boxcount(int s, int r) {
  require(s >= 0 && r >= 0, "q_binomial_boxcount: negative box");
  LaurentQT acc;
  detail::box_partitions(s, r, 0, acc);
  return acc;
}

// [a+b]_q^{-1} * qbinom(a+b, a); polynomial only for coprime a, b.
inline LaurentQT rational_q_catalan(int a, int b) {
  require(a > 0 && b > 0, "rational_q_catalan: a, b must be positive");
  require(std::gcd(a, b) == 1, "rational_q_catalan: a and b must be coprime");
  return exact_divide(q_binomial(a + b, a), q_int(a + b));
}

// Wire form: [[q_exp, t_exp, "coefficient"], ...] ascending by (q_exp, t_exp).
inline Json to_json(const LaurentQT& p) {
  Json j = Json::array();
  for (const auto& [e, c] : p.terms()) j.push_back({e.first, e.second, c.str()});
  return j;
}

inline LaurentQT laurent_from_json(const Json& j) {
  require(j.is_array(), "LaurentQT JSON must be an array");
  LaurentQT p;
  for (const auto& term : j) {
    require(term.is_array() && term.size() == 3, "LaurentQT JSON term must be a triple");
    p.add_term(term[0].get<int>(), term[1].get<int>(), Integer(term[2].get<std::string>()));
  }
  return p;
}

}  // namespace ratcat
