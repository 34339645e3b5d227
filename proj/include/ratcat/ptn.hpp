#pragma once

// Integer partitions, boxes and triangles, frontiers, arm/leg statistics,
// h+/h-, minimum level, and the cyclic-shift orbit structure on R(a,b).

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "paths.hpp"
#include "poly.hpp"

namespace ratcat {

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      require(parts_[i] >= 0, "Partition: negative part");
      require(i == 0 || parts_[i] <= parts_[i - 1], "Partition: parts must weakly decrease");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  bool empty() const { return parts_.empty(); }

  // 1-based, zero past the last nonzero part.
  int part(int j) const { return j >= 1 && j <= length() ? parts_[j - 1] : 0; }

  // m_j(λ)
  int multiplicity(int j) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), j)); }

  bool fits_box(int rows, int cols) const { return length() <= rows && (empty() || parts_[0] <= cols); }

  std::vector<int> padded(int rows) const {
    std::vector<int> v(parts_);
    v.resize(std::max<std::size_t>(v.size(), static_cast<std::size_t>(rows)), 0);
    return v;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic on the part sequence; on partitions of one n this is the
  // usual lex order (a refinement of dominance).
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Partition conjugate(const Partition& p) {
  std::vector<int> c(p.empty() ? 0 : p.part(1), 0);
  for (int r : p.parts())
    for (int j = 0; j < r; ++j) ++c[j];
  return Partition(std::move(c));
}

inline Integer z_lambda(const Partition& p) {
  Integer z = 1;
  std::map<int, int> mult;
  for (int r : p.parts()) ++mult[r];
  for (auto [j, m] : mult) {
    for (int i = 0; i < m; ++i) z *= j;
    z *= factorial(m);
  }
  return z;
}

// Partitions of n with parts <= max_part and at most max_len parts, in
// lexicographically decreasing order.
inline std::vector<Partition> partitions_of(int n, int max_part = -1, int max_len = -1) {
  require(n >= 0, "partitions_of: negative n");
  if (max_part < 0) max_part = n;
  if (max_len < 0) max_len = n;
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int cap) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int k = std::min(left, cap); k >= 1; --k) {
      cur.push_back(k);
      self(self, left - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, max_part);
  return out;
}

// All μ in the s-row, r-column box, ordered by size then lex-decreasing.
inline std::vector<Partition> enumerate_box(int s, int r) {
  require(s >= 0 && r >= 0, "enumerate_box: negative box");
  std::vector<Partition> out;
  for (int n = 0; n <= s * r; ++n)
    for (auto& p : partitions_of(n, r, s)) out.push_back(std::move(p));
  return out;
}

inline bool in_triangle(const Partition& mu, Frame f) {
  if (!mu.fits_box(f.a, f.b)) return false;
  for (int j = 1; j <= f.a; ++j)
    if (static_cast<long>(f.a) * mu.part(j) > static_cast<long>(f.b) * (f.a - j)) return false;
  return true;
}

inline std::vector<Partition> enumerate_triangle(Frame f) {
  std::vector<Partition> out;
  for (auto& p : enumerate_box(f.a, f.b))
    if (in_triangle(p, f)) out.push_back(std::move(p));
  return out;
}

// Boundary of μ (top-left justified in the a×b box) from (0,0) to (b,a).
inline StepWord frontier(const Partition& mu, Frame f) {
  require(mu.fits_box(f.a, f.b), "frontier: " + mu.to_string() + " does not fit the box");
  std::string w;
  int x = 0;
  for (int j = f.a; j >= 1; --j) {
    w.append(static_cast<std::size_t>(mu.part(j) - x), 'E');
    x = mu.part(j);
    w.push_back('N');
  }
  w.append(static_cast<std::size_t>(f.b - x), 'E');
  return StepWord(std::move(w));
}

inline Partition partition_of_frontier(const StepWord& w, Frame f) {
  require(w.north_count() == f.a && w.east_count() == f.b, "partition_of_frontier: wrong letter counts");
  std::vector<int> rows_from_bottom;
  int x = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == Step::E) ++x;
    else rows_from_bottom.push_back(x);
  }
  std::reverse(rows_from_bottom.begin(), rows_from_bottom.end());
  return Partition(std::move(rows_from_bottom));
}

struct ArmLeg {
  int arm;
  int leg;
  friend bool operator==(const ArmLeg&, const ArmLeg&) = default;
};

// Cell addressed as (row from top, column from left), 1-based.
inline ArmLeg arm_leg(const Partition& mu, int row, int col) {
  require(row >= 1 && col >= 1 && col <= mu.part(row), "arm_leg: cell outside the diagram");
  int below = 0;
  for (int j = row + 1; mu.part(j) >= col; ++j) ++below;
  return {mu.part(row) - col, below};
}

enum class Sign { plus, minus };

namespace detail {
template <class Pred>
int count_cells(const Partition& mu, Pred pred) {
  const Partition conj = conjugate(mu);
  int n = 0;
  for (int row = 1; row <= mu.length(); ++row)
    for (int col = 1; col <= mu.part(row); ++col)
      if (pred(mu.part(row) - col, conj.part(col) - row)) ++n;
  return n;
}
}  // namespace detail

inline int h_plus(const Partition& mu, Frame f) {
  return detail::count_cells(mu, [&](int arm, int leg) {
    const long v = static_cast<long>(f.a) * arm - static_cast<long>(f.b) * leg;
    return -f.a < v && v <= f.b;
  });
}

inline int h_minus(const Partition& mu, Frame f) {
  return detail::count_cells(mu, [&](int arm, int leg) {
    const long v = static_cast<long>(f.a) * arm - static_cast<long>(f.b) * leg;
    return -f.a <= v && v < f.b;
  });
}

inline int h_stat(const Partition& mu, Frame f, Sign s) { return s == Sign::plus ? h_plus(mu, f) : h_minus(mu, f); }

inline int min_level(const Partition& mu, Frame f) {
  const auto l = levels(frontier(mu, f), f);
  return *std::min_element(l.begin(), l.end());
}

// Pair count over east-before-north step pairs of the frontier.
inline int h_via_levels(const Partition& mu, Frame f, Sign s) {
  const StepWord w = frontier(mu, f);
  const auto l = levels(w, f);
  const int n = static_cast<int>(w.size()), window = f.a + f.b;
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    if (w[i - 1] != Step::E) continue;
    for (int j = i + 1; j <= n; ++j) {
      if (w[j - 1] != Step::N) continue;
      const int d = s == Sign::plus ? l[i - 1] - l[j - 1] : l[j] - l[i];
      if (1 <= d && d <= window) ++count;
    }
  }
  return count;
}

inline Partition cshift_partition(const Partition& mu, Frame f) {
  return partition_of_frontier(cyclic_shift(frontier(mu, f), 1), f);
}

// The two predicted values of h+(C(μ)) - h+(μ): the step-pair window count
// and the plain level window count.
struct ShiftDelta {
  int by_steps;
  int by_levels;
};

inline ShiftDelta cshift_delta_formulas(const Partition& mu, Frame f) {
  const StepWord w = frontier(mu, f);
  const auto l = levels(w, f);
  const int n = static_cast<int>(w.size());
  ShiftDelta d{0, 0};
  if (n == 0) return d;
  if (w[0] == Step::N) {
    for (int k = 1; k <= n; ++k) {
      if (w[k - 1] == Step::E && 1 <= l[k - 1] && l[k - 1] <= f.a + f.b) ++d.by_steps;
      if (1 <= l[k - 1] && l[k - 1] <= f.b) ++d.by_levels;
    }
  } else {
    for (int k = 1; k <= n; ++k) {
      if (w[k - 1] == Step::N && 1 <= -l[k - 1] && -l[k - 1] <= f.a + f.b) --d.by_steps;
      if (1 <= -l[k - 1] && -l[k - 1] <= f.a) --d.by_levels;
    }
  }
  return d;
}

struct Orbit {
  Partition representative;
  std::vector<Partition> members;  // members[i] = C^i(representative)
};

inline std::vector<Orbit> orbit_decompose(Frame f) {
  require(f.a > 0 && f.b > 0 && f.coprime(), "orbit_decompose: frame must be coprime");
  std::vector<Orbit> orbits;
  std::set<Partition> seen;
  std::size_t covered = 0;
  for (const auto& rep : enumerate_triangle(f)) {
    Orbit o{rep, {}};
    Partition cur = rep;
    for (int i = 0; i < f.a + f.b; ++i) {
      ensure(seen.insert(cur).second, "orbit_decompose: orbits of the cyclic shift overlap at " + cur.to_string());
      ensure(i == 0 || !in_triangle(cur, f), "orbit_decompose: second triangle member " + cur.to_string());
      ensure(rep.size() == cur.size() + min_level(cur, f),
             "orbit_decompose: |mu0| != |mu| + ml(mu) at " + cur.to_string());
      o.members.push_back(cur);
      cur = cshift_partition(cur, f);
    }
    ensure(cur == rep, "orbit_decompose: orbit of " + rep.to_string() + " does not close after a+b shifts");
    covered += o.members.size();
    orbits.push_back(std::move(o));
  }
  ensure(covered == static_cast<std::size_t>(binomial(f.a + f.b, f.a)),
         "orbit_decompose: orbits do not cover the box");
  return orbits;
}

// h+ over the orbit of μ0 takes the values h+(μ0)+k, k = 0..a+b-1, with k
// the rank of -ml(member) among the frontier levels of μ0.
inline bool lem3_check(const Partition& mu0, Frame f) {
  require(f.a > 0 && f.b > 0 && f.coprime(), "lem3_check: frame must be coprime");
  require(in_triangle(mu0, f), "lem3_check: representative must lie in the triangle");
  auto lv = levels(frontier(mu0, f), f);
  lv.pop_back();
  std::sort(lv.begin(), lv.end());
  const int base = h_plus(mu0, f);
  Partition cur = mu0;
  std::vector<bool> hit(lv.size(), false);
  for (int i = 0; i < f.a + f.b; ++i) {
    const int ml = -min_level(cur, f);
    const auto it = std::lower_bound(lv.begin(), lv.end(), ml);
    if (it == lv.end() || *it != ml) return false;
    const auto k = static_cast<std::size_t>(it - lv.begin());
    if (h_plus(cur, f) - base != static_cast<int>(k) || hit[k]) return false;
    hit[k] = true;
    cur = cshift_partition(cur, f);
  }
  return true;
}

}  // namespace ratcat
