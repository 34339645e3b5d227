#pragma once

// Parking functions as labeled Dyck paths: classical (n×n) and rational
// (a,b) frames, preference vectors, dinv, diagonal reading words, zeta and
// area', and the Bézout stretch behind the rational dinv.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "paths.hpp"

namespace ratcat {

// Column (x coordinate) of every north step, bottom to top.
inline std::vector<int> north_columns(const StepWord& w) {
  std::vector<int> cols;
  int x = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == Step::E) ++x;
    else cols.push_back(x);
  }
  return cols;
}

class ParkingFunction {
 public:
  // Labels are listed bottom to top, one per north step. In multiset mode
  // repeated labels are allowed and may sit next to each other in a column.
  ParkingFunction(DyckPath path, std::vector<int> labels, bool multiset = false)
      : path_(std::move(path)), labels_(std::move(labels)), multiset_(multiset) {
    const int a = path_.frame().a;
    require(static_cast<int>(labels_.size()) == a, "ParkingFunction: need one label per north step");
    const auto cols = north_columns(path_.word());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      require(labels_[i] >= 1, "ParkingFunction: labels must be positive");
      if (i > 0 && cols[i] == cols[i - 1]) {
        const bool ok = multiset_ ? labels_[i - 1] <= labels_[i] : labels_[i - 1] < labels_[i];
        require(ok, "ParkingFunction: labels must increase up each column");
      }
    }
    if (!multiset_) {
      std::vector<int> sorted(labels_);
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < a; ++i)
        require(sorted[i] == i + 1, "ParkingFunction: labels must be a permutation of 1..a");
    }
  }

  const DyckPath& path() const { return path_; }
  const StepWord& word() const { return path_.word(); }
  Frame frame() const { return path_.frame(); }
  const std::vector<int>& labels() const { return labels_; }
  bool multiset() const { return multiset_; }

  friend bool operator==(const ParkingFunction&, const ParkingFunction&) = default;

 private:
  DyckPath path_;
  std::vector<int> labels_;
  bool multiset_ = false;
};

inline int area(const ParkingFunction& p) { return area(p.path()); }

inline Json to_json(const ParkingFunction& p) {
  return {{"word", p.word().str()}, {"labels", p.labels()}, {"frame", {p.frame().a, p.frame().b}}};
}

inline bool is_parking_vector(const std::vector<int>& v) {
  std::vector<int> s(v);
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] < 1 || s[i] > static_cast<int>(i) + 1) return false;
  return true;
}

// Car j prefers spot v[j-1]; run i of the path carries the cars preferring i.
inline ParkingFunction from_preference_vector(const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  for (int x : v) require(x >= 1 && x <= n, "from_preference_vector: preference outside [n]");
  require(is_parking_vector(v), "from_preference_vector: not a parking function (some car cannot park)");
  std::string w;
  std::vector<int> labels;
  for (int spot = 1; spot <= n; ++spot) {
    for (int car = 1; car <= n; ++car)
      if (v[car - 1] == spot) {
        w.push_back('N');
        labels.push_back(car);
      }
    w.push_back('E');
  }
  return ParkingFunction(DyckPath(StepWord(w), Frame{n, n}), std::move(labels));
}

inline std::vector<int> to_preference_vector(const ParkingFunction& p) {
  require(p.frame().a == p.frame().b && !p.multiset(), "to_preference_vector: needs a classical parking function");
  std::vector<int> v(p.labels().size());
  const auto cols = north_columns(p.word());
  for (std::size_t i = 0; i < cols.size(); ++i) v[p.labels()[i] - 1] = cols[i] + 1;
  return v;
}

// Every column-increasing labeling of d by 1..a, in lexicographic order of
// the bottom-to-top label sequence.
inline std::vector<std::vector<int>> labelings(const DyckPath& d) {
  const auto cols = north_columns(d.word());
  const int a = static_cast<int>(cols.size());
  std::vector<int> run_sizes;
  for (int i = 0; i < a; ++i) {
    if (i == 0 || cols[i] != cols[i - 1]) run_sizes.push_back(0);
    ++run_sizes.back();
  }
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(a + 1, false);
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t run, int left, int from) {
    if (run == run_sizes.size()) {
      out.push_back(cur);
      return;
    }
    if (left == 0) {
      if (run + 1 == run_sizes.size()) {
        out.push_back(cur);
      } else {
        rec(run + 1, run_sizes[run + 1], 1);
      }
      return;
    }
    for (int v = from; v <= a; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur.push_back(v);
      rec(run, left - 1, v + 1);
      cur.pop_back();
      used[v] = false;
    }
  };
  if (run_sizes.empty()) out.emplace_back();
  else rec(0, run_sizes[0], 1);
  return out;
}

inline void for_each_pf(Frame f, const std::function<void(const ParkingFunction&)>& fn) {
  for_each_dyck(f, [&](const DyckPath& d) {
    for (auto& l : labelings(d)) fn(ParkingFunction(d, std::move(l)));
  });
}

inline std::vector<ParkingFunction> enumerate_pf(Frame f) {
  std::vector<ParkingFunction> out;
  for_each_pf(f, [&](const ParkingFunction& p) { out.push_back(p); });
  return out;
}

struct GP {
  std::vector<int> g;
  std::vector<int> p;
};

inline GP gp_vectors(const ParkingFunction& pf) {
  require(pf.frame().a == pf.frame().b, "gp_vectors: needs a classical (n x n) frame");
  GP r;
  const auto cols = north_columns(pf.word());
  for (std::size_t i = 0; i < cols.size(); ++i) r.g.push_back(static_cast<int>(i) - cols[i]);
  r.p = pf.labels();
  return r;
}

inline int dinv_classical(const ParkingFunction& pf) {
  const auto [g, p] = gp_vectors(pf);
  int d = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if ((g[i] == g[j] && p[i] < p[j]) || (g[i] == g[j] + 1 && p[i] > p[j])) ++d;
  return d;
}

// Higher diagonals first; within a diagonal from northeast to southwest.
inline std::vector<int> drw_classical(const ParkingFunction& pf) {
  const auto [g, p] = gp_vectors(pf);
  std::vector<std::size_t> rows(g.size());
  std::iota(rows.begin(), rows.end(), 0);
  std::sort(rows.begin(), rows.end(), [&](std::size_t x, std::size_t y) {
    return g[x] != g[y] ? g[x] > g[y] : x > y;
  });
  std::vector<int> w;
  for (auto r : rows) w.push_back(p[r]);
  return w;
}

enum class ReadOrder { increasing, decreasing };

// North-step labels sorted by the level of the step's bottom endpoint.
inline std::vector<int> drw_rational(const ParkingFunction& pf, ReadOrder order = ReadOrder::increasing) {
  const Frame f = pf.frame();
  require(f.a > 0 && f.b > 0 && f.coprime(), "drw_rational: frame must be coprime");
  const auto l = levels(pf.word(), f);
  std::vector<std::pair<int, int>> steps;
  for (std::size_t i = 0, k = 0; i < pf.word().size(); ++i)
    if (pf.word()[i] == Step::N) steps.emplace_back(l[i], pf.labels()[k++]);
  std::sort(steps.begin(), steps.end());
  if (order == ReadOrder::decreasing) std::reverse(steps.begin(), steps.end());
  std::vector<int> w;
  for (auto& s : steps) w.push_back(s.second);
  return w;
}

inline bool is_permutation_word(const std::vector<int>& w) {
  std::vector<int> s(w);
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != static_cast<int>(i) + 1) return false;
  return true;
}

// j is an inverse descent when j+1 sits to the left of j.
inline std::set<int> ides(const std::vector<int>& w) {
  require(is_permutation_word(w), "ides: word must be a permutation of 1..n");
  std::vector<int> pos(w.size() + 1);
  for (std::size_t i = 0; i < w.size(); ++i) pos[w[i]] = static_cast<int>(i);
  std::set<int> s;
  for (int j = 1; j < static_cast<int>(w.size()); ++j)
    if (pos[j + 1] < pos[j]) s.insert(j);
  return s;
}

// Dyck path plus a permutation on the diagonal; square (column c, row r)
// carries the pair (word[c-1], word[r-1]).
class RootNotationPF {
 public:
  RootNotationPF(DyckPath path, std::vector<int> diagonal_word)
      : path_(std::move(path)), word_(std::move(diagonal_word)) {
    const Frame f = path_.frame();
    require(f.a == f.b, "RootNotationPF: needs a classical frame");
    require(static_cast<int>(word_.size()) == f.a && is_permutation_word(word_),
            "RootNotationPF: diagonal word must be a permutation of 1..n");
    for (auto [c, r] : left_turns())
      require(word_[c - 1] < word_[r - 1], "RootNotationPF: left-turn square with a decreasing pair");
  }

  const DyckPath& path() const { return path_; }
  const std::vector<int>& diagonal_word() const { return word_; }

  // Squares (column, row), 1-based, sitting in an east-then-north corner.
  std::vector<std::pair<int, int>> left_turns() const {
    std::vector<std::pair<int, int>> out;
    const StepWord& w = path_.word();
    int x = 0, y = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == Step::E) {
        ++x;
        if (i + 1 < w.size() && w[i + 1] == Step::N) out.emplace_back(x, y + 1);
      } else {
        ++y;
      }
    }
    return out;
  }

  friend bool operator==(const RootNotationPF&, const RootNotationPF&) = default;

 private:
  DyckPath path_;
  std::vector<int> word_;
};

inline RootNotationPF zeta(const ParkingFunction& pf) {
  require(pf.frame().a == pf.frame().b && !pf.multiset(), "zeta: needs a classical parking function");
  const int n = pf.frame().a;
  auto word = drw_classical(pf);
  std::reverse(word.begin(), word.end());
  std::vector<int> pos(n + 1);
  for (int i = 0; i < n; ++i) pos[word[i]] = i + 1;

  // Corner points (j, k-1) for each label pair stacked in one column.
  std::vector<std::pair<int, int>> corners;
  const auto cols = north_columns(pf.word());
  for (int i = 1; i < n; ++i)
    if (cols[i] == cols[i - 1]) corners.emplace_back(pos[pf.labels()[i - 1]], pos[pf.labels()[i]] - 1);
  std::sort(corners.begin(), corners.end());

  std::string w;
  int x = 0, y = 0;
  for (auto [cx, cy] : corners) {
    ensure(cx > x && cy > y, "zeta: valley squares are nested");
    w.append(static_cast<std::size_t>(cy - y), 'N');
    w.append(static_cast<std::size_t>(cx - x), 'E');
    x = cx;
    y = cy;
  }
  w.append(static_cast<std::size_t>(n - y), 'N');
  w.append(static_cast<std::size_t>(n - x), 'E');
  StepWord sw(std::move(w));
  ensure(is_dyck(sw, Frame{n, n}), "zeta: valley squares admit no Dyck path");
  RootNotationPF r(DyckPath(std::move(sw), Frame{n, n}), std::move(word));
  ensure(r.left_turns().size() == corners.size(), "zeta: path has extra left turns");
  return r;
}

// Area cells whose (column label, row label) pair increases.
inline int area_prime(const RootNotationPF& r) {
  const auto& l = r.diagonal_word();
  const auto cols = north_columns(r.path().word());
  int count = 0;
  for (int row = 1; row <= static_cast<int>(cols.size()); ++row)
    for (int c = cols[row - 1] + 1; c <= row - 1; ++c)
      if (l[c - 1] < l[row - 1]) ++count;
  return count;
}

struct Bezout {
  int x;
  int y;
  friend bool operator==(const Bezout&, const Bezout&) = default;
};

// x*a + y*b = 1 with -b < x <= 0 and 0 <= y < a.
inline Bezout bezout_xy(int a, int b) {
  require(a >= 2 && b >= 1 && std::gcd(a, b) == 1, "bezout_xy: needs coprime a >= 2, b >= 1");
  for (int x = 0; x > -b; --x) {
    const long rest = 1 - static_cast<long>(x) * a;
    if (rest % b == 0) {
      const int y = static_cast<int>(rest / b);
      if (0 <= y && y < a) return {x, y};
    }
  }
  ensure(false, "bezout_xy: no solution in the window");
  return {};
}

// P -> P' (north steps repeated |x| times, east steps y times, labels
// copied onto adjacent north steps) -> P'' by dropping the final east step.
inline ParkingFunction stretch_to_ppp(const ParkingFunction& pf) {
  const Frame f = pf.frame();
  require(!pf.multiset(), "stretch_to_ppp: input must be a standard parking function");
  const auto [x, y] = bezout_xy(f.a, f.b);
  const int nx = -x;
  std::string w;
  std::vector<int> labels;
  for (std::size_t i = 0, k = 0; i < pf.word().size(); ++i) {
    if (pf.word()[i] == Step::N) {
      w.append(static_cast<std::size_t>(nx), 'N');
      labels.insert(labels.end(), static_cast<std::size_t>(nx), pf.labels()[k++]);
    } else {
      w.append(static_cast<std::size_t>(y), 'E');
    }
  }
  ensure(!w.empty() && w.back() == 'E', "stretch_to_ppp: stretched path does not end in E");
  w.pop_back();
  const int n = nx * f.a;
  ensure(static_cast<long>(y) * f.b - 1 == n, "stretch_to_ppp: |x|a != yb - 1");
  StepWord sw(std::move(w));
  ensure(is_dyck(sw, Frame{n, n}), "stretch_to_ppp: P'' is not a classical Dyck path");
  return ParkingFunction(DyckPath(std::move(sw), Frame{n, n}), std::move(labels), true);
}

// max over labelings of D of dinv(P''); memoized per path.
class MaxStretchedDinv {
 public:
  int operator()(const DyckPath& d) {
    auto it = memo_.find(d.word().str());
    if (it != memo_.end()) return it->second;
    int best = 0;
    for (auto& l : labelings(d)) best = std::max(best, dinv_classical(stretch_to_ppp(ParkingFunction(d, l))));
    memo_.emplace(d.word().str(), best);
    return best;
  }

 private:
  std::map<std::string, int> memo_;
};

struct RationalDinvParts {
  int dinv_ppp;  // dinv(P'')
  int d;         // area(sweep(D))
  int m;         // max of dinv(P'') over labelings of D
  int dinv;
};

inline RationalDinvParts dinv_rational_parts(const ParkingFunction& pf, MaxStretchedDinv& max_dinv) {
  const Frame f = pf.frame();
  require(f.a > 0 && f.b > 0 && f.coprime(), "dinv_rational: frame must be coprime");
  require(!pf.multiset(), "dinv_rational: input must be a standard parking function");
  if (f.a == 1) return {0, 0, 0, 0};
  RationalDinvParts r{};
  r.dinv_ppp = dinv_classical(stretch_to_ppp(pf));
  r.d = area(sweep(pf.path()));
  r.m = max_dinv(pf.path());
  r.dinv = r.dinv_ppp + r.d - r.m;
  ensure(0 <= r.dinv && r.dinv <= r.d, "dinv_rational: value outside [0, d(P)]");
  return r;
}

inline int dinv_rational(const ParkingFunction& pf, MaxStretchedDinv& max_dinv) {
  return dinv_rational_parts(pf, max_dinv).dinv;
}

inline int dinv_rational(const ParkingFunction& pf) {
  MaxStretchedDinv memo;
  return dinv_rational(pf, memo);
}

// σ acts by relabeling ℓ -> sigma[ℓ-1] and re-sorting each column.
inline ParkingFunction act(const std::vector<int>& sigma, const ParkingFunction& pf) {
  require(!pf.multiset() && static_cast<int>(sigma.size()) == pf.frame().a && is_permutation_word(sigma),
          "act: sigma must be a permutation of 1..a");
  std::vector<int> labels;
  const auto cols = north_columns(pf.word());
  for (std::size_t i = 0; i < cols.size();) {
    std::size_t j = i;
    std::vector<int> column;
    while (j < cols.size() && cols[j] == cols[i]) column.push_back(sigma[pf.labels()[j++] - 1]);
    std::sort(column.begin(), column.end());
    labels.insert(labels.end(), column.begin(), column.end());
    i = j;
  }
  return ParkingFunction(pf.path(), std::move(labels));
}

// A permutation of 1..n with cycle type λ: consecutive blocks, each a cycle.
inline std::vector<int> permutation_of_type(const std::vector<int>& parts) {
  std::vector<int> sigma;
  int start = 1;
  for (int len : parts) {
    for (int i = 0; i < len; ++i) sigma.push_back(start + (i + 1) % len);
    start += len;
  }
  return sigma;
}

}  // namespace ratcat
