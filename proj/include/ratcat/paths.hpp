#pragma once

// Lattice words over {N, E}, levels, rational Dyck paths and the statistics
// and maps defined on them (area, vertical runs, cyclic shift, sweep, maj).

#include <algorithm>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"

namespace ratcat {

enum class Step : char { N = 'N', E = 'E' };

// Target rectangle: `a` north steps and `b` east steps, i.e. a path from
// (0,0) to (b,a) against the diagonal y = (a/b) x.
struct Frame {
  int a = 0;
  int b = 0;

  bool coprime() const { return std::gcd(a, b) == 1; }
  friend bool operator==(const Frame&, const Frame&) = default;
};

class StepWord {
 public:
  StepWord() = default;
  explicit StepWord(std::string steps) : steps_(std::move(steps)) {
    for (char c : steps_) require(c == 'N' || c == 'E', "StepWord: letters must be N or E");
  }

  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  Step operator[](std::size_t i) const { return static_cast<Step>(steps_[i]); }
  const std::string& str() const { return steps_; }

  int north_count() const { return static_cast<int>(std::count(steps_.begin(), steps_.end(), 'N')); }
  int east_count() const { return static_cast<int>(steps_.size()) - north_count(); }

  friend bool operator==(const StepWord&, const StepWord&) = default;
  friend auto operator<=>(const StepWord&, const StepWord&) = default;

 private:
  std::string steps_;
};

// l_0 = 0, +b after N, -a after E; l_i is the level b*y - a*x of the i-th
// lattice point.
inline std::vector<int> levels(const StepWord& w, Frame f) {
  std::vector<int> l(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) l[i + 1] = l[i] + (w[i] == Step::N ? f.b : -f.a);
  return l;
}

inline bool is_dyck(const StepWord& w, Frame f) {
  require(w.north_count() == f.a && w.east_count() == f.b,
          "is_dyck: word " + w.str() + " does not have the frame's letter counts");
  const auto l = levels(w, f);
  return *std::min_element(l.begin(), l.end()) >= 0;
}

class DyckPath {
 public:
  DyckPath(StepWord word, Frame frame) : word_(std::move(word)), frame_(frame) {
    require(frame_.a >= 0 && frame_.b >= 0, "DyckPath: negative frame");
    require(is_dyck(word_, frame_), "DyckPath: " + word_.str() + " goes below the diagonal");
  }

  const StepWord& word() const { return word_; }
  Frame frame() const { return frame_; }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;

 private:
  StepWord word_;
  Frame frame_;
};

// Streams every (a,b)-Dyck path beginning with `prefix`, in lexicographic
// order with N < E. Disjoint prefixes give disjoint shards.
inline void for_each_dyck(Frame f, const std::function<void(const DyckPath&)>& fn,
                          std::string_view prefix = {}) {
  std::string buf(prefix);
  int n = 0, e = 0, level = 0;
  for (char c : buf) {
    require(c == 'N' || c == 'E', "for_each_dyck: bad prefix");
    if (c == 'N') ++n, level += f.b;
    else ++e, level -= f.a;
    if (level < 0 || n > f.a || e > f.b) return;
  }
  std::function<void(int, int, int)> rec = [&](int nn, int ee, int lv) {
    if (nn == f.a && ee == f.b) {
      fn(DyckPath(StepWord(buf), f));
      return;
    }
    if (nn < f.a) {
      buf.push_back('N');
      rec(nn + 1, ee, lv + f.b);
      buf.pop_back();
    }
    if (ee < f.b && lv - f.a >= 0) {
      buf.push_back('E');
      rec(nn, ee + 1, lv - f.a);
      buf.pop_back();
    }
  };
  rec(n, e, level);
}

inline std::vector<DyckPath> enumerate_dyck(Frame f) {
  std::vector<DyckPath> out;
  for_each_dyck(f, [&](const DyckPath& d) { out.push_back(d); });
  return out;
}

// Cells (column i, row j), 1 <= i <= b, 1 <= j <= a, right of the path in
// their row and lying weakly above the diagonal: a*i <= b*(j-1).
inline int area(const DyckPath& d) {
  const Frame f = d.frame();
  int total = 0, east = 0, row = 0;
  for (std::size_t k = 0; k < d.word().size(); ++k) {
    if (d.word()[k] == Step::E) {
      ++east;
      continue;
    }
    ++row;
    // columns east+1 .. floor(b*(row-1)/a)
    const int last = f.a == 0 ? 0 : (f.b * (row - 1)) / f.a;
    total += std::max(0, std::min(last, f.b) - east);
  }
  return total;
}

// m_i = number of vertical runs N^i E (preceded by E or at the start),
// indexed 0..#N.
inline std::vector<int> run_structure(const StepWord& w) {
  require(!w.empty() && w[w.size() - 1] == Step::E, "run_structure: word must end in E");
  std::vector<int> m(w.north_count() + 1, 0);
  int run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == Step::N) {
      ++run;
    } else {
      ++m[run];
      run = 0;
    }
  }
  return m;
}

inline Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

// Number of (a,b)-Dyck paths with m_i vertical runs of length i:
// (b-1)! / prod m_i!.
inline Integer count_by_runs(Frame f, std::span<const int> m) {
  require(f.a > 0 && f.b > 0 && f.coprime(), "count_by_runs: frame must be coprime");
  long weighted = 0, total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    require(m[i] >= 0, "count_by_runs: negative multiplicity");
    weighted += static_cast<long>(i) * m[i];
    total += m[i];
  }
  require(weighted == f.a && total == f.b, "count_by_runs: run multiplicities do not fit the frame");
  Integer denom = 1;
  for (int mi : m) denom *= factorial(mi);
  Integer num = factorial(f.b - 1);
  ensure(num % denom == 0, "count_by_runs: inexact multinomial");
  return num / denom;
}

inline StepWord cyclic_shift(const StepWord& w, long k) {
  if (w.empty()) return w;
  const long n = static_cast<long>(w.size());
  const long s = ((k % n) + n) % n;
  std::string r = w.str().substr(s) + w.str().substr(0, s);
  return StepWord(std::move(r));
}

// Sorts the steps by their wand labels (the level at each step's start).
// Coprimality makes the labels distinct; the result being Dyck is a claimed
// theorem and is checked.
inline DyckPath sweep(const DyckPath& d) {
  const Frame f = d.frame();
  require(f.a > 0 && f.b > 0 && f.coprime(), "sweep: frame must be coprime");
  const auto l = levels(d.word(), f);
  std::vector<std::size_t> order(d.word().size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return l[x] < l[y]; });
  std::string out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(static_cast<char>(d.word()[i]));
  StepWord swept(std::move(out));
  ensure(is_dyck(swept, f), "sweep: image of " + d.word().str() + " is not a Dyck path");
  return DyckPath(std::move(swept), f);
}

inline bool is_dyck_word01(std::string_view w) {
  int depth = 0;
  for (char c : w) {
    if (c != '0' && c != '1') return false;
    depth += c == '0' ? 1 : -1;
    if (depth < 0) return false;
  }
  return depth == 0;
}

// Sum of positions i (1-based) with w_i > w_{i+1}.
inline int maj(std::string_view w) {
  require(is_dyck_word01(w), "maj: not a Dyck word over {0,1}");
  int s = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) s += static_cast<int>(i + 1);
  return s;
}

inline std::vector<std::string> enumerate_dyck_words01(int n) {
  std::vector<std::string> out;
  for_each_dyck(Frame{n, n}, [&](const DyckPath& d) {
    std::string s = d.word().str();
    for (char& c : s) c = c == 'N' ? '0' : '1';
    out.push_back(std::move(s));
  });
  return out;
}

}  // namespace ratcat
