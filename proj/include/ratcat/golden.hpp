#pragma once

// The reference tables: Cat_{a,b}(q,t) matrices and the Schur-coefficient
// matrices of PF_{a,b}(q,t), rendered in the plain matrix format.

#include <string>
#include <utility>
#include <vector>

#include "frob.hpp"

namespace ratcat {

struct GoldenTable {
  std::string name;  // file stem, e.g. cat_3_5 or pf_5_8_s3-2
  std::string text;
};

inline const std::vector<Frame>& golden_cat_frames() {
  static const std::vector<Frame> frames{{2, 3}, {3, 2}, {3, 5}, {5, 3}, {3, 7},
                                         {7, 3}, {4, 7}, {7, 4}, {5, 8}, {8, 5}};
  return frames;
}

inline const std::vector<Frame>& golden_pf_frames() {
  static const std::vector<Frame> frames{{2, 3}, {2, 5}, {3, 5}, {5, 3}, {4, 7}, {7, 4}, {5, 8}};
  return frames;
}

inline std::string partition_tag(const Partition& p) {
  std::string s;
  for (int x : p.parts()) s += (s.empty() ? "" : "-") + std::to_string(x);
  return s;
}

inline std::vector<GoldenTable> golden_tables(int threads = 1) {
  std::vector<GoldenTable> out;
  auto stem = [](const char* kind, Frame f) {
    return std::string(kind) + "_" + std::to_string(f.a) + "_" + std::to_string(f.b);
  };
  for (Frame f : golden_cat_frames()) out.push_back({stem("cat", f), render_matrix(to_matrix(cat_qt(f, threads)))});
  for (Frame f : golden_pf_frames()) {
    const SymExpansion series = pf_qt(f, threads);
    for (const auto& [lambda, c] : series.terms())
      out.push_back({stem("pf", f) + "_s" + partition_tag(lambda), render_matrix(to_matrix(c))});
  }
  return out;
}

}  // namespace ratcat
