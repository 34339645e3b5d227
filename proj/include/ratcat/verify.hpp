#pragma once

// One checker per claim. Each computes both sides independently and, on
// failure, records a witness that re-fails in isolation.

#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "frob.hpp"
#include "parallel.hpp"
#include "paths.hpp"
#include "pf.hpp"
#include "poly.hpp"
#include "ptn.hpp"
#include "symf.hpp"

namespace ratcat {

struct CheckReport {
  std::string claim;
  Json params = Json::object();
  bool pass = true;
  Json witness;  // null unless failed
  Json info;     // informational comparisons, never affect `pass`
  double wall_ms = 0;

  void fail(Json w) {
    if (pass) witness = std::move(w);
    pass = false;
  }

  Json to_json(bool with_time = true) const {
    Json j;
    j["claim"] = claim;
    j["params"] = params;
    j["pass"] = pass;
    if (!witness.is_null()) j["witness"] = witness;
    if (!info.is_null()) j["info"] = info;
    if (with_time) j["wall_ms"] = wall_ms;
    return j;
  }
};

namespace detail {

inline CheckReport timed(std::string claim, Json params, const std::function<void(CheckReport&)>& body) {
  CheckReport r;
  r.claim = std::move(claim);
  r.params = std::move(params);
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline Json frame_json(Frame f) { return Json{{"a", f.a}, {"b", f.b}}; }

inline Json mismatch(const LaurentQT& lhs, const LaurentQT& rhs) {
  return Json{{"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
}

}  // namespace detail

// Σ_{μ in triangle} q^{|μ|+h±(μ)} = Cat_{a,b}(q)
inline CheckReport check_conj_rat_qcat(Frame f) {
  return detail::timed("rat-qcat", detail::frame_json(f), [&](CheckReport& r) {
    require(f.a > 0 && f.b > 0 && f.coprime(), "rat-qcat: frame must be coprime");
    LaurentQT plus, minus;
    for (const auto& mu : enumerate_triangle(f)) {
      plus.add_term(mu.size() + h_plus(mu, f), 0, 1);
      minus.add_term(mu.size() + h_minus(mu, f), 0, 1);
    }
    const LaurentQT target = rational_q_catalan(f.a, f.b);
    if (plus != target) r.fail({{"variant", "h+"}, {"lhs", to_json(plus)}, {"rhs", to_json(target)}});
    if (minus != target) r.fail({{"variant", "h-"}, {"lhs", to_json(minus)}, {"rhs", to_json(target)}});
  });
}

// Σ_{μ in box} q^{|μ|+ml(μ)+h±(μ)} = [a+b choose a]_q; any a, b >= 0.
inline CheckReport check_conj_nonstd_qbin(Frame f) {
  return detail::timed("nonstd-qbin", detail::frame_json(f), [&](CheckReport& r) {
    require(f.a >= 0 && f.b >= 0, "nonstd-qbin: negative frame");
    LaurentQT plus, minus;
    for (const auto& mu : enumerate_box(f.a, f.b)) {
      const int base = mu.size() + min_level(mu, f);
      plus.add_term(base + h_plus(mu, f), 0, 1);
      minus.add_term(base + h_minus(mu, f), 0, 1);
    }
    const LaurentQT target = q_binomial(f.a + f.b, f.a);
    if (plus != target) r.fail({{"variant", "h+"}, {"lhs", to_json(plus)}, {"rhs", to_json(target)}});
    if (minus != target) r.fail({{"variant", "h-"}, {"lhs", to_json(minus)}, {"rhs", to_json(target)}});
  });
}

// Box sum of q^{|μ|+ml+h+} = [a+b]_q · triangle sum of q^{|μ0|+h+}, and the
// fine orbit statement on every orbit.
inline CheckReport check_thm_ratcat(Frame f) {
  return detail::timed("ratcat", detail::frame_json(f), [&](CheckReport& r) {
    require(f.a > 0 && f.b > 0 && f.coprime(), "ratcat: frame must be coprime");
    LaurentQT box, tri;
    for (const auto& mu : enumerate_box(f.a, f.b)) box.add_term(mu.size() + min_level(mu, f) + h_plus(mu, f), 0, 1);
    for (const auto& mu : enumerate_triangle(f)) tri.add_term(mu.size() + h_plus(mu, f), 0, 1);
    const LaurentQT rhs = q_int(f.a + f.b) * tri;
    if (box != rhs) r.fail(detail::mismatch(box, rhs));
    const auto orbits = orbit_decompose(f);
    for (const auto& o : orbits)
      if (!lem3_check(o.representative, f)) r.fail({{"orbit_of", to_json(o.representative)}});
    r.info = {{"orbits", orbits.size()}};
  });
}

inline CheckReport check_symmetry(Frame f, int threads = 1) {
  return detail::timed("ratqt-symm", detail::frame_json(f), [&](CheckReport& r) {
    const LaurentQT c = cat_qt(f, threads);
    if (c != c.swap_q_t()) r.fail(detail::mismatch(c, c.swap_q_t()));
  });
}

inline CheckReport check_specialization(Frame f, int threads = 1) {
  return detail::timed("qtcat-spec", detail::frame_json(f), [&](CheckReport& r) {
    const LaurentQT lhs = cat_qt(f, threads).specialize_t(-1, (f.a - 1) * (f.b - 1) / 2);
    const LaurentQT rhs = rational_q_catalan(f.a, f.b);
    if (lhs != rhs) r.fail(detail::mismatch(lhs, rhs));
  });
}

inline LaurentQT q_power(const LaurentQT& p, int k) {
  LaurentQT r(1);
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

// (1) q<->t symmetry of each Schur coefficient; (2) Hilbert series at
// t = 1/q; (3) hook coefficients at t = 1/q.
inline CheckReport check_conj_abpf(Frame f, int threads = 1) {
  return detail::timed("abpf", detail::frame_json(f), [&](CheckReport& r) {
    detail::require_coprime(f, "abpf");
    const int a = f.a, b = f.b;
    const SymExpansion pf = pf_qt(f, threads);

    for (const auto& [lambda, c] : pf.terms())
      if (c != c.swap_q_t())
        r.fail({{"part", 1}, {"lambda", to_json(lambda)}, {"coefficient", to_json(c)}});

    const LaurentQT h1 = hall_inner(pf, single(Basis::h, Partition(std::vector<int>(a, 1))));
    const LaurentQT lhs2 = h1.specialize_t(-1, (a - 1) * (b - 1) / 2);
    const LaurentQT rhs2 = q_power(q_int(b), a - 1);
    if (lhs2 != rhs2) r.fail({{"part", 2}, {"lhs", to_json(lhs2)}, {"rhs", to_json(rhs2)}});
    const LaurentQT direct = hilb(f, threads);
    if (direct != h1) r.fail({{"part", 2}, {"hilbert_direct", to_json(direct)}, {"hilbert_inner", to_json(h1)}});

    for (int k = 0; k <= a - 1; ++k) {
      const int twice = 2 * a * k - k - k * k + b * a - a * a - b + 1;
      ensure(twice % 2 == 0, "abpf: odd exponent in part 3");
      const LaurentQT lhs3 = pf.coefficient(hook(a, k)).specialize_t(-1, twice / 2);
      const LaurentQT num = b + k >= a ? q_binomial(a - 1, k) * q_binomial(b + k, a) : LaurentQT();
      const LaurentQT rhs3 = num.is_zero() ? LaurentQT() : exact_divide(num, q_int(b));
      if (lhs3 != rhs3) r.fail({{"part", 3}, {"k", k}, {"lhs", to_json(lhs3)}, {"rhs", to_json(rhs3)}});
    }

    // Not claimed: compare the sign and trivial Schur coefficients with
    // Cat_{a,b}(q,t).
    const LaurentQT cat = cat_qt(f, threads);
    r.info = {{"s_1^a_equals_cat", pf.coefficient(Partition(std::vector<int>(a, 1))) == cat},
              {"s_a_equals_cat", pf.coefficient(Partition{a}) == cat}};
  });
}

// Σ_{w in DW_n} q^maj(w) = Cat_{n,n+1}(q)
inline CheckReport check_macmahon(int n) {
  return detail::timed("macmahon", Json{{"n", n}}, [&](CheckReport& r) {
    LaurentQT lhs;
    for (const auto& w : enumerate_dyck_words01(n)) lhs.add_term(maj(w), 0, 1);
    const LaurentQT rhs = rational_q_catalan(n, n + 1);
    if (lhs != rhs) r.fail(detail::mismatch(lhs, rhs));
  });
}

inline CheckReport check_prop_multinomial(Frame f) {
  return detail::timed("multinomial", detail::frame_json(f), [&](CheckReport& r) {
    detail::require_coprime(f, "multinomial");
    std::map<std::vector<int>, Integer> counts;
    for (const auto& d : enumerate_dyck(f)) ++counts[run_structure(d.word())];
    // every run structure (m_0..m_a) with Σ i m_i = a, Σ m_i = b
    std::vector<int> m(f.a + 1, 0);
    Integer total = 0;
    std::function<void(int, int, int)> rec = [&](int i, int weight, int used) {
      if (i == 0) {
        if (f.b - used < 0 || weight != f.a) return;
        m[0] = f.b - used;
        const Integer expected = count_by_runs(f, m);
        const Integer seen = counts.count(m) ? counts[m] : Integer(0);
        if (expected != seen) r.fail({{"runs", m}, {"formula", expected.str()}, {"count", seen.str()}});
        total += seen;
        return;
      }
      for (int k = 0; weight + i * k <= f.a && used + k <= f.b; ++k) {
        m[i] = k;
        rec(i - 1, weight + i * k, used + k);
      }
      m[i] = 0;
    };
    rec(f.a, 0, 0);
    Integer all = 0;
    for (auto& [k, v] : counts) all += v;
    if (all != total) r.fail({{"unmatched_run_structures", Integer(all - total).str()}});
    r.info = {{"run_structures", counts.size()}};
  });
}

inline CheckReport check_bizley(Frame f) {
  return detail::timed("bizley", detail::frame_json(f), [&](CheckReport& r) {
    detail::require_coprime(f, "bizley");
    const Integer count = enumerate_dyck(f).size();
    const Integer formula = factorial(f.a + f.b - 1) / (factorial(f.a) * factorial(f.b));
    if (count != formula) r.fail({{"count", count.str()}, {"formula", formula.str()}});
    const Integer pfs = enumerate_pf(f).size();
    const Integer power = boost::multiprecision::pow(Integer(f.b), f.a - 1);
    if (pfs != power) r.fail({{"pf_count", pfs.str()}, {"b^(a-1)", power.str()}});
  });
}

inline CheckReport check_dinv_zeta(int n) {
  return detail::timed("dinv-zeta", Json{{"n", n}}, [&](CheckReport& r) {
    std::size_t count = 0;
    for_each_pf(Frame{n, n}, [&](const ParkingFunction& pf) {
      ++count;
      if (dinv_classical(pf) != area_prime(zeta(pf))) r.fail(to_json(pf));
    });
    r.info = {{"parking_functions", count}};
  });
}

inline CheckReport check_fixed_points(Frame f) {
  return detail::timed("fixed-points", detail::frame_json(f), [&](CheckReport& r) {
    detail::require_coprime(f, "fixed-points");
    const auto all = enumerate_pf(f);
    for (const auto& lambda : partitions_of(f.a)) {
      const auto sigma = permutation_of_type(lambda.parts());
      Integer fixed = 0;
      for (const auto& pf : all)
        if (act(sigma, pf) == pf) ++fixed;
      const Integer expected = boost::multiprecision::pow(Integer(f.b), lambda.length() - 1);
      if (fixed != expected) r.fail({{"cycle_type", to_json(lambda)}, {"fixed", fixed.str()}, {"expected", expected.str()}});
    }
  });
}

// h, p, s closed forms and the generating-function route agree; hook
// coefficients are Schröder numbers; Σ coeff·f^λ = b^{a-1}.
inline CheckReport check_frobenius(Frame f) {
  return detail::timed("frobenius", detail::frame_json(f), [&](CheckReport& r) {
    const SymExpansion s = frob_s(f);
    const SymExpansion routes[] = {frob_h(f), frob_p(f), frob_via_genfunc(f)};
    const char* names[] = {"h", "p", "genfunc"};
    for (int i = 0; i < 3; ++i)
      if (basis_convert(routes[i], Basis::s) != s)
        r.fail({{"route", names[i]}, {"expansion", to_json(basis_convert(routes[i], Basis::s))}, {"s", to_json(s)}});
    for (int k = 0; k < f.a; ++k)
      if (s.coefficient(hook(f.a, k)) != LaurentQT(schroeder(f, k)))
        r.fail({{"hook_k", k}, {"coefficient", to_json(s.coefficient(hook(f.a, k)))}});
    Integer dim = 0;
    for (const auto& [lambda, c] : s.terms()) dim += c.evaluate_at_one() * f_lambda(lambda);
    const Integer expected = boost::multiprecision::pow(Integer(f.b), f.a - 1);
    if (dim != expected) r.fail({{"dimension", dim.str()}, {"expected", expected.str()}});
  });
}

// Lemmas on the frontier levels, over the whole box (no coprimality).
inline CheckReport check_level_lemmas(Frame f) {
  return detail::timed("level-lemmas", detail::frame_json(f), [&](CheckReport& r) {
    for (const auto& mu : enumerate_box(f.a, f.b)) {
      if (partition_of_frontier(frontier(mu, f), f) != mu) r.fail({{"frontier_roundtrip", to_json(mu)}});
      if (h_via_levels(mu, f, Sign::plus) != h_plus(mu, f)) r.fail({{"h-via-labels", "+"}, {"mu", to_json(mu)}});
      if (h_via_levels(mu, f, Sign::minus) != h_minus(mu, f)) r.fail({{"h-via-labels", "-"}, {"mu", to_json(mu)}});
      if (f.a + f.b == 0) continue;
      const int delta = h_plus(cshift_partition(mu, f), f) - h_plus(mu, f);
      const auto d = cshift_delta_formulas(mu, f);
      if (d.by_steps != delta || d.by_levels != delta)
        r.fail({{"cyc-shift", to_json(mu)}, {"delta", delta}, {"by_steps", d.by_steps}, {"by_levels", d.by_levels}});
    }
  });
}

inline CheckReport check_sweep_injective(Frame f) {
  return detail::timed("sweep-injective", detail::frame_json(f), [&](CheckReport& r) {
    detail::require_coprime(f, "sweep-injective");
    std::map<std::string, std::string> image;
    for (const auto& d : enumerate_dyck(f)) {
      auto [it, fresh] = image.emplace(sweep(d).word().str(), d.word().str());
      if (!fresh) r.fail({{"image", it->first}, {"preimages", {it->second, d.word().str()}}});
    }
  });
}

struct SweepOptions {
  int range = 10;        // partition-statistic and Cat(q,t) checks: a, b <= range
  bool extended = false; // a, b <= 12 and every coprime a, b <= 9 for PF_{a,b}(q,t)
  int threads = 1;
};

inline std::vector<Frame> coprime_frames(int amax, int bmax) {
  std::vector<Frame> out;
  for (int a = 1; a <= amax; ++a)
    for (int b = 1; b <= bmax; ++b)
      if (std::gcd(a, b) == 1) out.push_back({a, b});
  return out;
}

inline std::vector<Frame> pf_frames(bool extended) {
  if (extended) return coprime_frames(9, 9);
  auto out = coprime_frames(4, 9);
  out.push_back({5, 8});
  out.push_back({7, 4});
  return out;
}

inline const std::vector<std::string>& claim_names() {
  static const std::vector<std::string> names{
      "rat-qcat",  "nonstd-qbin",    "ratcat",       "ratqt-symm", "qtcat-spec",   "abpf",
      "macmahon",  "multinomial",    "bizley",       "dinv-zeta",  "fixed-points", "frobenius",
      "level-lemmas", "sweep-injective"};
  return names;
}

// Reports in a fixed order: by claim, then by parameters. Independent
// checks run in parallel; the output order does not depend on threads.
inline std::vector<CheckReport> run_checks(const std::string& which, const SweepOptions& opt) {
  const int range = opt.extended ? std::max(opt.range, 12) : opt.range;
  std::vector<std::function<CheckReport()>> jobs;
  auto want = [&](const char* name) { return which == "all" || which == name; };
  bool known = which == "all";
  for (const auto& n : claim_names()) known = known || n == which;
  require(known, "verify: unknown claim '" + which + "'");

  // pf-heavy checks use the thread pool internally; the cheap sweeps
  // parallelize across parameters instead.
  const int inner = opt.threads;
  if (want("rat-qcat"))
    for (Frame f : coprime_frames(range, range)) jobs.push_back([f] { return check_conj_rat_qcat(f); });
  if (want("nonstd-qbin"))
    for (int a = 0; a <= range; ++a)
      for (int b = 0; b <= range; ++b) jobs.push_back([a, b] { return check_conj_nonstd_qbin(Frame{a, b}); });
  if (want("ratcat"))
    for (Frame f : coprime_frames(range, range)) jobs.push_back([f] { return check_thm_ratcat(f); });
  if (want("ratqt-symm"))
    for (Frame f : coprime_frames(range, range)) jobs.push_back([f] { return check_symmetry(f); });
  if (want("qtcat-spec"))
    for (Frame f : coprime_frames(range, range)) jobs.push_back([f] { return check_specialization(f); });
  if (want("macmahon"))
    for (int n = 1; n <= 6; ++n) jobs.push_back([n] { return check_macmahon(n); });
  if (want("multinomial"))
    for (Frame f : coprime_frames(6, 11)) jobs.push_back([f] { return check_prop_multinomial(f); });
  if (want("bizley"))
    for (Frame f : coprime_frames(5, 9)) jobs.push_back([f] { return check_bizley(f); });
  if (want("dinv-zeta"))
    for (int n = 1; n <= 6; ++n) jobs.push_back([n] { return check_dinv_zeta(n); });
  if (want("fixed-points"))
    for (Frame f : coprime_frames(5, 8)) jobs.push_back([f] { return check_fixed_points(f); });
  if (want("frobenius"))
    for (Frame f : coprime_frames(5, 8)) jobs.push_back([f] { return check_frobenius(f); });
  if (want("level-lemmas"))
    for (int a = 0; a <= 8; ++a)
      for (int b = 0; b <= 8; ++b) jobs.push_back([a, b] { return check_level_lemmas(Frame{a, b}); });
  if (want("sweep-injective"))
    for (Frame f : coprime_frames(13, 13))
      if (f.a + f.b <= 14) jobs.push_back([f] { return check_sweep_injective(f); });

  std::vector<std::size_t> idx(jobs.size());
  std::iota(idx.begin(), idx.end(), 0);
  using Results = std::vector<std::pair<std::size_t, CheckReport>>;
  Results results = parallel_reduce(
      idx, opt.threads, Results{}, [&](Results& acc, std::size_t i) { acc.emplace_back(i, jobs[i]()); },
      [](Results& acc, Results& part) {
        for (auto& x : part) acc.push_back(std::move(x));
      });

  // abpf last: it is the expensive one and parallelizes over Dyck paths.
  if (want("abpf"))
    for (Frame f : pf_frames(opt.extended)) results.emplace_back(results.size(), check_conj_abpf(f, inner));

  std::sort(results.begin(), results.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<CheckReport> out;
  for (auto& [i, rep] : results) out.push_back(std::move(rep));
  return out;
}

}  // namespace ratcat
