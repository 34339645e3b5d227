// ratcat: compute, render and verify rational Catalan / parking function
// objects from the command line.
//
// Exit codes: 0 ok, 1 a verification failed, 2 usage or domain error,
// 3 internal contract violation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ratcat/ratcat.hpp"

using namespace ratcat;

namespace {

enum class Format { json, matrix, tex };

struct Common {
  std::string format = "json";
  int threads = 0;
  std::string out;
};

Format parse_format(const std::string& s) {
  if (s == "matrix") return Format::matrix;
  if (s == "tex") return Format::tex;
  return Format::json;
}

std::string render_poly(const LaurentQT& p, Format fmt) {
  switch (fmt) {
    case Format::json: return to_json(p).dump() + "\n";
    case Format::matrix: return render_matrix(to_matrix(p), MatrixStyle::plain);
    case Format::tex: return render_matrix(to_matrix(p), MatrixStyle::tex);
  }
  return {};
}

std::string render_sym(const SymExpansion& f, Format fmt) {
  if (fmt == Format::json) return to_json(f).dump() + "\n";
  std::string s;
  for (const auto& [lambda, c] : f.terms()) {
    if (!s.empty()) s += "\n";
    s += basis_name(f.basis()) + lambda.to_string() + ":\n" + render_poly(c, fmt);
  }
  return s;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  require(static_cast<bool>(f), "cannot open output file " + c.out);
  f << text;
}

void add_common(CLI::App* cmd, Common& c, bool with_format = true) {
  if (with_format)
    cmd->add_option("--format", c.format, "json, matrix or tex")
        ->check(CLI::IsMember({"json", "matrix", "tex"}))
        ->capture_default_str();
  cmd->add_option("--threads", c.threads, "worker threads (0 = all cores)")->capture_default_str();
  cmd->add_option("--out", c.out, "write output to this file");
}

Frame frame_of(int a, int b) {
  require(a > 0 && b > 0, "a and b must be positive");
  return Frame{a, b};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational Catalan numbers and rational parking functions"};
  app.require_subcommand(1);

  Common common;
  int a = 0, b = 0;
  int verify_status = 0;

  auto* catqt = app.add_subcommand("catqt", "Cat_{a,b}(q,t) = sum of q^area t^area(sweep)");
  catqt->add_option("a", a)->required();
  catqt->add_option("b", b)->required();
  add_common(catqt, common);
  catqt->callback([&] { emit(common, render_poly(cat_qt(frame_of(a, b), common.threads), parse_format(common.format))); });

  std::string order = "increasing";
  auto* pfqt = app.add_subcommand("pfqt", "Schur expansion of PF_{a,b}(q,t)");
  pfqt->add_option("a", a)->required();
  pfqt->add_option("b", b)->required();
  pfqt->add_option("--order", order, "diagonal reading order")
      ->check(CLI::IsMember({"increasing", "decreasing"}))
      ->capture_default_str();
  add_common(pfqt, common);
  pfqt->callback([&] {
    const auto o = order == "decreasing" ? ReadOrder::decreasing : ReadOrder::increasing;
    emit(common, render_sym(pf_qt(frame_of(a, b), common.threads, o), parse_format(common.format)));
  });

  auto* qcat = app.add_subcommand("qcat", "rational q-Catalan number [a+b choose a]_q / [a+b]_q");
  qcat->add_option("a", a)->required();
  qcat->add_option("b", b)->required();
  add_common(qcat, common);
  qcat->callback([&] {
    const auto fmt = parse_format(common.format);
    const LaurentQT c = rational_q_catalan(a, b);
    emit(common, fmt == Format::json ? to_json(c).dump() + "\n" : c.to_string() + "\n");
  });

  std::string basis = "s";
  auto* frob = app.add_subcommand("frob", "ungraded Frobenius characteristic of PF_{a,b}");
  frob->add_option("a", a)->required();
  frob->add_option("b", b)->required();
  frob->add_option("--basis", basis, "h, p, s, or m (generating-function route)")
      ->check(CLI::IsMember({"h", "p", "s", "m"}))
      ->capture_default_str();
  add_common(frob, common);
  frob->callback([&] {
    const Frame f = frame_of(a, b);
    SymExpansion e = basis == "h" ? frob_h(f) : basis == "p" ? frob_p(f) : basis == "m" ? frob_via_genfunc(f) : frob_s(f);
    emit(common, render_sym(e, parse_format(common.format)));
  });

  std::string word;
  auto* sweep_cmd = app.add_subcommand("sweep", "apply the sweep map to an (a,b)-Dyck path");
  sweep_cmd->add_option("word", word, "path over {N,E}")->required();
  sweep_cmd->add_option("a", a)->required();
  sweep_cmd->add_option("b", b)->required();
  add_common(sweep_cmd, common, false);
  sweep_cmd->callback([&] {
    const DyckPath d(StepWord(word), frame_of(a, b));
    const DyckPath s = sweep(d);
    Json j;
    j["word"] = d.word().str();
    j["area"] = area(d);
    j["sweep"] = s.word().str();
    j["area_sweep"] = area(s);
    emit(common, j.dump() + "\n");
  });

  std::vector<int> prefs;
  auto* zeta_cmd = app.add_subcommand("zeta", "zeta map of a classical parking function (preference vector)");
  zeta_cmd->add_option("preferences", prefs, "a_1 ... a_n")->required();
  add_common(zeta_cmd, common, false);
  zeta_cmd->callback([&] {
    const ParkingFunction pf = from_preference_vector(prefs);
    const RootNotationPF r = zeta(pf);
    const auto drw = drw_classical(pf);
    Json j;
    j["parking_function"] = to_json(pf);
    j["area"] = area(pf);
    j["dinv"] = dinv_classical(pf);
    j["drw"] = drw;
    j["ides"] = ides(drw);
    j["zeta_path"] = r.path().word().str();
    j["diagonal_word"] = r.diagonal_word();
    j["area_prime"] = area_prime(r);
    emit(common, j.dump() + "\n");
  });

  std::string what;
  auto* enumerate = app.add_subcommand("enumerate", "list dyck paths, parking functions, box or triangle partitions");
  enumerate->add_option("what", what)->required()->check(CLI::IsMember({"dyck", "pf", "box", "triangle"}));
  enumerate->add_option("a", a)->required();
  enumerate->add_option("b", b)->required();
  add_common(enumerate, common, false);
  enumerate->callback([&] {
    std::ostringstream os;
    const Frame f{a, b};
    require(a >= 0 && b >= 0, "a and b must be nonnegative");
    if (what == "dyck") {
      for_each_dyck(f, [&](const DyckPath& d) { os << d.word().str() << '\n'; });
    } else if (what == "pf") {
      MaxStretchedDinv memo;
      for_each_pf(f, [&](const ParkingFunction& p) {
        Json j = to_json(p);
        j["area"] = area(p);
        if (f.a > 0 && f.b > 0 && f.coprime()) {
          j["dinv"] = dinv_rational(p, memo);
          j["drw"] = drw_rational(p);
        }
        os << j.dump() << '\n';
      });
    } else {
      const auto parts = what == "box" ? enumerate_box(a, b) : enumerate_triangle(f);
      for (const auto& mu : parts) os << to_json(mu).dump() << '\n';
    }
    emit(common, os.str());
  });

  std::string claim = "all";
  SweepOptions sweep_opt;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "run claim checkers; one JSON report per line");
  verify->add_option("claim", claim, "claim name or 'all'")->capture_default_str();
  verify->add_option("--range", sweep_opt.range, "largest a, b for the partition and Cat(q,t) sweeps")
      ->capture_default_str();
  verify->add_flag("--extended", sweep_opt.extended, "extend to a, b <= 12 and PF_{a,b} for coprime a, b <= 9 (slow)");
  verify->add_flag("--timing", timing, "include wall time in each report");
  add_common(verify, common, false);
  verify->callback([&] {
    require(sweep_opt.range >= 1, "--range must be positive");
    sweep_opt.threads = common.threads;
    std::ostringstream os;
    for (const auto& r : run_checks(claim, sweep_opt)) {
      os << r.to_json(timing).dump() << '\n';
      if (!r.pass) verify_status = 1;
    }
    emit(common, os.str());
  });

  std::string out_dir;
  auto* golden = app.add_subcommand("golden", "regenerate the reference q,t-matrix tables");
  golden->add_option("--out", out_dir, "directory to write <name>.txt files into (default: print)");
  golden->add_option("--threads", common.threads, "worker threads (0 = all cores)")->capture_default_str();
  golden->callback([&] {
    const auto tables = golden_tables(common.threads);
    if (out_dir.empty()) {
      for (const auto& t : tables) std::cout << "# " << t.name << '\n' << t.text;
      return;
    }
    std::filesystem::create_directories(out_dir);
    for (const auto& t : tables) {
      std::ofstream f(std::filesystem::path(out_dir) / (t.name + ".txt"), std::ios::binary);
      require(static_cast<bool>(f), "cannot write into " + out_dir);
      f << t.text;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << '\n';
    return 3;
  }
  return verify_status;
}
