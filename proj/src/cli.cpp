#include "kp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "kp/kp_module.hpp"
#include "kp/pieri.hpp"
#include "kp/reports.hpp"
#include "kp/schubert.hpp"
#include "kp/tensor.hpp"
#include "kp/verify.hpp"

namespace kp::cli {

namespace {

int usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << "\n";
  return 2;
}

bool parse_kind(const std::string& text, PieriKind& kind) {
  if (text == "X" || text == "x") {
    kind = PieriKind::X;
    return true;
  }
  if (text == "Y" || text == "y") {
    kind = PieriKind::Y;
    return true;
  }
  return false;
}

void print_chain(std::ostream& out, const PieriChain& chain) {
  out << "  ";
  if (chain.steps.empty()) out << "(empty)";
  for (const CoverStep& s : chain.steps) out << "t[" << s.p << "," << s.q << "]";
  out << "  end " << chain.end().to_string() << "\n";
}

int run_pieri(const std::string& perm, int i, int d, PieriKind kind, bool json_out, std::ostream& out,
              std::ostream& err) {
  const auto w = Permutation::parse(perm);
  if (!w) return usage_error(err, "not a permutation: " + perm);
  if (i < 1) return usage_error(err, "--i must be >= 1");
  if (d < 0) return usage_error(err, "--d must be >= 0");
  const std::vector<PieriChain> chains = enumerate_chains(*w, i, d, kind);
  const PieriVerification v = verify_pieri(*w, i, d, kind);
  if (json_out) {
    nlohmann::json j;
    j["w"] = w->to_string();
    j["i"] = i;
    j["d"] = d;
    j["kind"] = std::string(1, kind_letter(kind));
    nlohmann::json list = nlohmann::json::array();
    for (const PieriChain& chain : chains) list.push_back(to_json(chain));
    j["chains"] = std::move(list);
    j["verified"] = v.ok;
    out << j.dump(2) << "\n";
  } else {
    out << "w = " << w->to_string() << "  i = " << i << "  d = " << d << "  kind = " << kind_letter(kind) << "\n";
    out << "chains (" << chains.size() << "):\n";
    for (const PieriChain& chain : chains) print_chain(out, chain);
    out << "product identity: " << (v.ok ? "ok" : "FAILED") << "\n";
    if (!v.ok) {
      out << "  lhs = " << v.lhs.to_string() << "\n";
      out << "  rhs = " << v.rhs.to_string() << "\n";
    }
  }
  return v.ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schubert polynomials, Kraskiewicz-Pragacz modules, and explicit filtrations of "
               "S_w (x) S^d(K^i) and S_w (x) Lambda^d(K^i)",
               "kp"};
  app.require_subcommand(1);

  std::string perm;
  int n = 0;  // 0 means: smallest window containing w
  int i = 1;
  int d = 0;
  std::string kind_text = "X";
  bool json_out = false;
  int max_sn = 5;
  unsigned seed = 20240815;

  auto* sc_schubert = app.add_subcommand("schubert", "Print the Schubert polynomial of w");
  sc_schubert->add_option("w", perm, "permutation, e.g. 1,3,2")->required();
  sc_schubert->add_flag("--json", json_out, "emit JSON");

  auto* sc_pieri = app.add_subcommand("pieri", "Enumerate X_{i,d}(w) and check S_w * h_d = sum S_{w zeta}");
  auto* sc_dual = app.add_subcommand("dual-pieri", "Enumerate Y_{i,d}(w) and check S_w * e_d = sum S_{w zeta}");
  for (auto* sc : {sc_pieri, sc_dual}) {
    sc->add_option("w", perm, "permutation")->required();
    sc->add_option("--i", i, "column split: p <= i < q")->required();
    sc->add_option("--d", d, "chain depth")->required();
    sc->add_flag("--json", json_out, "emit JSON");
  }

  auto* sc_char = app.add_subcommand("kp-char", "Dimension and character of the module S_w");
  sc_char->add_option("w", perm, "permutation")->required();
  sc_char->add_option("--n", n, "size of the upper triangular algebra (default: window of w)");
  sc_char->add_flag("--json", json_out, "emit JSON");

  auto* sc_filtr = app.add_subcommand("filtration", "Build and verify the filtration of S_w (x) S^d/L^d(K^i)");
  auto* sc_prop = app.add_subcommand("prop-check", "Zero pattern of phi_{zeta'}(v_zeta) over all chain pairs");
  for (auto* sc : {sc_filtr, sc_prop}) {
    sc->add_option("w", perm, "permutation")->required();
    sc->add_option("--i", i, "column split")->required();
    sc->add_option("--d", d, "tensor degree")->required();
    sc->add_option("--kind", kind_text, "X (symmetric) or Y (exterior)")->required();
    sc->add_option("--n", n, "size of the upper triangular algebra (default: window of w)");
    sc->add_flag("--json", json_out, "emit JSON");
  }

  auto* sc_suite = app.add_subcommand("verify-suite", "Run the full verification suite");
  sc_suite->add_option("--max-sn", max_sn, "largest symmetric group for the character sweep (default 5)");
  sc_suite->add_option("--seed", seed, "seed for the randomized structural checks");
  sc_suite->add_flag("--json", json_out, "emit JSON");

  std::vector<const char*> argv;
  argv.push_back("kp");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(sc_schubert)) {
      const auto w = Permutation::parse(perm);
      if (!w) return usage_error(err, "not a permutation: " + perm);
      const Polynomial f = schubert(*w);
      if (json_out) {
        nlohmann::json j;
        j["w"] = w->to_string();
        j["schubert"] = to_json(f);
        out << j.dump(2) << "\n";
      } else {
        out << f.to_string() << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(sc_pieri)) return run_pieri(perm, i, d, PieriKind::X, json_out, out, err);
    if (app.got_subcommand(sc_dual)) return run_pieri(perm, i, d, PieriKind::Y, json_out, out, err);

    if (app.got_subcommand(sc_char)) {
      const auto w = Permutation::parse(perm);
      if (!w) return usage_error(err, "not a permutation: " + perm);
      const int nn = n > 0 ? n : std::max(1, w->window());
      if (!w->in_s_paren(nn)) return usage_error(err, "w is not in S^(n) for n = " + std::to_string(nn));
      const KpModuleReport report = kp_module_report(*w, nn);
      if (json_out) {
        out << to_json(report).dump(2) << "\n";
      } else {
        out << "w = " << w->to_string() << "  n = " << nn << "\n";
        out << "dimension = " << report.dimension << "\n";
        out << "character = " << report.character.to_string() << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(sc_filtr) || app.got_subcommand(sc_prop)) {
      const auto w = Permutation::parse(perm);
      if (!w) return usage_error(err, "not a permutation: " + perm);
      PieriKind kind{};
      if (!parse_kind(kind_text, kind)) return usage_error(err, "--kind must be X or Y");
      if (d < 0) return usage_error(err, "--d must be >= 0");
      if (i < 1) return usage_error(err, "--i must be >= 1");
      const int nn = n > 0 ? n : std::max(1, w->window());
      if (i > nn) return usage_error(err, "--i exceeds n = " + std::to_string(nn));
      if (!w->in_s_paren(nn)) return usage_error(err, "w is not in S^(n) for n = " + std::to_string(nn));

      if (app.got_subcommand(sc_prop)) {
        const TriangularityReport report = check_triangularity(*w, i, d, kind, nn);
        if (json_out) {
          out << to_json(report).dump(2) << "\n";
        } else {
          out << "w = " << w->to_string() << "  i = " << i << "  d = " << d << "  kind = " << kind_letter(kind)
              << "  n = " << nn << "\n";
          out << "chains in filtration order:\n";
          for (const PieriChain& chain : report.chains) print_chain(out, chain);
          out << "nonzero pattern (rows v_zeta, columns phi_zeta'):\n";
          for (std::size_t r = 0; r < report.nonzero.size(); ++r) {
            out << "  ";
            for (bool entry : report.nonzero[r]) out << (entry ? '*' : '.');
            out << "\n";
          }
          out << "diagonal nonzero: " << (report.diagonal_ok ? "yes" : "NO") << "\n";
          out << "strictly triangular: " << (report.triangular_ok ? "yes" : "NO") << "\n";
        }
        return report.ok() ? 0 : 1;
      }

      const FiltrationReport report = build_filtration(*w, i, d, kind, nn);
      if (json_out) {
        out << to_json(report).dump(2) << "\n";
      } else {
        out << "w = " << w->to_string() << "  i = " << i << "  d = " << d << "  kind = " << kind_letter(kind)
            << "  n = " << nn << "\n";
        out << "chains in filtration order:\n";
        for (const PieriChain& chain : report.chains) print_chain(out, chain);
        out << "ladder:";
        for (std::size_t dim : report.ladder) out << " " << dim;
        out << "\n";
        for (std::size_t k = 0; k < report.quotients.size(); ++k) {
          const QuotientInfo& q = report.quotients[k];
          out << "quotient " << k + 1 << ": end " << q.end.to_string() << "  dim " << q.dim << "  character "
              << q.character.to_string() << "\n";
        }
        out << "triangular: " << (report.triangular ? "yes" : "no") << "\n";
        out << "verdict: " << report.verdict << "\n";
      }
      return report.ok() ? 0 : 1;
    }

    if (app.got_subcommand(sc_suite)) {
      if (max_sn < 2) return usage_error(err, "--max-sn must be >= 2");
      SuiteOptions options;
      options.max_sn = max_sn;
      options.seed = seed;
      options.mode = RunMode::Parallel;
      const std::vector<CriterionResult> results = run_acceptance_suite(options);
      bool all = true;
      if (json_out) {
        out << to_json(results).dump(2) << "\n";
        for (const CriterionResult& r : results) all = all && r.pass;
      } else {
        for (const CriterionResult& r : results) {
          all = all && r.pass;
          out << "criterion " << r.index << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  [" << r.cases
              << " cases, " << r.seconds << "s]\n";
          if (!r.pass) out << "  first failure: " << r.detail << "\n";
        }
        out << "verify-suite: " << (all ? "PASS" : "FAIL") << "\n";
      }
      return all ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    return usage_error(err, e.what());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return usage_error(err, "no subcommand given");
}

}  // namespace kp::cli
