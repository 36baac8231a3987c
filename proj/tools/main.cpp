#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "CLI11.hpp"
#include "cli_util.hpp"
#include "sphclif/solvers.hpp"

namespace {

using namespace sphclif;
using cli::fmt;

constexpr const char* kVersion = "0.1.0";

struct CommonOpts {
  std::string alpha_str = "0.001+0.7i";
  double cap_angle_deg = 60.0;
  std::string res = "16:32,32:64,64:128";
  double eps = 0.0;  // 0: derived per level as 4h
  double pv_eps = 0.05;
  int max_terms = 400;
  double series_tol = 1e-14;
  double fp_tol = 1e-10;
  int max_iter = 60;
  unsigned seed = 1234;
  bool deterministic = false;
  std::string out = "-";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--alpha", o.alpha_str, "complex degree, \"re[+imi]\" with no spaces");
  cmd->add_option("--cap-angle", o.cap_angle_deg, "cap colatitude in degrees");
  cmd->add_option("--res", o.res, "resolution ladder \"Nt:Np[,Nt:Np...]\"");
  cmd->add_option("--eps", o.eps, "exclusion radius (0: 4h per level)");
  cmd->add_option("--pv-eps", o.pv_eps, "principal-value arc exclusion");
  cmd->add_option("--max-terms", o.max_terms, "series truncation order");
  cmd->add_option("--series-tol", o.series_tol, "relative series tail tolerance");
  cmd->add_option("--fp-tol", o.fp_tol, "fixed-point increment tolerance");
  cmd->add_option("--max-iter", o.max_iter, "fixed-point iteration cap");
  cmd->add_option("--seed", o.seed, "seed for randomized test fields");
  cmd->add_flag("--deterministic", o.deterministic,
                "fixed summation order and 17-digit output (always on)");
  cmd->add_option("--out", o.out, "output CSV path (- for stdout)");
}

std::string echo_config(const CommonOpts& o, const std::string& cmd) {
  return "cmd=" + cmd + " alpha=" + o.alpha_str +
         " cap_angle=" + fmt(o.cap_angle_deg) + " res=" + o.res +
         " eps=" + fmt(o.eps) + " pv_eps=" + fmt(o.pv_eps) +
         " max_terms=" + std::to_string(o.max_terms) +
         " series_tol=" + fmt(o.series_tol) + " fp_tol=" + fmt(o.fp_tol) +
         " max_iter=" + std::to_string(o.max_iter) +
         " seed=" + std::to_string(o.seed) +
         " deterministic=" + (o.deterministic ? "1" : "0") + " out=" + o.out;
}

TransformConfig make_transform(const CommonOpts& o, Complex alpha) {
  TransformConfig t;
  t.kernel.alpha = alpha;
  t.kernel.n = 3;
  t.kernel.max_terms = o.max_terms;
  t.kernel.series_tol = o.series_tol;
  t.pv_eps = o.pv_eps;
  t.exclusion_eps = o.eps;
  return t;
}

int cmd_kernel(const CommonOpts& o, int sweep_points) {
  Complex alpha;
  try {
    alpha = cli::parse_alpha(o.alpha_str);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "sphclif kernel: %s\n", e.what());
    return 2;
  }
  KernelConfig kc;
  kc.alpha = alpha;
  kc.n = 3;
  kc.max_terms = o.max_terms;
  kc.series_tol = o.series_tol;
  try {
    kc.validate();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "sphclif kernel: %s\n", e.what());
    return 1;
  }
  cli::CsvWriter csv(o.out);
  csv.comment(std::string("sphclif ") + kVersion);
  csv.comment(echo_config(o, "kernel"));
  csv.row({"z", "scalar_re", "scalar_im", "b12_re", "b12_im", "b13_re", "b13_im",
           "b23_re", "b23_im", "terms_used", "converged"});
  const SpherePoint omega = make_unit(0.3, -0.1, 0.95);
  // unit tangent at omega: cross(omega, x-axis), normalized
  const SpherePoint e2 = make_unit(omega[1] * 0.0 - omega[2] * 0.0,
                                   omega[2] * 1.0 - omega[0] * 0.0,
                                   omega[0] * 0.0 - omega[1] * 1.0);
  // geodesic sweep of the target from the antipodal side toward the
  // coincidence guard; the series variable z = -omega.v runs from -1+ to +1-
  for (int k = 0; k < sweep_points; ++k) {
    const double frac = (k + 0.5) / sweep_points;
    const double theta = (std::numbers::pi - 0.02) * (1.0 - frac) + 0.06 * frac;
    SpherePoint v;
    for (int i = 0; i < 3; ++i) v[i] = std::cos(theta) * omega[i] + std::sin(theta) * e2[i];
    try {
      const KernelValue kv = cauchy_kernel(omega.span(), v.span(), kc);
      const double z = -dot(omega, v);
      csv.row({fmt(z), fmt(kv.value[0u].real()), fmt(kv.value[0u].imag()),
               fmt(kv.value[3u].real()), fmt(kv.value[3u].imag()),
               fmt(kv.value[5u].real()), fmt(kv.value[5u].imag()),
               fmt(kv.value[6u].real()), fmt(kv.value[6u].imag()),
               std::to_string(kv.terms_used), kv.converged ? "1" : "0"});
    } catch (const std::domain_error& e) {
      std::fprintf(stderr, "sphclif kernel: %s\n", e.what());
      return 1;
    }
  }
  return 0;
}

int cmd_verify(const CommonOpts& o) {
  VerifyOptions vo;
  try {
    vo.alpha = cli::parse_alpha(o.alpha_str);
    vo.ladder = cli::parse_resolutions(o.res);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "sphclif verify: %s\n", e.what());
    return 2;
  }
  vo.cap_angle = o.cap_angle_deg * std::numbers::pi / 180.0;
  vo.seed = o.seed;
  vo.transform = make_transform(o, vo.alpha);
  // coarser ladder for the dense O(N^2) rows, one entry per level
  const std::vector<std::pair<int, int>> quad_default{{12, 24}, {20, 40}, {32, 64},
                                                      {40, 80}, {48, 96}};
  vo.ladder_quadratic.clear();
  for (std::size_t i = 0; i < vo.ladder.size(); ++i) {
    vo.ladder_quadratic.push_back(quad_default[std::min(i, quad_default.size() - 1)]);
  }

  std::vector<IdentityReport> rows;
  try {
    rows = verify_pi_identities(vo);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "sphclif verify: %s\n", e.what());
    return 1;
  }

  cli::CsvWriter csv(o.out);
  csv.comment(std::string("sphclif ") + kVersion);
  csv.comment(echo_config(o, "verify"));
  csv.row({"identity", "level", "mesh_param", "residual", "first_residual",
           "final_residual", "verdict", "expected", "matches", "note"});
  bool all_ok = true;
  for (const auto& r : rows) {
    const bool match = r.pass == r.expected_pass;
    all_ok = all_ok && match;
    for (std::size_t l = 0; l < r.residuals.size(); ++l) {
      csv.row({r.name, std::to_string(l), fmt(r.mesh_params[l]), fmt(r.residuals[l]),
               fmt(r.first()), fmt(r.final()), r.pass ? "pass" : "fail",
               r.expected_pass ? "pass" : "fail", match ? "1" : "0", r.note});
    }
  }
  std::fprintf(stderr, "verify: %zu identities, %s\n", rows.size(),
               all_ok ? "all match expectation" : "MISMATCH against expectation");
  for (const auto& r : rows) {
    std::fprintf(stderr, "  %-36s %s (expected %s)  first=%.3e final=%.3e\n",
                 r.name.c_str(), r.pass ? "pass" : "fail",
                 r.expected_pass ? "pass" : "fail", r.first(), r.final());
  }
  return all_ok ? 0 : 1;
}

int cmd_bvp(const CommonOpts& o) {
  Complex alpha;
  std::vector<std::pair<int, int>> ladder;
  try {
    alpha = cli::parse_alpha(o.alpha_str);
    ladder = cli::parse_resolutions(o.res);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "sphclif bvp: %s\n", e.what());
    return 2;
  }
  const double theta0 = o.cap_angle_deg * std::numbers::pi / 180.0;
  cli::CsvWriter csv(o.out);
  csv.comment(std::string("sphclif ") + kVersion);
  csv.comment(echo_config(o, "bvp"));
  csv.row({"case", "n_theta", "n_phi", "gamma_residual", "trace_residual",
           "recovery_error"});
  for (const auto& [nt, np] : ladder) {
    SphericalDomain dom = build_cap(theta0, nt, np);
    TransformConfig cfg = make_transform(o, alpha);
    if (cfg.exclusion_eps <= 0.0) cfg.exclusion_eps = 4.0 * dom.mesh_param;
    // case 1: g = Gamma_alpha(bump), h = 0 -> f recovers the bump
    AnalyticField bump = bump_field(dom, SpherePoint{{0, 0, 1}}, 0.3 * theta0,
                                    {{0u, Complex(1.0)}, {1u, Complex(0.5)}});
    AnalyticField g = gamma_alpha_field(bump, alpha);
    std::vector<Multivector> h0(dom.boundary_nodes.size(), Multivector(3));
    BvpSolution s1 = solve_bvp(dom, g, h0, alpha, cfg);
    double rec = 0.0;
    for (std::size_t i = 0; i < dom.interior_nodes.size(); i += 17) {
      const Multivector want = bump.value(dom.interior_nodes[i]);
      rec = std::max(rec, (s1.f.values[i] - want).frob_norm() /
                              (1.0 + want.frob_norm()));
    }
    csv.row({"compact_source", std::to_string(nt), std::to_string(np),
             fmt(s1.gamma_residual), fmt(s1.trace_residual), fmt(rec)});
    // case 2: g = 0, h = Fourier boundary data -> monogenic extension
    AnalyticField zerof;
    zerof.value = [](const SpherePoint&) { return Multivector(3); };
    zerof.partial = [](const SpherePoint&, int) { return Multivector(3); };
    std::vector<Multivector> h;
    for (const auto& bn : dom.boundary_nodes) {
      const double phi = std::atan2(bn.point[1], bn.point[0]);
      h.push_back(Multivector::scalar(3, Complex(1.0 + 0.4 * std::cos(phi))));
    }
    BvpSolution s2 = solve_bvp(dom, zerof, h, alpha, cfg);
    csv.row({"boundary_data", std::to_string(nt), std::to_string(np),
             fmt(s2.gamma_residual), fmt(s2.trace_residual), "0"});
  }
  return 0;
}

int cmd_beltrami(const CommonOpts& o, const std::string& qnorms_str) {
  Complex alpha;
  std::vector<std::pair<int, int>> ladder;
  std::vector<double> qnorms;
  try {
    alpha = cli::parse_alpha(o.alpha_str);
    ladder = cli::parse_resolutions(o.res);
    std::size_t start = 0;
    while (start < qnorms_str.size()) {
      std::size_t comma = qnorms_str.find(',', start);
      if (comma == std::string::npos) comma = qnorms_str.size();
      qnorms.push_back(std::stod(qnorms_str.substr(start, comma - start)));
      start = comma + 1;
    }
    for (double q : qnorms) {
      if (q < 0.0 || q >= 1.0) {
        throw std::invalid_argument("q norm must lie in [0, 1)");
      }
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "sphclif beltrami: %s\n", e.what());
    return 2;
  }
  const double theta0 = o.cap_angle_deg * std::numbers::pi / 180.0;
  cli::CsvWriter csv(o.out);
  csv.comment(std::string("sphclif ") + kVersion);
  csv.comment(echo_config(o, "beltrami"));
  csv.row({"q_norm", "n_theta", "n_phi", "iterations", "mean_ratio", "be1_residual",
           "be2_residual", "converged"});
  bool diverged = false;
  for (const auto& [nt, np] : ladder) {
    SphericalDomain dom = build_cap(theta0, nt, np);
    TransformConfig cfg = make_transform(o, alpha);
    if (cfg.exclusion_eps <= 0.0) cfg.exclusion_eps = 4.0 * dom.mesh_param;
    std::vector<Multivector> hb;
    for (const auto& bn : dom.boundary_nodes) {
      const double phi = std::atan2(bn.point[1], bn.point[0]);
      Multivector m = Multivector::scalar(3, Complex(1.0 + 0.5 * std::cos(phi)));
      m += Multivector::blade(3, 1u, Complex(0.3 * std::sin(phi)));
      hb.push_back(m);
    }
    AnalyticField phi_seed = cif_monogenic_field(dom, hb, alpha, cfg);
    for (double qn : qnorms) {
      BeltramiConfig bc;
      bc.alpha = alpha;
      bc.fp_tol = o.fp_tol;
      bc.max_iter = o.max_iter;
      bc.transform = cfg;
      bc.phi = phi_seed;
      bc.q.value = [qn](const SpherePoint&) {
        return Multivector::scalar(3, Complex(qn));
      };
      bc.q.partial = [](const SpherePoint&, int) { return Multivector(3); };
      try {
        BeltramiSolution sol = solve_beltrami(dom, bc);
        csv.row({fmt(qn), std::to_string(nt), std::to_string(np),
                 std::to_string(sol.trace.iterations), fmt(sol.trace.mean_ratio),
                 fmt(sol.trace.be1_residual), fmt(sol.trace.be2_residual),
                 sol.trace.converged ? "1" : "0"});
      } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "sphclif beltrami: %s\n", e.what());
        diverged = true;
      }
    }
  }
  return diverged ? 1 : 0;
}

int cmd_info(const CommonOpts& o) {
  std::printf("sphclif %s\n", kVersion);
  std::printf("subcommands: kernel | verify | bvp | beltrami | info\n");
  std::printf("flags:\n");
  std::printf("  --alpha        %s\n", o.alpha_str.c_str());
  std::printf("  --cap-angle    %s\n", fmt(o.cap_angle_deg).c_str());
  std::printf("  --res          %s\n", o.res.c_str());
  std::printf("  --eps          %s\n", fmt(o.eps).c_str());
  std::printf("  --pv-eps       %s\n", fmt(o.pv_eps).c_str());
  std::printf("  --max-terms    %d\n", o.max_terms);
  std::printf("  --series-tol   %s\n", fmt(o.series_tol).c_str());
  std::printf("  --fp-tol       %s\n", fmt(o.fp_tol).c_str());
  std::printf("  --max-iter     %d\n", o.max_iter);
  std::printf("  --seed         %u\n", o.seed);
  std::printf("  --deterministic %d\n", o.deterministic ? 1 : 0);
  std::printf("  --out          %s\n", o.out.c_str());
  std::printf("exit codes: 0 pass, 1 verification/solver failure, 2 usage error\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherical Clifford analysis toolkit"};
  app.require_subcommand(1);

  CommonOpts o;
  int sweep_points = 120;
  std::string qnorms = "0.1,0.3,0.5";

  CLI::App* kernel = app.add_subcommand("kernel", "tabulate the Cauchy kernel");
  add_common(kernel, o);
  kernel->add_option("--sweep-points", sweep_points, "number of sweep rows");
  CLI::App* verify = app.add_subcommand("verify", "run the identity suites");
  add_common(verify, o);
  CLI::App* bvp = app.add_subcommand("bvp", "solve the inhomogeneous BVP");
  add_common(bvp, o);
  CLI::App* beltrami = app.add_subcommand("beltrami", "run the Beltrami solver grid");
  add_common(beltrami, o);
  beltrami->add_option("--q-norms", qnorms, "comma list of dilatation magnitudes");
  CLI::App* info = app.add_subcommand("info", "print configuration defaults");
  add_common(info, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (kernel->parsed()) return cmd_kernel(o, sweep_points);
    if (verify->parsed()) return cmd_verify(o);
    if (bvp->parsed()) return cmd_bvp(o);
    if (beltrami->parsed()) return cmd_beltrami(o, qnorms);
    if (info->parsed()) return cmd_info(o);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "sphclif: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "sphclif: %s\n", e.what());
    return 1;
  }
  return 2;
}
