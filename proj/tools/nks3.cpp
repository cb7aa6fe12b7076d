// nks3: verification suites, single-point analysis and parameter sweeps for
// the example hypersurfaces of the nearly Kaehler S^3 x S^3.
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 I/O error.

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nks3/hypersurface.hpp"
#include "nks3/parallel.hpp"
#include "nks3/verify.hpp"

namespace {

using namespace nks3;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

constexpr double kSweepMinRadius = 0.05;
constexpr double kSweepSpreadTol = 1e-6;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<double> parse_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto v = parse_double(item);
    if (!v) throw UsageError(std::string("malformed ") + what + ": '" + text + "'");
    out.push_back(*v);
  }
  if (out.empty() || text.back() == ',') {
    throw UsageError(std::string("malformed ") + what + ": '" + text + "'");
  }
  return out;
}

// 12 significant digits, '.' decimal point, independent of locale.
std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("NKS3_SEED")) {
    std::uint64_t v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw UsageError("NKS3_SEED is not an unsigned integer: '" + std::string(s) + "'");
    }
    return v;
  }
  return 0;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

Family require_family(const std::string& name) {
  const auto f = parse_family(name);
  if (!f) throw UsageError("unknown family '" + name + "' (expected m1..m6)");
  return *f;
}

FamilyParams resolve_params(Family family, const std::optional<double>& r,
                            const std::optional<double>& k, const std::optional<double>& l) {
  if (uses_radius(family)) {
    if (k || l) throw UsageError("families m1..m3 take --r, not --k/--l");
    return FamilyParams::radius(r.value_or(1.0));
  }
  if (r) throw UsageError("families m4..m6 take --k/--l, not --r");
  if (!k && !l) throw UsageError("families m4..m6 require --k (and optionally --l)");
  const double kv = k ? *k : std::sqrt(std::max(0.0, 1.0 - *l * *l));
  const double lv = l ? *l : std::sqrt(std::max(0.0, 1.0 - kv * kv));
  return FamilyParams::torus(kv, lv);
}

std::string mult_pattern(const std::vector<int>& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(m[i]);
  }
  return s;
}

std::optional<std::string> pxi_label(const SpectralReport& rep) {
  if (rep.dim_D != 2) return std::nullopt;
  return std::string(pxi_class_name(classify_P_xi(rep)));
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::optional<std::uint64_t> seed;
  int samples = 100;
  std::string out;
  std::string family = "m1";
  std::optional<double> r, k, l;
};

int cmd_verify(const VerifyArgs& a) {
  const std::uint64_t seed = resolve_seed(a.seed);
  if (a.samples < 1) throw UsageError("--samples must be at least 1");
  SuiteReport report;
  if (a.suite == "structure") {
    report = run_structure_suite(seed, a.samples);
  } else if (a.suite == "isometry") {
    report = run_isometry_suite(seed, a.samples);
  } else if (a.suite == "hypersurface") {
    const Family f = require_family(a.family);
    report = run_hypersurface_suite(f, resolve_params(f, a.r, a.k, a.l), seed, a.samples);
  } else {
    report = run_all_suites(seed, a.samples);
  }
  write_output(a.out, to_json(report) + "\n");
  for (const CheckResult& c : report.checks) {
    if (!c.pass) {
      std::cerr << "FAIL " << c.id << ": residual " << c.max_residual << " > " << c.tolerance
                << "\n";
    }
  }
  return report.all_pass() ? kExitOk : kExitCheckFailure;
}

// ---- analyze --------------------------------------------------------------

struct AnalyzeArgs {
  std::string family;
  std::optional<double> r, k, l;
  std::string at = "0,0,0,0,0";
  bool flip = false;
};

nlohmann::json vec_json(const Eigen::VectorXd& v) {
  nlohmann::json a = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

nlohmann::json quat_json(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }

int cmd_analyze(const AnalyzeArgs& a) {
  const Family family = require_family(a.family);
  const FamilyParams params = resolve_params(family, a.r, a.k, a.l);
  const std::vector<double> at = parse_list(a.at, "--at");
  if (at.size() != static_cast<std::size_t>(kHypersurfaceDim)) {
    throw UsageError("--at needs exactly 5 comma-separated numbers");
  }
  ChartCoords u;
  for (int i = 0; i < kHypersurfaceDim; ++i) u(i) = at[i];

  Immersion m = [&] {
    try {
      return make_example(family, params);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }();

  using nlohmann::json;
  json doc = {{"family", std::string(family_name(family))}};
  if (uses_radius(family)) {
    doc["r"] = params.r;
  } else {
    doc["k"] = params.k;
    doc["l"] = params.l;
  }
  doc["at"] = vec_json(u);

  AnalyzeOptions options;
  options.flip_normal = a.flip;
  HypersurfacePointData d;
  try {
    d = analyze_point(m, u, options);
  } catch (const DegenerateImmersion& e) {
    doc["error"] = e.what();
    std::cout << doc.dump(2) << "\n";
    return kExitCheckFailure;
  }
  const SpectralReport rep = spectral_report(d);
  doc["point"] = {{"p", quat_json(d.point.p)}, {"q", quat_json(d.point.q)}};
  doc["xi"] = vec_json(d.xi);
  doc["U"] = vec_json(d.U);
  doc["alpha"] = rep.alpha;
  doc["hopf_residual"] = rep.hopf_residual;
  doc["symmetry_residual"] = d.symmetry_residual();
  doc["eigenvalues"] = rep.eigenvalues;
  doc["multiplicities"] = rep.multiplicities;
  doc["mult_pattern"] = mult_pattern(rep.multiplicities);
  doc["cluster_values"] = rep.cluster_values;
  doc["trace"] = rep.trace;
  doc["mean_curvature"] = rep.mean_curvature;
  doc["a"] = rep.a;
  doc["b"] = rep.b;
  doc["c"] = rep.c;
  doc["dim_D"] = rep.dim_D;
  const auto label = pxi_label(rep);
  doc["pxi_class"] = label ? json(*label) : json(nullptr);
  doc["theta"] = rep.theta ? json(*rep.theta) : json(nullptr);
  doc["holomorphic_residual"] = holomorphic_preservation_residual(d);
  json shape = json::array();
  for (int i = 0; i < kHypersurfaceDim; ++i) shape.push_back(vec_json(d.A.row(i).transpose()));
  doc["shape_operator"] = shape;
  std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

// ---- sweep ----------------------------------------------------------------

struct SweepArgs {
  std::string family;
  std::string r_list;
  std::string k_list;
  int points = 8;
  std::optional<std::uint64_t> seed;
  std::string out;
};

struct SweepRow {
  FamilyParams params;
  std::vector<double> eigenvalues;
  std::vector<int> multiplicities;
  double trace = 0.0;
  std::string pxi;
  std::optional<double> theta;
  double spread = 0.0;
};

SweepRow sweep_point(Family family, const FamilyParams& params, std::uint64_t seed,
                     std::size_t index, int points) {
  const Immersion m = make_example(family, params);
  std::seed_seq seq{static_cast<std::uint64_t>(seed), static_cast<std::uint64_t>(index)};
  Rng rng(seq);
  SweepRow row;
  row.params = params;
  std::vector<double> sum(kHypersurfaceDim, 0.0), lo(kHypersurfaceDim, INFINITY),
      hi(kHypersurfaceDim, -INFINITY);
  double theta_sum = 0.0;
  int theta_count = 0;
  std::optional<std::string> pxi;
  for (int s = 0; s < points; ++s) {
    const SpectralReport rep = spectral_report(analyze_point(m, m.sample_coords(rng)));
    for (int i = 0; i < kHypersurfaceDim; ++i) {
      sum[i] += rep.eigenvalues[i];
      lo[i] = std::min(lo[i], rep.eigenvalues[i]);
      hi[i] = std::max(hi[i], rep.eigenvalues[i]);
    }
    row.trace += rep.trace;
    if (rep.theta) {
      theta_sum += *rep.theta;
      ++theta_count;
    }
    const std::string label = pxi_label(rep).value_or("NA");
    if (!pxi) {
      pxi = label;
    } else if (*pxi != label) {
      pxi = "MIXED";
    }
  }
  for (int i = 0; i < kHypersurfaceDim; ++i) {
    row.eigenvalues.push_back(sum[i] / points);
    row.spread = std::max(row.spread, hi[i] - lo[i]);
  }
  row.trace /= points;
  row.multiplicities = cluster_sorted(row.eigenvalues);
  row.pxi = pxi.value_or("NA");
  if (theta_count == points) row.theta = theta_sum / points;
  return row;
}

int cmd_sweep(const SweepArgs& a) {
  const Family family = require_family(a.family);
  const std::uint64_t seed = resolve_seed(a.seed);
  if (a.points < 1) throw UsageError("--points must be at least 1");

  std::vector<FamilyParams> grid;
  if (uses_radius(family)) {
    if (a.r_list.empty() || !a.k_list.empty()) throw UsageError("m1..m3 sweeps need --r only");
    for (double r : parse_list(a.r_list, "--r")) {
      if (!(r >= kSweepMinRadius && r <= 1.0)) {
        throw UsageError("radius " + fmt(r) + " outside the sweep domain [0.05, 1]");
      }
      grid.push_back(FamilyParams::radius(r));
    }
  } else {
    if (a.k_list.empty() || !a.r_list.empty()) throw UsageError("m4..m6 sweeps need --k only");
    for (double k : parse_list(a.k_list, "--k")) {
      if (!(k > 0.0 && k < 1.0)) throw UsageError("k " + fmt(k) + " outside (0, 1)");
      grid.push_back(FamilyParams::torus(k, std::sqrt(1.0 - k * k)));
    }
  }

  std::vector<SweepRow> rows(grid.size());
  parallel_for(grid.size(),
               [&](std::size_t i) { rows[i] = sweep_point(family, grid[i], seed, i, a.points); });

  std::ostringstream csv;
  csv << "family,r,k,l,ev1,ev2,ev3,ev4,ev5,mult_pattern,traceA,pxi_class,theta\n";
  bool constant = true;
  for (const SweepRow& row : rows) {
    csv << family_name(family) << ',';
    if (uses_radius(family)) {
      csv << fmt(row.params.r) << ",,,";
    } else {
      csv << ',' << fmt(row.params.k) << ',' << fmt(row.params.l) << ',';
    }
    for (double v : row.eigenvalues) csv << fmt(v) << ',';
    csv << mult_pattern(row.multiplicities) << ',' << fmt(row.trace) << ',' << row.pxi << ',';
    if (row.theta) csv << fmt(*row.theta);
    csv << '\n';
    std::cerr << "spread " << family_name(family) << " "
              << (uses_radius(family) ? "r=" + fmt(row.params.r) : "k=" + fmt(row.params.k))
              << ": " << fmt(row.spread) << "\n";
    if (!(row.spread <= kSweepSpreadTol)) constant = false;
  }
  write_output(a.out, csv.str());
  if (!constant) {
    std::cerr << "principal curvatures vary across points by more than " << fmt(kSweepSpreadTol)
              << "\n";
    return kExitCheckFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nearly Kaehler S^3 x S^3 hypersurface toolkit"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run verification suites and write a JSON report");
  verify->add_option("--suite", va.suite, "structure | hypersurface | isometry | all")
      ->check(CLI::IsMember({"structure", "hypersurface", "isometry", "all"}));
  verify->add_option("--seed", va.seed, "RNG seed (default: $NKS3_SEED, else 0)");
  verify->add_option("--samples", va.samples, "Random samples per check")->check(CLI::PositiveNumber);
  verify->add_option("--out", va.out, "Output path (default: stdout)");
  verify->add_option("--family", va.family, "Family for --suite hypersurface (m1..m6)");
  verify->add_option("--r", va.r, "Radius for m1..m3");
  verify->add_option("--k", va.k, "Torus radius k for m4..m6");
  verify->add_option("--l", va.l, "Torus radius l for m4..m6");

  AnalyzeArgs aa;
  auto* analyze = app.add_subcommand("analyze", "Analyze one point of an example hypersurface");
  analyze->add_option("--family", aa.family, "m1..m6")->required();
  analyze->add_option("--r", aa.r, "Radius for m1..m3 (default 1)");
  analyze->add_option("--k", aa.k, "Torus radius k for m4..m6");
  analyze->add_option("--l", aa.l, "Torus radius l for m4..m6");
  analyze->add_option("--at", aa.at, "Chart coordinates u0,u1,u2,u3,u4");
  analyze->add_flag("--flip", aa.flip, "Use the opposite unit normal");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Tabulate principal curvatures over a parameter grid");
  sweep->add_option("--family", sa.family, "m1..m6")->required();
  sweep->add_option("--r", sa.r_list, "Comma-separated radii in [0.05, 1] (m1..m3)");
  sweep->add_option("--k", sa.k_list, "Comma-separated k in (0, 1), l = sqrt(1 - k^2) (m4..m6)");
  sweep->add_option("--points", sa.points, "Sampled surface points per grid value");
  sweep->add_option("--seed", sa.seed, "RNG seed (default: $NKS3_SEED, else 0)");
  sweep->add_option("--out", sa.out, "Output CSV path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(va);
    if (*analyze) return cmd_analyze(aa);
    if (*sweep) return cmd_sweep(sa);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
