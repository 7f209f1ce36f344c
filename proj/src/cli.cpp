#include "ufourier/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ufourier/cantor.hpp"
#include "ufourier/divergence.hpp"
#include "ufourier/errors.hpp"
#include "ufourier/fejer.hpp"
#include "ufourier/json_io.hpp"
#include "ufourier/phase.hpp"
#include "ufourier/universality.hpp"

namespace ufourier::cli {

namespace {

struct Sink {
  std::ostream& fallback;

  void write(const std::string& path, const std::string& text) const {
    if (path.empty() || path == "-") {
      fallback << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write '" + path + "'");
    f << text;
  }
  void write_json(const std::string& path, const Json& j) const { write(path, j.dump(2) + "\n"); }
};

std::int64_t freq_cap_from_env(std::int64_t fallback) {
  const char* v = std::getenv("UFOURIER_FREQ_CAP");
  if (!v || !*v) return fallback;
  try {
    std::size_t used = 0;
    const long long cap = std::stoll(v, &used);
    if (used != std::string(v).size() || cap < 1) throw std::invalid_argument(v);
    return std::min<std::int64_t>(cap, kMaxFrequency);
  } catch (const std::exception&) {
    throw InvalidArgument(std::string("UFOURIER_FREQ_CAP: not a positive integer: '") + v + "'");
  }
}

SeriesSpec with_env_cap(SeriesSpec s) {
  s.freq_cap = std::min(s.freq_cap, freq_cap_from_env(s.freq_cap));
  return s;
}

UniversalSeries load_series(const std::string& path) {
  const Json j = read_json_file(path);
  const Json& spec = j.contains("spec") ? j.at("spec") : j;
  SeriesKind kind = SeriesKind::single_point;
  SeriesSpec s = with_env_cap(spec_from_json(spec, &kind));
  return build_series(kind, s);
}

std::vector<double> grid_or_list(const std::vector<double>& list, std::int64_t grid) {
  if (!list.empty()) return list;
  if (grid < 1) throw InvalidArgument("need --t values or a positive --grid");
  std::vector<double> t(static_cast<std::size_t>(grid));
  for (std::int64_t i = 0; i < grid; ++i) t[static_cast<std::size_t>(i)] = kTwoPi * static_cast<double>(i) / static_cast<double>(grid);
  return t;
}

CertMode mode_from(const std::string& m) {
  if (m == "strict") return CertMode::strict;
  if (m == "relaxed") return CertMode::relaxed;
  throw InvalidArgument("--mode must be strict or relaxed");
}

Json fraction_pair(const Rational& lo, const Rational& hi) {
  return Json::array({to_fraction_string(lo), to_fraction_string(hi)});
}

// ---------------------------------------------------------------------------

struct FejerArgs {
  std::int64_t N = 0, n = 0;
  std::string c_re = "0", c_im = "0";
  bool scaled = false;
  double eps = 1.0;
  std::string mode = "relaxed";
  double kappa = kDefaultKappa;
  std::int64_t sup_grid = 0;
  std::string out;
};

int cmd_fejer(const FejerArgs& a, const Sink& sink) {
  const FejerOrder order(a.N, a.n);
  const auto res = fejer_resonance(order);
  Json j;
  j["N"] = a.N;
  j["n"] = a.n;
  j["resonance"] = res.exact ? Json(to_fraction_string(*res.exact)) : Json(nullptr);
  j["resonance_value"] = res.value;
  TrigPoly p;
  if (a.scaled) {
    const ComplexQ c(parse_rational(a.c_re), parse_rational(a.c_im));
    p = scaled_fejer({order, c, a.eps, mode_from(a.mode), a.kappa});
    j["c"] = fraction_pair(c.re, c.im);
  } else {
    p = fejer_coeffs(order);
  }
  if (auto tv = exact_coeff_total_variation(p)) j["total_variation"] = to_fraction_string(*tv);
  if (a.sup_grid > 0) j["sup_estimate"] = sup_norm_estimate(p, a.sup_grid);
  j["coefficients"] = trigpoly_json(p);
  sink.write_json(a.out, j);
  return kExitOk;
}

struct BuildArgs {
  std::string spec, out, coeffs;
};

int cmd_build(const BuildArgs& a, const Sink& sink) {
  const UniversalSeries s = load_series(a.spec);
  sink.write_json(a.out, manifest_json(s));
  if (!a.coeffs.empty()) sink.write_json(a.coeffs, trigpoly_json(s.assembled));
  return kExitOk;
}

struct EvalArgs {
  std::string series, out;
  std::vector<std::int64_t> n;
  std::vector<double> t;
  std::int64_t grid = 0;
};

int cmd_eval(const EvalArgs& a, const Sink& sink) {
  const UniversalSeries s = load_series(a.series);
  std::vector<std::int64_t> ns = a.n;
  if (ns.empty())
    for (const auto& cp : s.checkpoints) ns.push_back(cp.n);
  const std::vector<double> ts = a.t.empty() && a.grid == 0 ? s.spec.points : grid_or_list(a.t, a.grid);
  std::ostringstream os;
  os << "n,t,re,im\n";
  for (double t : ts) {
    const PartialSumProfile prof(s.assembled, t);
    for (auto n : ns) {
      if (n < 0) throw InvalidArgument("eval: n must be nonnegative");
      const Complex v = prof.at(n);
      os << n << ',' << fmt17(t) << ',' << fmt17(v.real()) << ',' << fmt17(v.imag()) << '\n';
    }
  }
  sink.write(a.out, os.str());
  return kExitOk;
}

struct UsearchArgs {
  std::string series, targets, out;
  double delta = 0.0;
  std::int64_t stages = 0;
  std::vector<double> deltas;
};

int cmd_usearch(const UsearchArgs& a, const Sink& sink, std::ostream& err) {
  const UniversalSeries s = load_series(a.series);
  const TargetFunction h = targets_from_json(read_json_file(a.targets));
  Json j;
  if (s.kind == SeriesKind::countable) {
    if (a.stages < 1) throw InvalidArgument("usearch: countable series need --stages >= 1");
    try {
      const auto reports = usearch_staged(s, h, a.stages, {a.deltas});
      j["success"] = true;
      j["stages"] = Json::array();
      for (const auto& r : reports) j["stages"].push_back(hit_report_json(r));
      sink.write_json(a.out, j);
      return kExitOk;
    } catch (const NoHit& e) {
      j["success"] = false;
      j["stages"] = Json::array();
      for (const auto& r : e.completed()) j["stages"].push_back(hit_report_json(r));
      j["best"] = hit_report_json(e.best());
      j["error"] = e.what();
      sink.write_json(a.out, j);
      err << "ufourier: " << e.what() << '\n';
      return kExitNumeric;
    } catch (const StageInfeasible& e) {
      j["success"] = false;
      j["stages"] = Json::array();
      for (const auto& r : e.completed()) j["stages"].push_back(hit_report_json(r));
      j["error"] = e.what();
      sink.write_json(a.out, j);
      err << "ufourier: " << e.what() << '\n';
      return kExitNumeric;
    }
  }
  if (!(a.delta > 0.0)) throw InvalidArgument("usearch: need --delta > 0");
  try {
    j = hit_report_json(usearch_finite(s, h, a.delta));
    sink.write_json(a.out, j);
    return kExitOk;
  } catch (const NoHit& e) {
    j = hit_report_json(e.best());
    j["error"] = e.what();
    sink.write_json(a.out, j);
    err << "ufourier: " << e.what() << '\n';
    return kExitNumeric;
  }
}

struct DivergenceArgs {
  std::string series, poly, out;
  std::int64_t n_min = 0;
  std::vector<double> t;
  std::int64_t grid = 0;
  double tol = 1e-9;
  double delta_scale = 1.0;
  double delta_ratio = 0.36787944117144233;
  double a = 1.0;
  std::int64_t m0 = 1, M = 0;
  std::string family = "quarters";
  double eps_scale = 1.0;
  std::vector<double> points;
  double probe = 0.0;
  bool has_probe = false;
  double t0 = 0.0;
  double s_re = 0.0, s_im = 0.0;
  bool has_s = false;
  double phi = 1.0;
  std::vector<std::int64_t> ns;
  double wa = 0.5, wb = 1.5;
};

TrigPoly poly_or_series(const DivergenceArgs& a) {
  if (!a.poly.empty() && !a.series.empty()) throw InvalidArgument("give --poly or --series, not both");
  if (!a.poly.empty()) {
    const Json j = read_json_file(a.poly);
    return trigpoly_from_json(j.contains("coefficients") ? j.at("coefficients") : j);
  }
  if (!a.series.empty()) return load_series(a.series).assembled;
  throw InvalidArgument("need --poly or --series");
}

int cmd_div_scan(const DivergenceArgs& a, const Sink& sink) {
  const TrigPoly p = poly_or_series(a);
  const auto ts = grid_or_list(a.t, a.grid);
  std::ostringstream os;
  write_oscillation_csv(os, oscillation_scan(p, ts, a.n_min, a.tol));
  sink.write(a.out, os.str());
  return kExitOk;
}

int cmd_div_premeasure(const DivergenceArgs& a, const Sink& sink) {
  if (a.M < 1) throw InvalidArgument("premeasure: need --M >= 1");
  const auto rule = DeltaRule::geometric(a.delta_scale, a.delta_ratio);
  // Centres do not enter the premeasure.
  const auto cover = build_cover(rule, std::vector<double>(static_cast<std::size_t>(a.M), 0.0), a.M);
  const auto pm = premeasure(cover, a.a, a.m0, a.M);
  Json j;
  j["a"] = a.a;
  j["m0"] = a.m0;
  j["M"] = a.M;
  j["partial"] = pm.partial;
  j["infinite_tail"] = pm.infinite_tail ? Json(*pm.infinite_tail) : Json(nullptr);
  sink.write_json(a.out, j);
  return kExitOk;
}

CountableEpsFamily family_from(const std::string& f) {
  if (f == "halves") return CountableEpsFamily::halves;
  if (f == "quarters") return CountableEpsFamily::quarters;
  if (f == "quarters_gauss") return CountableEpsFamily::quarters_gauss;
  throw InvalidArgument("--family must be halves, quarters or quarters_gauss");
}

int cmd_div_profile(const DivergenceArgs& a, const Sink& sink) {
  if (a.M < 1) throw InvalidArgument("profile: need --M >= 1");
  const CountableEpsRule eps{family_from(a.family), a.eps_scale};
  std::vector<double> r;
  if (a.has_probe)
    r = condition15_profile(eps, a.points, a.probe, a.M);
  else
    r = condition15_profile(eps, DeltaRule::geometric(a.delta_scale, a.delta_ratio), a.M);
  Json j;
  j["family"] = a.family;
  j["r"] = r;
  sink.write_json(a.out, j);
  return kExitOk;
}

int cmd_div_rogosinski(const DivergenceArgs& a, const Sink& sink) {
  const TrigPoly p = poly_or_series(a);
  if (a.ns.empty()) throw InvalidArgument("rogosinski: need --ns");
  const Complex s = a.has_s ? Complex(a.s_re, a.s_im) : eval(p, a.t0);
  const auto probe = RogosinskiProbe::with_phase(a.t0, s, a.ns, a.phi, a.wa, a.wb);
  Json j;
  j["t0"] = a.t0;
  j["s"] = complex_json(s);
  j["phi"] = a.phi;
  j["n"] = a.ns;
  for (bool sym : {false, true}) {
    Json vals = Json::array(), mags = Json::array();
    for (auto z : rogosinski_residual(p, probe, sym)) {
      vals.push_back(complex_json(z));
      mags.push_back(std::abs(z));
    }
    const char* key = sym ? "symmetric" : "plain";
    j[key] = {{"residual", std::move(vals)}, {"abs", std::move(mags)}};
  }
  sink.write_json(a.out, j);
  return kExitOk;
}

struct CantorArgs {
  std::string a = "2", b = "5", out;
  std::int64_t n_min = 1, n_max = 1, n = 1;
  std::vector<int> digits;
  int t0 = -1;  // 0 or 1: all-0 / all-2 digits
  int depth = 0;
  std::string lo, hi;
};

int cmd_cantor_sweep(const CantorArgs& a, const Sink& sink, std::ostream& err) {
  const auto rep = property20_sweep(parse_rational(a.a), parse_rational(a.b), a.n_min, a.n_max);
  std::ostringstream os;
  write_sweep20_csv(os, rep);
  sink.write(a.out, os.str());
  err << "sweep20: hits=" << rep.hits << " misses=" << rep.misses << " disagreements=" << rep.disagreements << '\n';
  return kExitOk;
}

int cmd_cantor_construct(const CantorArgs& a, const Sink& sink) {
  TernaryPoint t0;
  if (!a.digits.empty()) {
    t0.digits = a.digits;
  } else if (a.t0 == 0 || a.t0 == 1) {
    if (a.depth < 1) throw InvalidArgument("construct21: --t0 needs --depth >= 1");
    t0 = TernaryPoint::repeat(a.t0 == 0 ? 0 : 2, static_cast<std::size_t>(a.depth));
  } else {
    throw InvalidArgument("construct21: need --digits or --t0 0|1 with --depth");
  }
  const auto r = property21_construct(t0, parse_rational(a.a), parse_rational(a.b), a.n);
  Json j = property21_json(r);
  j["n"] = a.n;
  sink.write_json(a.out, j);
  return kExitOk;
}

int cmd_cantor_hits(const CantorArgs& a, const Sink& sink) {
  const Rational lo = parse_rational(a.lo), hi = parse_rational(a.hi);
  Json j;
  j["lo"] = to_fraction_string(lo);
  j["hi"] = to_fraction_string(hi);
  j["depth"] = a.depth;
  j["hit"] = interval_hits_cantor(lo, hi, a.depth);
  sink.write_json(a.out, j);
  return kExitOk;
}

int cmd_cantor_symmetric(const CantorArgs& a, const Sink& sink) {
  Json arr = Json::array();
  for (const auto& iv : symmetric_double(a.depth)) arr.push_back(fraction_pair(iv.lo, iv.hi));
  sink.write_json(a.out, Json{{"depth", a.depth}, {"intervals", std::move(arr)}});
  return kExitOk;
}

struct VerifyArgs {
  std::string series, out;
  std::int64_t grid = 256;
};

int cmd_verify(const VerifyArgs& a, const Sink& sink) {
  const UniversalSeries s = load_series(a.series);
  Json checks;
  bool all = true;
  auto record = [&](const char* name, bool pass, Json detail) {
    checks[name] = {{"pass", pass}, {"detail", std::move(detail)}};
    all = all && pass;
  };

  const std::int64_t min_k = s.assembled.empty() ? 1 : s.assembled.lo();
  record("min_frequency", min_k >= 1, min_k);

  bool sep = true;
  for (std::size_t i = 0; i + 1 < s.schedule.size(); ++i) {
    const auto& e = s.schedule[i];
    const auto& f = s.schedule[i + 1];
    sep = sep && 3 * e.order.N + e.order.n < f.order.N - f.order.n;
  }
  record("block_separation", sep, static_cast<std::int64_t>(s.schedule.size()));

  std::int64_t stray = 0;
  for (const auto& c : s.assembled.terms())
    if (!s.schedule.find_block(c.k)) ++stray;
  record("spectrum_in_blocks", stray == 0, stray);

  if (s.kind == SeriesKind::single_point) {
    double worst = 0.0;
    const double t0 = s.spec.points[0];
    const PartialSumProfile prof(s.assembled, t0);
    for (const auto& cp : s.checkpoints) {
      const Complex c = cp.expected[0];
      worst = std::max(worst, std::abs(prof.at(cp.n) - c) / (1.0 + std::abs(c)));
    }
    record("checkpoints", worst < 1e-9, worst);
  }

  if (s.certified()) {
    const auto ts = grid_or_list({}, a.grid);
    double worst_ratio = 0.0;
    for (double t : ts) {
      const PartialSumProfile prof(s.assembled, t);
      const Complex value = prof.at(s.assembled.max_abs_frequency());
      for (std::size_t i = 0; i < s.schedule.size(); ++i) {
        const std::int64_t n =
            i + 1 < s.schedule.size() ? s.schedule[i + 1].block.lo - 1 : s.assembled.max_abs_frequency();
        const double bound = s.tail_after_entry(i);
        const double diff = std::abs(prof.at(n) - value);
        worst_ratio = std::max(worst_ratio, bound > 0.0 ? diff / bound : (diff > 0.0 ? 1e300 : 0.0));
      }
    }
    record("gap_index", worst_ratio <= 1.0, worst_ratio);
  }

  Json j;
  j["kind"] = kind_name(s.kind);
  j["certified"] = s.certified();
  j["tail_bound"] = s.tail_bound;
  j["checks"] = std::move(checks);
  j["pass"] = all;
  sink.write_json(a.out, j);
  return all ? kExitOk : kExitNumeric;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universal Fourier series toolkit", "ufourier"};
  app.require_subcommand(1);
  const Sink sink{out};

  FejerArgs fa;
  auto* fejer = app.add_subcommand("fejer", "Fejer polynomial Q_{N,n} or a scaled block");
  fejer->add_option("--N", fa.N, "Centre frequency N")->required();
  fejer->add_option("--n", fa.n, "Order n < N")->required();
  auto* cre = fejer->add_option("--c-re", fa.c_re, "Target real part (rational)");
  auto* cim = fejer->add_option("--c-im", fa.c_im, "Target imaginary part (rational)");
  fejer->add_option("--eps", fa.eps, "Budget for strict mode");
  fejer->add_option("--mode", fa.mode, "strict or relaxed");
  fejer->add_option("--kappa", fa.kappa, "Strict-mode constant");
  fejer->add_option("--sup-grid", fa.sup_grid, "Also report a grid sup-norm estimate");
  fejer->add_option("--out", fa.out, "Output JSON (default stdout)");

  BuildArgs ba;
  auto* build = app.add_subcommand("build", "Build a series from a JSON spec and write its manifest");
  build->add_option("--spec", ba.spec, "Series spec JSON")->required();
  build->add_option("--out", ba.out, "Manifest JSON (default stdout)");
  build->add_option("--coeffs", ba.coeffs, "Also write the assembled coefficients");

  EvalArgs ea;
  auto* evalc = app.add_subcommand("eval", "Partial sums S_n(f, t) as CSV (n,t,re,im)");
  evalc->add_option("--series", ea.series, "Manifest or spec JSON")->required();
  evalc->add_option("--n", ea.n, "Indices (default: the checkpoints)")->delimiter(',');
  evalc->add_option("--t", ea.t, "Angles (default: the series points)")->delimiter(',');
  evalc->add_option("--grid", ea.grid, "Uniform grid 2 pi i / G instead of --t");
  evalc->add_option("--out", ea.out, "Output CSV (default stdout)");

  UsearchArgs ua;
  auto* usearch = app.add_subcommand("usearch", "Find partial-sum indices approximating targets");
  usearch->add_option("--series", ua.series, "Manifest or spec JSON")->required();
  usearch->add_option("--targets", ua.targets, "Targets JSON")->required();
  usearch->add_option("--delta", ua.delta, "Tolerance (finite builds)");
  usearch->add_option("--stages", ua.stages, "Number of stages (countable builds)");
  usearch->add_option("--deltas", ua.deltas, "Per-stage tolerances (default 1/N)")->delimiter(',');
  usearch->add_option("--out", ua.out, "Output JSON (default stdout)");

  DivergenceArgs da;
  auto* div = app.add_subcommand("divergence", "Divergence diagnostics");
  div->require_subcommand(1);
  auto* scan = div->add_subcommand("scan", "Oscillation of S_n(t) over n >= n-min");
  scan->add_option("--series", da.series, "Manifest or spec JSON");
  scan->add_option("--poly", da.poly, "Coefficient JSON");
  scan->add_option("--n-min", da.n_min, "Smallest n")->required();
  scan->add_option("--t", da.t, "Angles")->delimiter(',');
  scan->add_option("--grid", da.grid, "Uniform grid size");
  scan->add_option("--tol", da.tol, "Oscillation below this is 'settled'");
  scan->add_option("--out", da.out, "Output CSV (default stdout)");
  auto* prem = div->add_subcommand("premeasure", "sum (2 delta_m)^a for delta_m = scale * ratio^m");
  prem->add_option("--delta-scale", da.delta_scale, "scale");
  prem->add_option("--delta-ratio", da.delta_ratio, "ratio (default 1/e)");
  prem->add_option("--a", da.a, "Exponent a > 0");
  prem->add_option("--m0", da.m0, "First index");
  prem->add_option("--M", da.M, "Last index")->required();
  prem->add_option("--out", da.out, "Output JSON (default stdout)");
  auto* prof = div->add_subcommand("profile", "r_m = max_j eps_{m,j} sum_{l<=m} 1/delta_l");
  prof->add_option("--family", da.family, "halves, quarters or quarters_gauss");
  prof->add_option("--eps-scale", da.eps_scale, "eps scale");
  prof->add_option("--delta-scale", da.delta_scale, "delta scale");
  prof->add_option("--delta-ratio", da.delta_ratio, "delta ratio (default 1/e)");
  prof->add_option("--points", da.points, "Points t_l for the probe form")->delimiter(',');
  auto* probe_opt = prof->add_option("--probe", da.probe, "Probe angle t (uses |t - t_l|)");
  prof->add_option("--M", da.M, "Rows")->required();
  prof->add_option("--out", da.out, "Output JSON (default stdout)");
  auto* rog = div->add_subcommand("rogosinski", "Rogosinski residuals at theta_j = phi / n_j");
  rog->add_option("--series", da.series, "Manifest or spec JSON");
  rog->add_option("--poly", da.poly, "Coefficient JSON");
  rog->add_option("--t0", da.t0, "Base point");
  auto* sre = rog->add_option("--s-re", da.s_re, "Limit value, real part (default f(t0))");
  auto* sim = rog->add_option("--s-im", da.s_im, "Limit value, imaginary part");
  rog->add_option("--phi", da.phi, "n_j theta_j");
  rog->add_option("--ns", da.ns, "Indices n_j")->delimiter(',')->required();
  rog->add_option("--window-a", da.wa, "Window lower end a");
  rog->add_option("--window-b", da.wb, "Window upper end b");
  rog->add_option("--out", da.out, "Output JSON (default stdout)");

  CantorArgs ca;
  auto* cantor = app.add_subcommand("cantor", "Exact ternary Cantor set geometry");
  cantor->require_subcommand(1);
  auto* sweep = cantor->add_subcommand("sweep20", "Does [a/n, b/n] meet C, n in a range");
  sweep->add_option("--a", ca.a, "a (rational)");
  sweep->add_option("--b", ca.b, "b (rational)");
  sweep->add_option("--n-min", ca.n_min, "First n")->required();
  sweep->add_option("--n-max", ca.n_max, "Last n")->required();
  sweep->add_option("--out", ca.out, "Output CSV (default stdout)");
  auto* cons = cantor->add_subcommand("construct21", "t_n and theta for t0 in C");
  cons->add_option("--digits", ca.digits, "Ternary digits of t0 (0 or 2)")->delimiter(',');
  cons->add_option("--t0", ca.t0, "0 or 1 (all-0 or all-2 digits)");
  cons->add_option("--depth", ca.depth, "Digits for --t0");
  cons->add_option("--a", ca.a, "a (rational)");
  cons->add_option("--b", ca.b, "b (rational)");
  cons->add_option("--n", ca.n, "n")->required();
  cons->add_option("--out", ca.out, "Output JSON (default stdout)");
  auto* hitsc = cantor->add_subcommand("hits", "Does [lo, hi] meet the stage-D set");
  hitsc->add_option("--lo", ca.lo, "lo (rational)")->required();
  hitsc->add_option("--hi", ca.hi, "hi (rational)")->required();
  hitsc->add_option("--depth", ca.depth, "Stage depth")->required();
  hitsc->add_option("--out", ca.out, "Output JSON (default stdout)");
  auto* symc = cantor->add_subcommand("symmetric", "Stage intervals of C and -C");
  symc->add_option("--depth", ca.depth, "Stage depth")->required();
  symc->add_option("--out", ca.out, "Output JSON (default stdout)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Structural and certificate checks on a series");
  verify->add_option("--series", va.series, "Manifest or spec JSON")->required();
  verify->add_option("--grid", va.grid, "Grid for the gap-index check");
  verify->add_option("--out", va.out, "Output JSON (default stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ufourier: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return kExitUsage;
  }

  try {
    if (fejer->parsed()) {
      fa.scaled = cre->count() > 0 || cim->count() > 0;
      return cmd_fejer(fa, sink);
    }
    if (build->parsed()) return cmd_build(ba, sink);
    if (evalc->parsed()) return cmd_eval(ea, sink);
    if (usearch->parsed()) return cmd_usearch(ua, sink, err);
    if (scan->parsed()) return cmd_div_scan(da, sink);
    if (prem->parsed()) return cmd_div_premeasure(da, sink);
    if (prof->parsed()) {
      da.has_probe = probe_opt->count() > 0;
      return cmd_div_profile(da, sink);
    }
    if (rog->parsed()) {
      da.has_s = sre->count() > 0 || sim->count() > 0;
      return cmd_div_rogosinski(da, sink);
    }
    if (sweep->parsed()) return cmd_cantor_sweep(ca, sink, err);
    if (cons->parsed()) return cmd_cantor_construct(ca, sink);
    if (hitsc->parsed()) return cmd_cantor_hits(ca, sink);
    if (symc->parsed()) return cmd_cantor_symmetric(ca, sink);
    if (verify->parsed()) return cmd_verify(va, sink);
  } catch (const QuotaError& e) {
    err << "ufourier: quota: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const NoHit& e) {
    err << "ufourier: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const StageInfeasible& e) {
    err << "ufourier: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const Error& e) {
    err << "ufourier: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace ufourier::cli
