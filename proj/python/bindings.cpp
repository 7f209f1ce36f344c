#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ufourier/cantor.hpp"
#include "ufourier/cli.hpp"
#include "ufourier/divergence.hpp"
#include "ufourier/errors.hpp"
#include "ufourier/fejer.hpp"
#include "ufourier/json_io.hpp"
#include "ufourier/universality.hpp"

namespace py = pybind11;
using namespace ufourier;

namespace {

// Rationals cross the boundary as "p/q" strings.
Rational q(const std::string& s) { return parse_rational(s); }
std::string s(const Rational& r) { return to_fraction_string(r); }

py::dict hit_dict(const HitReport& r) {
  return py::module_::import("json").attr("loads")(hit_report_json(r).dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Universal Fourier series toolkit (C++ core)";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
  py::register_exception<QuotaError>(m, "QuotaError", error.ptr());
  py::register_exception<PrefixTooShort>(m, "PrefixTooShort", error.ptr());
  py::register_exception<NoHit>(m, "NoHit", error.ptr());
  py::register_exception<StageInfeasible>(m, "StageInfeasible", error.ptr());

  py::class_<TrigPoly>(m, "TrigPoly")
      .def(py::init<>())
      .def_static("from_values", &TrigPoly::from_values, py::arg("coeffs"))
      .def_static(
          "from_fractions",
          [](const std::vector<std::tuple<std::int64_t, std::string, std::string>>& cs) {
            std::vector<std::pair<std::int64_t, ComplexQ>> v;
            for (const auto& [k, re, im] : cs) v.emplace_back(k, ComplexQ(q(re), q(im)));
            return TrigPoly::from_exact(std::move(v));
          },
          py::arg("coeffs"), "Exact coefficients as (k, 'p/q', 'p/q').")
      .def("terms",
           [](const TrigPoly& p) {
             std::vector<std::pair<std::int64_t, Complex>> out;
             for (const auto& c : p.terms()) out.emplace_back(c.k, c.value);
             return out;
           })
      .def("exact_terms",
           [](const TrigPoly& p) {
             std::vector<std::tuple<std::int64_t, std::string, std::string>> out;
             for (const auto& c : p.terms()) {
               if (!c.exact) throw InvalidArgument("exact_terms: polynomial has inexact coefficients");
               out.emplace_back(c.k, s(c.exact->re), s(c.exact->im));
             }
             return out;
           })
      .def("coeff", &TrigPoly::coeff)
      .def("__len__", &TrigPoly::size)
      .def_property_readonly("lo", &TrigPoly::lo)
      .def_property_readonly("hi", &TrigPoly::hi)
      .def("is_exact", &TrigPoly::is_exact)
      .def("modulated", &TrigPoly::modulated)
      .def("translated", &TrigPoly::translated)
      .def("scaled", py::overload_cast<Complex>(&TrigPoly::scaled, py::const_))
      .def("__add__", [](const TrigPoly& a, const TrigPoly& b) { return a + b; })
      .def("__eq__", [](const TrigPoly& a, const TrigPoly& b) { return a == b; })
      .def("__call__", [](const TrigPoly& p, double t) { return eval(p, t); });

  m.def("eval", &eval, py::arg("p"), py::arg("t"));
  m.def("partial_sum", &partial_sum, py::arg("p"), py::arg("n"), py::arg("t"));
  m.def("cesaro_mean", &cesaro_mean, py::arg("p"), py::arg("n"), py::arg("t"));
  m.def("sup_norm_estimate", &sup_norm_estimate, py::arg("p"), py::arg("grid_points"));
  m.def("coeff_total_variation", &coeff_total_variation, py::arg("p"));
  m.def(
      "exact_coeff_total_variation",
      [](const TrigPoly& p) -> std::optional<std::string> {
        auto v = exact_coeff_total_variation(p);
        return v ? std::optional<std::string>(s(*v)) : std::nullopt;
      },
      py::arg("p"));
  m.def("harmonic_exact", [](std::int64_t n) { return s(harmonic_exact(n)); }, py::arg("n"));

  m.def("fejer_coeffs", [](std::int64_t N, std::int64_t n) { return fejer_coeffs(FejerOrder(N, n)); },
        py::arg("N"), py::arg("n"));
  m.def(
      "fejer_resonance",
      [](std::int64_t N, std::int64_t n) -> py::object {
        const auto r = fejer_resonance(FejerOrder(N, n));
        return r.exact ? py::object(py::str(s(*r.exact))) : py::object(py::float_(r.value));
      },
      py::arg("N"), py::arg("n"), "H_n as 'p/q', or a float past the exact-order limit.");
  m.def(
      "scaled_fejer",
      [](std::int64_t N, std::int64_t n, const std::string& c_re, const std::string& c_im, double eps,
         bool strict, double kappa) {
        return scaled_fejer({FejerOrder(N, n), ComplexQ(q(c_re), q(c_im)), eps,
                             strict ? CertMode::strict : CertMode::relaxed, kappa});
      },
      py::arg("N"), py::arg("n"), py::arg("c_re"), py::arg("c_im") = "0", py::arg("eps") = 1.0,
      py::arg("strict") = false, py::arg("kappa") = kDefaultKappa);
  m.def("pick_order", &pick_order, py::arg("c"), py::arg("eps"), py::arg("kappa") = kDefaultKappa,
        py::arg("cap") = kDefaultOrderCap);

  py::class_<UniversalSeries>(m, "UniversalSeries")
      .def_readonly("assembled", &UniversalSeries::assembled)
      .def_readonly("tail_bound", &UniversalSeries::tail_bound)
      .def("certified", &UniversalSeries::certified)
      .def("tail_after_entry", &UniversalSeries::tail_after_entry)
      .def_property_readonly("kind", [](const UniversalSeries& x) { return kind_name(x.kind); })
      .def_property_readonly("points", [](const UniversalSeries& x) { return x.spec.points; })
      .def("schedule",
           [](const UniversalSeries& x) {
             return py::module_::import("json").attr("loads")(schedule_json(x.schedule).dump());
           })
      .def("checkpoints",
           [](const UniversalSeries& x) {
             std::vector<std::pair<std::int64_t, std::vector<Complex>>> out;
             for (const auto& c : x.checkpoints) out.emplace_back(c.n, c.expected);
             return out;
           })
      .def("manifest", [](const UniversalSeries& x) { return manifest_json(x).dump(); })
      .def("coeff", [](const UniversalSeries& x, std::int64_t k) { return series_coeff(x, k); })
      .def("value",
           [](const UniversalSeries& x, double t) {
             auto v = series_value(x, t);
             return std::make_pair(v.value, v.err);
           })
      .def("partial_sum", [](const UniversalSeries& x, std::int64_t n, double t) {
        return partial_sum(x.assembled, n, t);
      });

  m.def(
      "build_series",
      [](const std::string& spec_json_text) {
        SeriesKind kind = SeriesKind::single_point;
        SeriesSpec spec = spec_from_json(Json::parse(spec_json_text), &kind);
        return build_series(kind, spec);
      },
      py::arg("spec_json"), "Build from a JSON spec string (same format as the CLI).");

  m.def(
      "usearch_finite",
      [](const UniversalSeries& x, const std::vector<Complex>& h, double delta) {
        TargetFunction tf;
        for (std::size_t l = 0; l < h.size(); ++l) tf.entries.push_back({l, h[l]});
        return hit_dict(usearch_finite(x, tf, delta));
      },
      py::arg("series"), py::arg("targets"), py::arg("delta"));
  m.def(
      "usearch_staged",
      [](const UniversalSeries& x, const std::vector<Complex>& h, std::int64_t stages) {
        TargetFunction tf;
        for (std::size_t l = 0; l < h.size(); ++l) tf.entries.push_back({l, h[l]});
        py::list out;
        for (const auto& r : usearch_staged(x, tf, stages)) out.append(hit_dict(r));
        return out;
      },
      py::arg("series"), py::arg("targets"), py::arg("stages"));

  m.def(
      "premeasure",
      [](double scale, double ratio, double a, std::int64_t m0, std::int64_t M) {
        const auto cover = build_cover(DeltaRule::geometric(scale, ratio),
                                       std::vector<double>(static_cast<std::size_t>(M), 0.0), M);
        const auto p = premeasure(cover, a, m0, M);
        return std::make_pair(p.partial, p.infinite_tail);
      },
      py::arg("scale"), py::arg("ratio"), py::arg("a"), py::arg("m0"), py::arg("M"));
  m.def(
      "condition15_profile",
      [](const std::string& family, double eps_scale, double delta_scale, double delta_ratio, std::int64_t M) {
        CountableEpsFamily f = family == "halves"     ? CountableEpsFamily::halves
                               : family == "quarters" ? CountableEpsFamily::quarters
                                                      : CountableEpsFamily::quarters_gauss;
        if (family != "halves" && family != "quarters" && family != "quarters_gauss")
          throw InvalidArgument("family must be halves, quarters or quarters_gauss");
        return condition15_profile(CountableEpsRule{f, eps_scale}, DeltaRule::geometric(delta_scale, delta_ratio),
                                   M);
      },
      py::arg("family"), py::arg("eps_scale"), py::arg("delta_scale"), py::arg("delta_ratio"), py::arg("M"));
  m.def(
      "rogosinski_residual",
      [](const TrigPoly& p, double t0, Complex sv, const std::vector<std::int64_t>& ns, double phi, double a,
         double b, bool symmetric) {
        return rogosinski_residual(p, RogosinskiProbe::with_phase(t0, sv, ns, phi, a, b), symmetric);
      },
      py::arg("p"), py::arg("t0"), py::arg("s"), py::arg("ns"), py::arg("phi"), py::arg("a") = 0.5,
      py::arg("b") = 1.5, py::arg("symmetric") = false);

  m.def(
      "interval_hits_cantor",
      [](const std::string& lo, const std::string& hi, int depth) { return interval_hits_cantor(q(lo), q(hi), depth); },
      py::arg("lo"), py::arg("hi"), py::arg("depth"));
  m.def("in_cantor", [](const std::string& x) { return in_cantor(q(x)); }, py::arg("x"));
  m.def(
      "property20_sweep",
      [](const std::string& a, const std::string& b, std::int64_t n_min, std::int64_t n_max) {
        const auto r = property20_sweep(q(a), q(b), n_min, n_max);
        py::dict d;
        d["hits"] = r.hits;
        d["misses"] = r.misses;
        d["disagreements"] = r.disagreements;
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("n_min"), py::arg("n_max"));
  m.def(
      "property21_construct",
      [](const std::vector<int>& digits, const std::string& a, const std::string& b, std::int64_t n) {
        return py::module_::import("json").attr("loads")(
            property21_json(property21_construct(TernaryPoint{digits}, q(a), q(b), n)).dump());
      },
      py::arg("digits"), py::arg("a"), py::arg("b"), py::arg("n"));
  m.def(
      "symmetric_double",
      [](int depth) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& iv : symmetric_double(depth)) out.emplace_back(s(iv.lo), s(iv.hi));
        return out;
      },
      py::arg("depth"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        std::vector<std::string> argv{"ufourier"};
        argv.insert(argv.end(), args.begin(), args.end());
        const int code = cli::run(argv, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the CLI in-process; returns (exit code, stdout, stderr).");
}
