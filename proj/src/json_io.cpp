#include "ufourier/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "ufourier/errors.hpp"

namespace ufourier {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_object()) return {j.value("re", 0.0), j.value("im", 0.0)};
  throw InvalidArgument("expected a complex number as [re, im], a number or {re, im}");
}

Json trigpoly_json(const TrigPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.terms()) {
    Json t;
    t["k"] = c.k;
    t["re"] = fmt17(c.value.real());
    t["im"] = fmt17(c.value.imag());
    if (c.exact) {
      t["re_exact"] = to_fraction_string(c.exact->re);
      t["im_exact"] = to_fraction_string(c.exact->im);
    }
    out.push_back(std::move(t));
  }
  return out;
}

TrigPoly trigpoly_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("trigpoly: expected an array of coefficient records");
  bool exact = !j.empty();
  for (const auto& t : j)
    if (!t.contains("re_exact") || !t.contains("im_exact")) exact = false;
  auto num = [](const Json& v) {
    return v.is_string() ? std::stod(v.get<std::string>()) : v.get<double>();
  };
  if (exact) {
    std::vector<std::pair<std::int64_t, ComplexQ>> cs;
    for (const auto& t : j)
      cs.emplace_back(t.at("k").get<std::int64_t>(),
                      ComplexQ(parse_rational(t.at("re_exact").get<std::string>()),
                               parse_rational(t.at("im_exact").get<std::string>())));
    return TrigPoly::from_exact(std::move(cs));
  }
  std::vector<std::pair<std::int64_t, Complex>> cs;
  for (const auto& t : j)
    cs.emplace_back(t.at("k").get<std::int64_t>(), Complex(num(t.value("re", Json(0.0))), num(t.value("im", Json(0.0)))));
  return TrigPoly::from_values(std::move(cs));
}

Json label_json(const BlockLabel& label) {
  Json j;
  j["m"] = label.m ? Json(*label.m) : Json(nullptr);
  j["j"] = label.j;
  return j;
}

Json schedule_json(const BlockSchedule& s) {
  Json out = Json::array();
  for (const auto& e : s.entries()) {
    Json j;
    j["m"] = e.label.m ? Json(*e.label.m) : Json(nullptr);
    j["j"] = e.label.j;
    j["N"] = e.order.N;
    j["n"] = e.order.n;
    j["lo"] = e.block.lo;
    j["hi"] = e.block.hi;
    out.push_back(std::move(j));
  }
  return out;
}

std::string kind_name(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::single_point: return "single_point";
    case SeriesKind::finite: return "finite";
    case SeriesKind::countable: return "countable";
  }
  return "?";
}

SeriesKind kind_from_name(const std::string& name) {
  if (name == "single_point") return SeriesKind::single_point;
  if (name == "finite") return SeriesKind::finite;
  if (name == "countable") return SeriesKind::countable;
  throw InvalidArgument("unknown series kind '" + name + "' (single_point, finite, countable)");
}

namespace {

std::string family_name(CountableEpsFamily f) {
  switch (f) {
    case CountableEpsFamily::halves: return "halves";
    case CountableEpsFamily::quarters: return "quarters";
    case CountableEpsFamily::quarters_gauss: return "quarters_gauss";
  }
  return "?";
}

CountableEpsFamily family_from_name(const std::string& name) {
  if (name == "halves") return CountableEpsFamily::halves;
  if (name == "quarters") return CountableEpsFamily::quarters;
  if (name == "quarters_gauss") return CountableEpsFamily::quarters_gauss;
  throw InvalidArgument("unknown eps family '" + name + "' (halves, quarters, quarters_gauss)");
}

}  // namespace

Json spec_json(SeriesKind kind, const SeriesSpec& spec) {
  Json j;
  j["kind"] = kind_name(kind);
  j["points"] = spec.points;
  j["mode"] = spec.mode == CertMode::strict ? "strict" : "relaxed";
  j["truncation"] = spec.truncation;
  j["finite_eps"] = {{"scale", spec.finite_eps.scale}};
  j["countable_eps"] = {{"family", family_name(spec.countable_eps.family)}, {"scale", spec.countable_eps.scale}};
  j["relaxed_orders"] = spec.relaxed_orders;
  j["kappa"] = spec.kappa;
  j["order_cap"] = spec.order_cap;
  j["margin"] = spec.margin;
  j["freq_cap"] = spec.freq_cap;
  Json targets;
  targets["scale"] = spec.targets.scale;
  Json ex = Json::array();
  for (const auto& row : spec.targets.explicit_targets) {
    Json r = Json::array();
    for (auto z : row) r.push_back(complex_json(z));
    ex.push_back(std::move(r));
  }
  targets["explicit"] = std::move(ex);
  j["targets"] = std::move(targets);
  return j;
}

SeriesSpec spec_from_json(const Json& j, SeriesKind* kind) {
  if (!j.is_object()) throw InvalidArgument("series spec: expected a JSON object");
  SeriesSpec s;
  try {
    const auto parsed_kind = kind_from_name(j.value("kind", std::string("single_point")));
    if (kind) *kind = parsed_kind;
    if (!j.contains("points")) throw InvalidArgument("series spec: 'points' is required");
    s.points = j.at("points").get<std::vector<double>>();
    const auto mode = j.value("mode", std::string("relaxed"));
    if (mode == "strict")
      s.mode = CertMode::strict;
    else if (mode == "relaxed")
      s.mode = CertMode::relaxed;
    else
      throw InvalidArgument("series spec: mode must be 'strict' or 'relaxed'");
    s.truncation = j.value("truncation", s.truncation);
    if (j.contains("finite_eps")) s.finite_eps.scale = j["finite_eps"].value("scale", 1.0);
    if (j.contains("countable_eps")) {
      const auto& c = j["countable_eps"];
      s.countable_eps.family = family_from_name(c.value("family", std::string("halves")));
      s.countable_eps.scale = c.value("scale", 1.0);
    }
    if (j.contains("relaxed_orders")) s.relaxed_orders = j["relaxed_orders"].get<std::vector<std::int64_t>>();
    s.kappa = j.value("kappa", s.kappa);
    s.order_cap = j.value("order_cap", s.order_cap);
    s.margin = j.value("margin", s.margin);
    s.freq_cap = j.value("freq_cap", s.freq_cap);
    if (j.contains("targets")) {
      const auto& t = j["targets"];
      s.targets.scale = t.value("scale", 1.0);
      if (t.contains("explicit"))
        for (const auto& row : t["explicit"]) {
          std::vector<Complex> r;
          for (const auto& z : row) r.push_back(complex_from_json(z));
          s.targets.explicit_targets.push_back(std::move(r));
        }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("series spec: ") + e.what());
  }
  return s;
}

Json manifest_json(const UniversalSeries& s) {
  Json j;
  j["kind"] = kind_name(s.kind);
  j["spec"] = spec_json(s.kind, s.spec);
  j["schedule"] = schedule_json(s.schedule);
  Json terms = Json::array();
  for (const auto& t : s.terms) {
    const auto& e = s.schedule[t.entry];
    Json r;
    r["label"] = label_json(t.label);
    r["l"] = t.point + 1;
    r["c"] = complex_json(t.target_value);
    r["c_exact"] = Json::array({to_fraction_string(t.target.re), to_fraction_string(t.target.im)});
    r["N"] = e.order.N;
    r["n"] = e.order.n;
    terms.push_back(std::move(r));
  }
  j["terms"] = std::move(terms);
  j["tail_bound"] = s.tail_bound;
  j["certified"] = s.certified();
  return j;
}

UniversalSeries series_from_manifest(const Json& j) {
  const Json& spec = j.contains("spec") ? j.at("spec") : j;
  SeriesKind kind = SeriesKind::single_point;
  SeriesSpec s = spec_from_json(spec, &kind);
  return build_series(kind, s);
}

Json hit_report_json(const HitReport& r) {
  Json j;
  j["success"] = r.success;
  j["n"] = r.n;
  j["label"] = label_json(r.label);
  Json pts = Json::array();
  for (auto p : r.points) pts.push_back(p + 1);
  j["l"] = std::move(pts);
  Json tg = Json::array(), ach = Json::array();
  for (auto z : r.targets) tg.push_back(complex_json(z));
  for (auto z : r.achieved) ach.push_back(complex_json(z));
  j["targets"] = std::move(tg);
  j["achieved"] = std::move(ach);
  j["errors"] = r.errors;
  j["max_error"] = r.max_error;
  j["predicted_error"] = r.predicted_error;
  if (r.stage) {
    j["stage"] = *r.stage;
    j["stage_m"] = *r.stage_m;
    j["stage_delta"] = *r.stage_delta;
    j["stage_tail"] = *r.stage_tail;
    j["stage_tail_exact"] = r.stage_tail_exact;
  }
  return j;
}

TargetFunction targets_from_json(const Json& j) {
  TargetFunction h;
  try {
    if (j.contains("values")) {
      std::size_t l = 0;
      for (const auto& v : j.at("values")) h.entries.push_back({l++, complex_from_json(v)});
    } else if (j.contains("entries")) {
      for (const auto& e : j.at("entries")) {
        const auto l = e.at("l").get<std::int64_t>();
        if (l < 1) throw InvalidArgument("targets: l is 1-based");
        h.entries.push_back({static_cast<std::size_t>(l - 1), complex_from_json(e.at("value"))});
      }
    } else {
      throw InvalidArgument("targets: expected 'values' or 'entries'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("targets: ") + e.what());
  }
  return h;
}

void write_oscillation_csv(std::ostream& out, const std::vector<OscillationRow>& rows) {
  out << "t,osc_re,osc_im,last_re,last_im,tag\n";
  for (const auto& r : rows)
    out << fmt17(r.t) << ',' << fmt17(r.osc_re) << ',' << fmt17(r.osc_im) << ',' << fmt17(r.last.real()) << ','
        << fmt17(r.last.imag()) << ',' << (r.settled ? "settled" : "oscillating") << '\n';
}

void write_sweep20_csv(std::ostream& out, const Property20Report& rep) {
  out << "n,N,hit_point,hit\n";
  for (const auto& r : rep.rows)
    out << r.n << ',' << r.N << ',' << (r.hit_point ? to_fraction_string(*r.hit_point) : std::string()) << ','
        << (r.hit ? 1 : 0) << '\n';
}

Json property21_json(const Property21Result& r) {
  Json j;
  j["N"] = r.N;
  j["I_N"] = Json::array({to_fraction_string(r.interval_lo), to_fraction_string(r.interval_hi)});
  j["half"] = r.lower_half ? "lower" : "upper";
  j["t_n"] = to_fraction_string(r.t_n);
  j["theta"] = to_fraction_string(r.theta);
  j["checks"] = {{"t_n_in_C", r.t_n_in_cantor},
                 {"neighbours_in_C", r.neighbours_in_cantor},
                 {"theta_window", r.theta_window}};
  j["passed"] = r.passed();
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("'" + path + "': " + e.what());
  }
}

}  // namespace ufourier
