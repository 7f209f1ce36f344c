#include <doctest.h>

#include <sstream>

#include "ufourier/errors.hpp"
#include "ufourier/fejer.hpp"
#include "ufourier/json_io.hpp"

using namespace ufourier;

TEST_CASE("fmt17 round-trips doubles") {
  for (double x : {0.1, -1.0 / 3.0, 1e-300, 6.02214076e23, 0.0}) CHECK(std::stod(fmt17(x)) == x);
  CHECK(fmt17(0.5) == "0.5");
}

TEST_CASE("complex_from_json accepts three shapes") {
  CHECK(complex_from_json(Json(2.5)) == Complex(2.5, 0));
  CHECK(complex_from_json(Json::parse("[1, -2]")) == Complex(1, -2));
  CHECK(complex_from_json(Json::parse(R"({"im": 3})")) == Complex(0, 3));
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"("x")")), InvalidArgument);
}

TEST_CASE("trigpoly JSON round trip, exact and inexact") {
  const auto q = fejer_coeffs(FejerOrder(7, 4));
  auto back = trigpoly_from_json(trigpoly_json(q));
  CHECK(back == q);
  CHECK(back.is_exact());
  auto p = TrigPoly::from_values({{-3, {0.1, 0.2}}, {9, {1e-17, -4}}});
  auto pb = trigpoly_from_json(trigpoly_json(p));
  CHECK(pb.coeff(-3) == p.coeff(-3));
  CHECK(pb.coeff(9) == p.coeff(9));
  const auto rec = trigpoly_json(q)[0];
  CHECK(rec["k"] == -11);
  CHECK(rec["re_exact"] == "-1/8");
  CHECK(rec["re"] == "-0.125");
}

TEST_CASE("spec JSON round trip") {
  SeriesSpec s;
  s.points = {0.0, 2.0, 4.5};
  s.mode = CertMode::strict;
  s.truncation = 3;
  s.finite_eps.scale = 0.5;
  s.countable_eps = {CountableEpsFamily::quarters_gauss, 2.0};
  s.relaxed_orders = {3, 5};
  s.kappa = 6.0;
  s.margin = 2;
  s.freq_cap = 123456;
  s.targets.scale = 0.25;
  s.targets.explicit_targets = {{Complex(1, 2), Complex(0, 0), Complex(-1, 0.5)}};
  SeriesKind kind = SeriesKind::single_point;
  auto back = spec_from_json(spec_json(SeriesKind::countable, s), &kind);
  CHECK(kind == SeriesKind::countable);
  CHECK(back.points == s.points);
  CHECK(back.mode == s.mode);
  CHECK(back.truncation == 3);
  CHECK(back.finite_eps.scale == 0.5);
  CHECK(back.countable_eps.family == CountableEpsFamily::quarters_gauss);
  CHECK(back.countable_eps.scale == 2.0);
  CHECK(back.relaxed_orders == s.relaxed_orders);
  CHECK(back.kappa == 6.0);
  CHECK(back.margin == 2);
  CHECK(back.freq_cap == 123456);
  CHECK(back.targets.scale == 0.25);
  CHECK(back.targets.explicit_targets == s.targets.explicit_targets);
}

TEST_CASE("spec JSON defaults and errors") {
  SeriesKind kind{};
  auto s = spec_from_json(Json::parse(R"({"kind": "finite", "points": [0, 1]})"), &kind);
  CHECK(kind == SeriesKind::finite);
  CHECK(s.truncation == 1);
  CHECK(s.mode == CertMode::relaxed);
  CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"kind": "nope", "points": [0]})")), InvalidArgument);
  CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"points": [0], "mode": "loose"})")), InvalidArgument);
}

TEST_CASE("manifest rebuilds the same series") {
  SeriesSpec spec;
  spec.points = {0.3, 1.7};
  spec.truncation = 3;
  spec.relaxed_orders = {2, 4};
  auto s = build_finite(spec);
  const Json m = manifest_json(s);
  CHECK(m["kind"] == "finite");
  CHECK(m["terms"].size() == s.terms.size());
  CHECK(m["terms"][0]["l"] == 1);
  CHECK(m["schedule"][1]["n"] == 4);
  auto back = series_from_manifest(Json::parse(m.dump()));
  CHECK(back.assembled == s.assembled);
  CHECK(manifest_json(back).dump() == m.dump());
}

TEST_CASE("targets JSON") {
  auto a = targets_from_json(Json::parse(R"({"values": [1, [0, 2]]})"));
  REQUIRE(a.entries.size() == 2);
  CHECK(a.entries[1].point == 1);
  CHECK(a.entries[1].value == Complex(0, 2));
  auto b = targets_from_json(Json::parse(R"({"entries": [{"l": 3, "value": [1, 1]}]})"));
  CHECK(b.entries[0].point == 2);
  CHECK_THROWS_AS(targets_from_json(Json::parse(R"({"entries": [{"l": 0, "value": 1}]})")), InvalidArgument);
}

TEST_CASE("CSV writers") {
  std::ostringstream os;
  OscillationRow r;
  r.t = 0.5;
  r.osc_re = 0.25;
  r.osc = 0.25;
  r.last = {1, -1};
  write_oscillation_csv(os, {r});
  CHECK(os.str() == "t,osc_re,osc_im,last_re,last_im,tag\n0.5,0.25,0,1,-1,oscillating\n");
  std::ostringstream sw;
  write_sweep20_csv(sw, property20_sweep(Rational(2), Rational(5), 15, 16));
  CHECK(sw.str() == "n,N,hit_point,hit\n15,1,2/9,1\n16,1,2/9,1\n");
}
