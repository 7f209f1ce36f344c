#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ufourier/builder.hpp"
#include "ufourier/cantor.hpp"
#include "ufourier/divergence.hpp"
#include "ufourier/schedule.hpp"
#include "ufourier/trigpoly.hpp"
#include "ufourier/universality.hpp"

namespace ufourier {

using Json = nlohmann::ordered_json;

// Fixed 17 significant digits.
std::string fmt17(double x);

Json complex_json(Complex z);
Complex complex_from_json(const Json& j);  // [re, im], a number, or {"re","im"}

// [{k, re, im, re_exact?, im_exact?}, ...]
Json trigpoly_json(const TrigPoly& p);
TrigPoly trigpoly_from_json(const Json& j);

Json label_json(const BlockLabel& label);
// [{m, j, N, n, lo, hi}, ...]; m is null for one-index schedules.
Json schedule_json(const BlockSchedule& s);

std::string kind_name(SeriesKind kind);
SeriesKind kind_from_name(const std::string& name);

Json spec_json(SeriesKind kind, const SeriesSpec& spec);
// Missing keys keep SeriesSpec defaults. Throws InvalidArgument on bad values.
SeriesSpec spec_from_json(const Json& j, SeriesKind* kind = nullptr);

// {kind, spec, schedule, terms: [{label, l, c, N, n}], tail_bound}
Json manifest_json(const UniversalSeries& s);
// Rebuilds the series from the manifest's spec (builds are deterministic).
UniversalSeries series_from_manifest(const Json& j);

Json hit_report_json(const HitReport& r);

// {"values": [...]} indexed by point, or {"entries": [{"l": 1-based, "value": ...}]}.
TargetFunction targets_from_json(const Json& j);

void write_oscillation_csv(std::ostream& out, const std::vector<OscillationRow>& rows);
void write_sweep20_csv(std::ostream& out, const Property20Report& rep);
Json property21_json(const Property21Result& r);

Json read_json_file(const std::string& path);

}  // namespace ufourier
