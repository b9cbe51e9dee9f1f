#pragma once

#include "disto/annulus.hpp"
#include "disto/avila.hpp"
#include "disto/cayley.hpp"
#include "disto/growth.hpp"
#include "disto/lemma_suites.hpp"
#include "disto/symbolic.hpp"
#include "disto/torus_grid.hpp"

#include <json.hpp>

#include <string>

namespace disto {

// All machine-readable output uses nlohmann's ordered_json so documents are
// byte-stable across runs; every top-level document starts with a schema
// marker.
using json = nlohmann::ordered_json;

json rat_json(const Rat& q);  // {"exact": "p/q", "approx": double}
json interval_json(const std::pair<Rat, Rat>& iv);
json bound_json(const SymbolicBound& b);

json word_json(const GeneratorAlphabet& al, const Word& w);
json ball_json(const Ball& b);
std::string ball_dot(const Ball& b);

json suite_json(const SuiteResult& r);
json footprint_json(const GridFootprint& fp);
json plan_json(const ReductionPlan& plan);
json growth_json(const GrowthModel& m);
json sigma_json(const SigmaResult& r);
json orbit_json(const OrbitModel& m);
json schedule_json(const AnnulusSchedule& s);
std::string trajectory_csv(const AnnulusSchedule& s);

// Serializes with a trailing newline; path "-" or "" means stdout.
void write_text(const std::string& text, const std::string& out_path);
void write_json(const json& doc, const std::string& out_path);

}  // namespace disto
