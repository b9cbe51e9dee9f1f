#include "disto/report.hpp"

#include "disto/certificates.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace disto {

json rat_json(const Rat& q) {
  return json{{"exact", rat_str(q)}, {"approx", rat_double(q)}};
}

json interval_json(const std::pair<Rat, Rat>& iv) {
  return json{{"lo", rat_json(iv.first)}, {"hi", rat_json(iv.second)}};
}

json bound_json(const SymbolicBound& b) {
  json terms = json::object();
  for (auto& [sym, coeff] : b.terms) terms[sym] = rat_json(coeff);
  json doc{{"render", b.render()},
           {"constant", rat_json(b.constant)},
           {"terms", terms}};
  if (auto iv = b.evaluate(known_symbol_enclosures())) doc["certified_interval"] = interval_json(*iv);
  return doc;
}

json word_json(const GeneratorAlphabet& al, const Word& w) {
  return json{{"text", format_word(al, w)}, {"length", w.size()}};
}

json ball_json(const Ball& b) {
  const Presentation& p = b.presentation();
  json spheres = json::array();
  std::size_t exceptional = 0;
  for (int r = 0; r <= b.radius(); ++r) spheres.push_back(b.sphere_size(r));
  json faces = json::array();
  for (FaceId f = 0; f < b.face_count(); ++f) {
    bool exc = f > 0 && b.is_exceptional(f);
    if (exc) ++exceptional;
    faces.push_back(json{{"word", format_word(p.alphabet, b.word_of(f))},
                         {"dist", b.dist(f)},
                         {"exceptional", exc}});
  }
  return json{{"schema", 1},
              {"kind", "ball"},
              {"genus", p.genus},
              {"radius", b.radius()},
              {"spheres", spheres},
              {"face_count", b.face_count()},
              {"exceptional_count", exceptional},
              {"faces", faces}};
}

std::string ball_dot(const Ball& b) {
  const GeneratorAlphabet& al = b.presentation().alphabet;
  std::ostringstream out;
  out << "graph ball {\n";
  out << "  node [shape=circle fontsize=9];\n";
  for (FaceId f = 0; f < b.face_count(); ++f) {
    out << "  f" << f << " [label=\"" << format_word(al, b.word_of(f)) << "\"";
    if (f > 0 && b.is_exceptional(f)) out << " style=filled fillcolor=lightgray";
    out << "];\n";
  }
  for (FaceId f = 0; f < b.face_count(); ++f) {
    for (Letter l = 0; l < b.letter_count(); ++l) {
      FaceId n = b.neighbor(f, l);
      if (n == kOutsideBall || n < f) continue;
      // One undirected edge per unordered pair; self-loops cannot occur.
      if (n == f) continue;
      out << "  f" << f << " -- f" << n << " [label=\"" << al.letter_name(l)
          << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

json suite_json(const SuiteResult& r) {
  json stats = json::object();
  for (auto& [k, v] : r.stats) stats[k] = v;
  json doc{{"name", r.name}, {"pass", r.pass}, {"stats", stats}};
  if (!r.pass) doc["detail"] = r.detail;
  return doc;
}

json footprint_json(const GridFootprint& fp) {
  auto square_list = [](const SquareSet& s) {
    json a = json::array();
    for (const auto& [x, y] : s) a.push_back(json::array({x, y}));
    return a;
  };
  return json{{"schema", 1},
              {"kind", "grid_footprint"},
              {"derived", fp.derived},
              {"squares", square_list(fp.squares)},
              {"met_faces", square_list(fp.met_faces)},
              {"length", fp.length()},
              {"height", fp.height()},
              {"diam", grid_set_diameter(fp.met_faces)}};
}

json plan_json(const ReductionPlan& plan) {
  json steps = json::array();
  for (const ReductionStep& s : plan.steps)
    steps.push_back(json{
        {"step", s.axis == 'x' ? "reduce-length" : "reduce-height"},
        {"from", s.from},
        {"to", s.to}});
  return json{{"schema", 1},
              {"kind", "reduction_plan"},
              {"steps", steps},
              {"step_count", plan.steps.size()},
              {"terminal", plan.terminal},
              {"diam", plan.diam},
              {"frag_bound", bound_json(plan.frag_bound)}};
}

json growth_json(const GrowthModel& m) {
  json doc{{"symbolic", m.symbolic}};
  if (m.symbolic) {
    doc["render"] = render_growth(m);
    doc["coeff"] = rat_json(m.coeff);
    doc["pow_n"] = rat_json(m.pow_n);
    doc["pow_log"] = rat_json(m.pow_log);
  }
  if (!m.prefix.empty()) {
    json pre = json::array();
    for (const Rat& v : m.prefix) pre.push_back(rat_json(v));
    doc["prefix"] = pre;
  }
  return doc;
}

json sigma_json(const SigmaResult& r) {
  json values = json::array();
  for (const Int& s : r.sigma) values.push_back(s.str());
  json witnesses = json::array();
  for (const SigmaWitness& w : r.witnesses) {
    json doc{{"m", w.m},
             {"sigma", w.sigma.str()},
             {"l", w.l_sel.str()},
             {"ksum", w.ksum.str()},
             {"boundary", w.boundary}};
    if (w.boundary) {
      doc["l_prev"] = w.l_prev.str();
      doc["kprev"] = w.kprev.str();
    }
    witnesses.push_back(doc);
  }
  json doc{{"schema", 1},
           {"kind", "sigma"},
           {"complete", r.complete},
           {"sigma", values},
           {"witnesses", witnesses}};
  if (!r.complete) {
    doc["blocking_m"] = r.blocking_m;
    doc["reason"] = r.reason;
  }
  return doc;
}

json orbit_json(const OrbitModel& m) {
  json orbit = json::array();
  for (const Rat& t : m.orbit) orbit.push_back(rat_json(t));
  json breaks = json::array();
  for (auto& [x, y] : m.h.breaks)
    breaks.push_back(json{{"x", rat_json(x)}, {"y", rat_json(y)}});
  json perturbations = json::array();
  for (const OrbitPerturbation& p : m.perturbations)
    perturbations.push_back(json{{"start", p.start},
                                 {"step", p.step},
                                 {"x0", rat_json(p.x0)},
                                 {"before", rat_json(p.before)},
                                 {"after", rat_json(p.after)}});
  return json{{"schema", 1},
              {"kind", "orbit"},
              {"orbit", orbit},
              {"breakpoints", breaks},
              {"displacement_monotone", m.displacement_monotone},
              {"displacement_violations", m.displacement_violations},
              {"monotonicity_repairs", m.monotonicity_repairs},
              {"cap_violations", m.cap_violations},
              {"perturbations", perturbations}};
}

json schedule_json(const AnnulusSchedule& s) {
  json partition = json::array();
  auto lv = s.levels();
  for (std::size_t i = 0; i < lv.size(); ++i)
    partition.push_back(json{{"i", s.i0 + static_cast<int>(i)}, {"strips", lv[i]}});
  json trajectory = json::array();
  for (int j = 0; j <= s.N; ++j) trajectory.push_back(crossing_trajectory(s, j));
  json doc{{"schema", 1},
           {"kind", "schedule"},
           {"l", s.l},
           {"lambda", s.lambda},
           {"N", s.N},
           {"i0", s.i0},
           {"reach", s.reach},
           {"partition", partition},
           {"delays", s.n},
           {"trajectory", trajectory},
           {"final_ok", verify_final(s).empty()}};
  if (s.l > 0)
    doc["lambda_over_l"] = rat_json(Rat(s.lambda) / s.l);
  else
    doc["lambda_over_l"] = nullptr;
  doc["a_bound"] = bound_json(displacement_exponent_bound(Rat(s.lambda)));
  return doc;
}

std::string trajectory_csv(const AnnulusSchedule& s) {
  std::ostringstream out;
  out << "round";
  for (int j = 0; j <= s.N; ++j) out << ",strip" << j;
  out << "\n";
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(s.N) + 1);
  for (int j = 0; j <= s.N; ++j)
    rows[static_cast<std::size_t>(j)] = crossing_trajectory(s, j);
  for (int r = 0; r < s.lambda; ++r) {
    out << r;
    for (int j = 0; j <= s.N; ++j)
      out << "," << rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
    out << "\n";
  }
  return out.str();
}

void write_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw usage_error("cannot open output file: " + out_path);
  f << text;
  if (text.empty() || text.back() != '\n') f << '\n';
}

void write_json(const json& doc, const std::string& out_path) {
  write_text(doc.dump(2), out_path);
}

}  // namespace disto
