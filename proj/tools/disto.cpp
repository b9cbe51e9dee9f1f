// Command-line front end: enumeration, rewriting, grid reductions, growth
// verdicts and the annulus bookkeeping, all emitting deterministic JSON.

#include "disto/annulus.hpp"
#include "disto/avila.hpp"
#include "disto/cayley.hpp"
#include "disto/certificates.hpp"
#include "disto/growth.hpp"
#include "disto/lemma_suites.hpp"
#include "disto/report.hpp"
#include "disto/torus_grid.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace disto;

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

std::vector<std::string> split_on(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  for (const std::string& p : split_on(text, ',')) out.push_back(parse_rational(p));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& p : split_on(text, ',')) out.push_back(std::stoi(p));
  return out;
}

SequenceSpec parse_sequence_spec(const std::string& text) {
  SequenceSpec s;
  if (text == "n") {
    s.kind = SequenceSpec::Kind::identity;
    return s;
  }
  if (text == "ceil-sqrt") {
    s.kind = SequenceSpec::Kind::ceil_sqrt;
    return s;
  }
  try {
    if (text.find(',') != std::string::npos) {
      s.kind = SequenceSpec::Kind::table;
      for (const std::string& p : split_on(text, ',')) s.table.emplace_back(p);
      return s;
    }
    s.kind = SequenceSpec::Kind::constant;
    s.value = Int(text);
  } catch (const std::exception&) {
    throw usage_error("cannot parse sequence spec '" + text +
                      "' (want an integer, 'n', or a comma-separated table)");
  }
  return s;
}

// Tokens are separated by whitespace or ';' so that "0,0;1,0" works unquoted.
std::string semicolons_to_spaces(const std::string& text) {
  std::string s = text;
  for (char& c : s)
    if (c == ';') c = ' ';
  return s;
}

SquareSet parse_squares(const std::string& text) {
  SquareSet out;
  std::istringstream in(semicolons_to_spaces(text));
  std::string tok;
  while (in >> tok) {
    auto comma = tok.find(',');
    if (comma == std::string::npos)
      throw usage_error("square '" + tok + "' is not of the form x,y");
    out.insert({std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1))});
  }
  if (out.empty()) throw usage_error("no squares given");
  return out;
}

// Grid lines sit on half-integers; store the doubled coordinate.
std::set<int> parse_lines(const std::string& text) {
  std::set<int> out;
  std::istringstream in(semicolons_to_spaces(text));
  std::string tok;
  while (in >> tok) {
    Rat doubled = parse_rational(tok) * 2;
    if (!is_integer(doubled))
      throw usage_error("line coordinate '" + tok + "' is not a half-integer");
    out.insert(numerator(doubled).convert_to<int>());
  }
  return out;
}

Word parse_binary_word(const std::string& text) {
  Word w;
  for (char c : text) {
    if (c == 'a')
      w.push_back(0);
    else if (c == 'b')
      w.push_back(2);
    else if (c != ' ')
      throw usage_error("enumeration words use only the letters a and b");
  }
  return w;
}

struct BallArgs {
  int genus = 2;
  int radius = 3;
  std::string dot_path;
};

struct WordArgs {
  int genus = 2;
  std::vector<std::string> tokens;
};

int run_ball(const BallArgs& a, const std::string& out) {
  Presentation p = make_closed_surface_presentation(a.genus);
  Ball b = Ball::enumerate(p, a.radius);
  if (!a.dot_path.empty()) write_text(ball_dot(b), a.dot_path);
  write_json(ball_json(b), out);
  return 0;
}

int run_reduce(const WordArgs& a, const std::string& out) {
  Presentation p = make_closed_surface_presentation(a.genus);
  RelatorMatcher m(p);
  Word w = parse_word(p.alphabet, join_tokens(a.tokens));
  json steps = json::array();
  Word cur = free_reduce(w);
  while (auto next = dehn_step(m, cur)) {
    auto matches = find_simplifiable(m, cur);
    steps.push_back(json{{"word", word_json(p.alphabet, cur)},
                         {"match_start", matches.front().start},
                         {"match_length", matches.front().length},
                         {"result", word_json(p.alphabet, *next)}});
    cur = *next;
  }
  json doc{{"schema", 1},
           {"kind", "reduce"},
           {"input", word_json(p.alphabet, w)},
           {"steps", steps},
           {"reduced", word_json(p.alphabet, cur)},
           {"canonical", word_json(p.alphabet, canonical_form(m, w))},
           {"trivial", cur.empty()}};
  write_json(doc, out);
  return 0;
}

int run_classify(const WordArgs& a, const std::string& out) {
  Presentation p = make_closed_surface_presentation(a.genus);
  RelatorMatcher m(p);
  Word w = parse_word(p.alphabet, join_tokens(a.tokens));
  Word canon = canonical_form(m, w);
  json doc{{"schema", 1},
           {"kind", "classify"},
           {"input", word_json(p.alphabet, w)},
           {"canonical", word_json(p.alphabet, canon)},
           {"trivial", canon.empty()},
           {"distance_to_identity", canon.size()}};
  write_json(doc, out);
  return 0;
}

int run_geodesics(const WordArgs& a, std::size_t cap, const std::string& out) {
  Presentation p = make_closed_surface_presentation(a.genus);
  RelatorMatcher m(p);
  Word w = parse_word(p.alphabet, join_tokens(a.tokens));
  Word canon = canonical_form(m, w);
  Ball b = Ball::enumerate(p, static_cast<int>(canon.size()));
  FaceId f = *b.find(canon);
  json geods = json::array();
  for (const Word& g : b.geodesics(f, cap)) geods.push_back(word_json(p.alphabet, g));
  json doc{{"schema", 1},
           {"kind", "geodesics"},
           {"input", word_json(p.alphabet, w)},
           {"canonical", word_json(p.alphabet, canon)},
           {"count", b.geodesic_count(f)},
           {"exceptional", f != 0 && b.is_exceptional(f)},
           {"geodesics", geods}};
  write_json(doc, out);
  return 0;
}

int run_diam(const BallArgs& a, const std::string& out) {
  Presentation p = make_closed_surface_presentation(a.genus);
  Ball b = Ball::enumerate(p, a.radius);
  std::vector<FaceId> all(b.face_count());
  for (FaceId f = 0; f < b.face_count(); ++f) all[f] = f;
  std::size_t el = set_eloignement(b, 0, all);
  std::size_t diam = set_diameter(b, all);
  json doc{{"schema", 1},
           {"kind", "diam"},
           {"genus", a.genus},
           {"radius", a.radius},
           {"faces", b.face_count()},
           {"eloignement", el},
           {"diameter", diam},
           {"sandwich_holds", el <= diam && diam <= 2 * el}};
  write_json(doc, out);
  return 0;
}

struct TorusArgs {
  std::string squares;
  std::string faces;
  std::string vlines;
  std::string hlines;
  int random_count = 0;
  std::uint64_t seed = 1;
};

int run_torus(const TorusArgs& a, const std::string& out) {
  bool explicit_lines = !a.faces.empty() || !a.vlines.empty() || !a.hlines.empty();
  int sources = (explicit_lines ? 1 : 0) + (a.random_count > 0 ? 1 : 0) +
                (!a.squares.empty() ? 1 : 0);
  if (sources != 1)
    throw usage_error("give exactly one of --squares, --random, or --faces/--vlines/--hlines");

  GridFootprint fp;
  bool randomized = false;
  if (explicit_lines) {
    if (a.faces.empty()) throw usage_error("--vlines/--hlines need --faces");
    fp = footprint_with_lines(parse_squares(a.faces), parse_lines(a.vlines),
                              parse_lines(a.hlines));
  } else if (a.random_count > 0) {
    std::mt19937_64 rng(a.seed);
    fp = footprint_of(random_blob(rng, a.random_count));
    randomized = true;
  } else {
    fp = footprint_of(parse_squares(a.squares));
  }
  std::string why = check_footprint(fp);
  if (!why.empty()) throw property_error("inconsistent footprint: " + why);
  ReductionPlan plan = reduction_plan(fp);
  json doc{{"schema", 1},
           {"kind", "torus_reduction"},
           {"length", fp.length()},
           {"height", fp.height()},
           {"diam", plan.diam},
           {"footprint", footprint_json(fp)},
           {"plan", plan_json(plan)}};
  if (randomized) doc["seed"] = a.seed;
  write_json(doc, out);
  return 0;
}

int run_criterion(const std::string& d_text, const std::string& w_text,
                  const std::string& out) {
  GrowthModel d = parse_growth_literal(d_text);
  json doc{{"schema", 1},
           {"kind", "growth_criteria"},
           {"d", growth_json(d)},
           {"sublinear", verdict_str(criterion_sublinear(d))},
           {"nlogn", verdict_str(criterion_nlogn(d))}};
  if (!w_text.empty()) {
    GrowthModel w = parse_growth_literal(w_text);
    doc["w"] = growth_json(w);
    doc["over_weights"] = verdict_str(criterion_over_weights(d, w));
  }
  write_json(doc, out);
  return 0;
}

int run_avila(std::uint64_t n, const std::string& word_text, const std::string& out) {
  if ((n == 0) == word_text.empty())
    throw usage_error("give exactly one of --n and --word");
  Word w;
  if (n > 0) {
    w = avila_word(n);
  } else {
    w = parse_binary_word(word_text);
    n = avila_index(w);
  }
  json doc{{"schema", 1},
           {"kind", "enumeration_word"},
           {"n", n},
           {"word", word_json(avila_alphabet(), w)},
           {"conjugator_length_bound", avila_bound(n).str()}};
  write_json(doc, out);
  return 0;
}

// Profile files hold {"l": <spec>, "k": <spec>} where a spec is the same
// string the --l/--k flags accept, or a bare integer.
std::string sequence_spec_from_json(const json& v, const char* key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw usage_error(std::string("profile field '") + key + "' must be a string or integer");
}

int run_sigma(const std::string& profile_path, const std::string& l_text,
              const std::string& k_text, int count, const std::string& horizon_text,
              const std::string& out) {
  std::string l_spec = l_text, k_spec = k_text;
  if (!profile_path.empty()) {
    std::ifstream f(profile_path);
    if (!f) throw usage_error("cannot open profile file: " + profile_path);
    json p = json::parse(f, nullptr, true, true);
    if (!p.is_object() || !p.contains("l") || !p.contains("k"))
      throw usage_error("profile file must be an object with fields 'l' and 'k'");
    l_spec = sequence_spec_from_json(p["l"], "l");
    k_spec = sequence_spec_from_json(p["k"], "k");
  }
  SigmaProfile profile{parse_sequence_spec(l_spec), parse_sequence_spec(k_spec)};
  SigmaResult r = build_sigma(profile, count, Int(horizon_text));
  std::string why = verify_sigma(r);
  if (!why.empty()) throw property_error("sigma verification failed: " + why);
  json doc = sigma_json(r);
  doc["l_spec"] = profile.l.describe();
  doc["k_spec"] = profile.k.describe();
  write_json(doc, out);
  return r.complete ? 0 : 1;
}

struct CertArgs {
  std::string surface;
  std::string kind;
  int genus = 2;
  std::string diam = "0";
  std::string el = "0";
  std::string p = "2";
  std::string n = "1";
  std::string lambda = "1";
};

// Fragmentation certificates come as a pair: an upper bound in the surface's
// natural quantity and the generic lower bound (q - 2) / C for the same q.
int run_cert(const CertArgs& a, const std::string& out) {
  if (a.surface.empty() == a.kind.empty())
    throw usage_error("give exactly one of --surface and --kind");
  json doc{{"schema", 1}, {"kind", "certificate"}};
  if (!a.surface.empty()) {
    doc["surface"] = a.surface;
    Int q;
    SymbolicBound upper;
    if (a.surface == "boundary") {
      q = Int(a.diam);
      doc["diam"] = a.diam;
      upper = frag_bound_with_boundary(q);
    } else if (a.surface == "torus") {
      q = Int(a.diam);
      doc["diam"] = a.diam;
      upper = frag_bound_torus(q);
    } else if (a.surface == "closed") {
      q = Int(a.el);
      doc["genus"] = a.genus;
      doc["el"] = a.el;
      upper = frag_bound_closed(a.genus, q);
    } else {
      throw usage_error("unknown surface '" + a.surface + "' (boundary | torus | closed)");
    }
    doc["upper"] = bound_json(upper);
    doc["lower"] = bound_json(frag_lower_bound(q));
  } else if (a.kind == "baumslag") {
    doc["certificate"] = a.kind;
    doc["p"] = a.p;
    doc["n"] = a.n;
    doc["length_bound"] = baumslag_length_bound(Int(a.p), Int(a.n)).str();
  } else if (a.kind == "heisenberg") {
    doc["certificate"] = a.kind;
    doc["n"] = a.n;
    doc["length_bound"] = heisenberg_length_bound(Int(a.n)).str();
  } else if (a.kind == "displacement") {
    doc["certificate"] = a.kind;
    doc["lambda"] = rat_json(parse_rational(a.lambda));
    doc["bound"] = bound_json(displacement_exponent_bound(parse_rational(a.lambda)));
  } else {
    throw usage_error("unknown certificate kind '" + a.kind + "'");
  }
  write_json(doc, out);
  return 0;
}

struct AnnulusArgs {
  std::string targets;
  std::string v_path;
  std::string reach;
  std::string preset;
  int l = 0;
  int growth = 0;
  int dodge_horizon = 0;
  int dodge_max = 0;
  std::string traj_path;
  std::string emit_path;
};

// Target files are JSON arrays; integers are taken as-is, every other value
// must be a string so it stays exact ("3/2", "0.75"). Floats are refused
// rather than silently rounded through binary.
std::vector<Rat> read_targets_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw usage_error("cannot open targets file: " + path);
  json doc = json::parse(f, nullptr, true, true);
  if (!doc.is_array()) throw usage_error("targets file must hold a JSON array");
  std::vector<Rat> out;
  for (const json& v : doc) {
    if (v.is_number_integer())
      out.push_back(Rat(v.get<long long>()));
    else if (v.is_string())
      out.push_back(parse_rational(v.get<std::string>()));
    else
      throw usage_error("target entries must be integers or rational strings");
  }
  return out;
}

int run_annulus(const AnnulusArgs& a, const std::string& out) {
  json doc{{"schema", 1}, {"kind", "annulus"}};
  AnnulusSchedule sched;
  bool have_schedule = false;

  std::string reach_text = a.reach;
  if (a.preset == "figure") reach_text = "3,3,4,4,4";
  else if (!a.preset.empty()) throw usage_error("unknown preset '" + a.preset + "'");

  if (!a.targets.empty() && !a.v_path.empty())
    throw usage_error("give at most one of --targets and --v");

  if (!reach_text.empty()) {
    sched = schedule_from_reach(parse_int_list(reach_text));
    have_schedule = true;
  } else if (!a.targets.empty() || !a.v_path.empty()) {
    std::vector<Rat> targets =
        a.v_path.empty() ? parse_rat_list(a.targets) : read_targets_file(a.v_path);
    bool admissible_input = is_admissible(targets);
    std::vector<Rat> adm = admissible_input ? targets : make_admissible(targets);
    OrbitModel model = build_orbit(adm, a.dodge_horizon, a.dodge_max);
    doc["admissible_input"] = admissible_input;
    doc["orbit"] = orbit_json(model);
    if (a.l > 0) {
      sched = compute_schedule(model, a.l);
      have_schedule = true;
    }
    if (a.growth > 0) {
      json rows = json::array();
      for (const LambdaGrowthRow& row : lambda_growth_check(model, a.growth))
        rows.push_back(json{{"l", row.l},
                            {"lambda", row.lambda_l.str()},
                            {"ratio", rat_json(row.ratio)},
                            {"bound_holds", row.bound_holds},
                            {"exponent_bound", bound_json(row.exponent_bound)}});
      doc["lambda_growth"] = rows;
    }
  } else {
    throw usage_error("give --targets, --v, --reach, or --preset figure");
  }

  if (have_schedule) {
    std::string why = verify_final(sched);
    if (!why.empty()) throw property_error("schedule verification failed: " + why);
    doc["schedule"] = schedule_json(sched);
    if (!a.emit_path.empty()) write_json(schedule_json(sched), a.emit_path);
    if (!a.traj_path.empty()) write_text(trajectory_csv(sched), a.traj_path);
  } else if (!a.emit_path.empty() || !a.traj_path.empty()) {
    throw usage_error("--emit/--traj need a schedule; add --l or --reach");
  }
  write_json(doc, out);
  return 0;
}

struct LemmaArgs {
  int genus = 2;
  int radius = 4;
  std::string suite = "all";
  std::uint64_t seed = 7;
  std::size_t pair_budget = 6'000'000;
};

int run_verify_lemmas(const LemmaArgs& a, const std::string& out) {
  Presentation p = make_closed_surface_presentation(a.genus);
  auto wanted = [&](const std::string& name) {
    return a.suite == "all" || a.suite == name;
  };
  {
    auto names = all_suite_names();
    if (a.suite != "all" && std::find(names.begin(), names.end(), a.suite) == names.end())
      throw usage_error("unknown suite '" + a.suite + "'");
  }

  std::vector<SuiteResult> results;
  if (wanted("fact1")) results.push_back(suite_fact1(p));
  if (wanted("fact2")) results.push_back(suite_fact2(p));
  if (wanted("fact3")) results.push_back(suite_fact3(p));

  RelatorMatcher m(p);
  if (wanted("adjacence")) {
    std::vector<Word> bases{{}, {0}, {0, 2}};
    results.push_back(suite_adjacence(m, bases));
  }

  bool needs_ball = false;
  for (const char* n : {"parity", "geodexc", "faceexc", "geodexc2",
                        "face-type-equivalence", "metric", "el-diam"})
    needs_ball = needs_ball || wanted(n);
  if (needs_ball) {
    Ball b = Ball::enumerate(p, a.radius);
    if (wanted("parity")) results.push_back(suite_parity(b));
    if (wanted("geodexc")) results.push_back(suite_geodexc(b));
    if (wanted("faceexc")) results.push_back(suite_faceexc(b));
    if (wanted("geodexc2")) results.push_back(suite_geodexc2(b));
    if (wanted("face-type-equivalence"))
      results.push_back(suite_face_type_equivalence(b));
    if (wanted("metric"))
      results.push_back(suite_metric(b, a.seed, a.pair_budget, 20'000, 20'000));
    if (wanted("el-diam")) results.push_back(suite_el_diam(b));
  }
  if (wanted("sphere-reference"))
    results.push_back(suite_sphere_reference(p, std::min(a.radius, 4)));

  bool all_pass = true;
  json docs = json::array();
  for (const SuiteResult& r : results) {
    all_pass = all_pass && r.pass;
    docs.push_back(suite_json(r));
  }
  json doc{{"schema", 1},
           {"kind", "suites"},
           {"genus", a.genus},
           {"radius", a.radius},
           {"seed", a.seed},
           {"results", docs},
           {"all_pass", all_pass}};
  write_json(doc, out);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic distortion toolbox"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --out appear after the subcommand name
  std::string out;
  app.add_option("--out", out, "output path ('-' or empty for stdout)")->capture_default_str();

  BallArgs ball_args;
  auto* ball_cmd = app.add_subcommand("ball", "enumerate a metric ball of the dual tessellation");
  ball_cmd->add_option("--genus", ball_args.genus)->check(CLI::Range(2, 6))->capture_default_str();
  ball_cmd->add_option("--radius", ball_args.radius)->check(CLI::Range(0, 12))->capture_default_str();
  ball_cmd->add_option("--dot", ball_args.dot_path, "also write a graphviz rendering here");

  WordArgs reduce_args;
  auto* reduce_cmd = app.add_subcommand("reduce", "run the length-reducing rewriting to a normal form");
  reduce_cmd->add_option("--genus", reduce_args.genus)->check(CLI::Range(2, 6))->capture_default_str();
  reduce_cmd->add_option("word", reduce_args.tokens, "word, e.g. \"a1 b1 A1 B1\"")->required()->expected(-1);

  WordArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "canonical form and triviality of a word");
  classify_cmd->add_option("--genus", classify_args.genus)->check(CLI::Range(2, 6))->capture_default_str();
  classify_cmd->add_option("word", classify_args.tokens)->required()->expected(-1);

  WordArgs geo_args;
  std::size_t geo_cap = 1u << 16;
  auto* geo_cmd = app.add_subcommand("geodesics", "all geodesic spellings of a ball face");
  geo_cmd->add_option("--genus", geo_args.genus)->check(CLI::Range(2, 6))->capture_default_str();
  geo_cmd->add_option("--cap", geo_cap, "geodesic enumeration cap")->capture_default_str();
  geo_cmd->add_option("word", geo_args.tokens)->required()->expected(-1);

  BallArgs diam_args;
  auto* diam_cmd = app.add_subcommand("diam", "diameter and eloignement of a ball");
  diam_cmd->add_option("--genus", diam_args.genus)->check(CLI::Range(2, 6))->capture_default_str();
  diam_cmd->add_option("--radius", diam_args.radius)->check(CLI::Range(0, 12))->capture_default_str();

  TorusArgs torus_args;
  auto* torus_cmd = app.add_subcommand("torus-footprint", "grid footprint and compression plan of a union of squares");
  torus_cmd->add_option("--squares", torus_args.squares, "squares x,y separated by ';' or spaces");
  torus_cmd->add_option("--faces", torus_args.faces, "met faces for an explicitly measured footprint");
  torus_cmd->add_option("--vlines", torus_args.vlines, "crossed vertical lines (half-integer coordinates)");
  torus_cmd->add_option("--hlines", torus_args.hlines, "crossed horizontal lines");
  torus_cmd->add_option("--random", torus_args.random_count, "use a random connected blob of this many squares");
  torus_cmd->add_option("--seed", torus_args.seed)->capture_default_str();

  std::string crit_d, crit_w;
  auto* crit_cmd = app.add_subcommand("criterion", "distortion growth verdicts");
  crit_cmd->add_option("--d", crit_d, "distortion growth, e.g. 'n^1/2' or '3*log^2'")->required();
  crit_cmd->add_option("--w", crit_w, "weight growth for the relative verdict");

  std::uint64_t avila_n = 0;
  std::string avila_text;
  auto* avila_cmd = app.add_subcommand("avila", "binary enumeration words and their conjugator budgets");
  avila_cmd->add_option("--n", avila_n, "1-based index into the enumeration");
  avila_cmd->add_option("--word", avila_text, "word over a, b");

  std::string sigma_profile, sigma_l = "1", sigma_k = "1", sigma_horizon = "1000000";
  int sigma_count = 6;
  auto* sigma_cmd = app.add_subcommand("sigma", "greedy placement sequence for a growth profile");
  sigma_cmd->add_option("--profile", sigma_profile, "JSON file with fields 'l' and 'k'");
  sigma_cmd->add_option("--l", sigma_l, "word-length profile: integer, 'n', 'ceil-sqrt', or table")->capture_default_str();
  sigma_cmd->add_option("--k", sigma_k, "block-size profile")->capture_default_str();
  sigma_cmd->add_option("--count", sigma_count)->check(CLI::Range(1, 1000))->capture_default_str();
  sigma_cmd->add_option("--horizon", sigma_horizon, "search limit per position")->capture_default_str();

  CertArgs cert_args;
  auto* cert_cmd = app.add_subcommand("cert", "symbolic and integer bound certificates");
  cert_cmd->add_option("--surface", cert_args.surface,
                       "boundary | torus | closed: emit the upper/lower pair");
  cert_cmd->add_option("--kind", cert_args.kind,
                       "baumslag | heisenberg | displacement");
  cert_cmd->add_option("--genus", cert_args.genus)->check(CLI::Range(2, 100));
  cert_cmd->add_option("--diam", cert_args.diam);
  cert_cmd->add_option("--el", cert_args.el);
  cert_cmd->add_option("--p", cert_args.p);
  cert_cmd->add_option("--n", cert_args.n);
  cert_cmd->add_option("--lambda", cert_args.lambda);

  AnnulusArgs ann_args;
  auto* ann_cmd = app.add_subcommand("annulus", "orbit realization, schedules and crossing trajectories");
  ann_cmd->add_option("--targets", ann_args.targets, "comma-separated target heights v_1..v_L");
  ann_cmd->add_option("--v", ann_args.v_path, "JSON array file with the target heights");
  ann_cmd->add_option("--reach", ann_args.reach, "comma-separated reach table i(0..N)");
  ann_cmd->add_option("--preset", ann_args.preset, "'figure' for the worked example");
  ann_cmd->add_option("--l", ann_args.l, "iterate count for the schedule")->check(CLI::Range(0, 64));
  ann_cmd->add_option("--growth", ann_args.growth, "check lambda growth up to this l");
  ann_cmd->add_option("--dodge-horizon", ann_args.dodge_horizon, "keep integer orbits off the lattice this long");
  ann_cmd->add_option("--dodge-max", ann_args.dodge_max, "largest protected integer start");
  ann_cmd->add_option("--traj", ann_args.traj_path, "write the crossing-count table as CSV here");
  ann_cmd->add_option("--emit", ann_args.emit_path, "write the schedule document alone to this path");

  LemmaArgs lemma_args;
  auto* lemma_cmd = app.add_subcommand("verify-lemmas", "run the enumerated-region checks");
  lemma_cmd->add_option("--genus", lemma_args.genus)->check(CLI::Range(2, 6))->capture_default_str();
  lemma_cmd->add_option("--radius", lemma_args.radius)->check(CLI::Range(1, 12))->capture_default_str();
  lemma_cmd->add_option("--suite", lemma_args.suite, "suite name or 'all'")->capture_default_str();
  lemma_cmd->add_option("--seed", lemma_args.seed)->capture_default_str();
  lemma_cmd->add_option("--pair-budget", lemma_args.pair_budget)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (ball_cmd->parsed()) return run_ball(ball_args, out);
    if (reduce_cmd->parsed()) return run_reduce(reduce_args, out);
    if (classify_cmd->parsed()) return run_classify(classify_args, out);
    if (geo_cmd->parsed()) return run_geodesics(geo_args, geo_cap, out);
    if (diam_cmd->parsed()) return run_diam(diam_args, out);
    if (torus_cmd->parsed()) return run_torus(torus_args, out);
    if (crit_cmd->parsed()) return run_criterion(crit_d, crit_w, out);
    if (avila_cmd->parsed()) return run_avila(avila_n, avila_text, out);
    if (sigma_cmd->parsed())
      return run_sigma(sigma_profile, sigma_l, sigma_k, sigma_count, sigma_horizon, out);
    if (cert_cmd->parsed()) return run_cert(cert_args, out);
    if (ann_cmd->parsed()) return run_annulus(ann_args, out);
    if (lemma_cmd->parsed()) return run_verify_lemmas(lemma_args, out);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const property_error& e) {
    std::cerr << "property violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
