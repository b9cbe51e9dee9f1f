#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

using json = nlohmann::ordered_json;

std::string bin() {
  const char* b = std::getenv("DISTO_BIN");
  REQUIRE_MESSAGE(b != nullptr, "DISTO_BIN must point at the disto binary");
  return b;
}

int run(const std::string& args) {
  std::string cmd = bin() + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  return WEXITSTATUS(rc);
}

std::string temp_path(const std::string& stem) {
  static int counter = 0;
  return "/tmp/disto_cli_" + std::to_string(::getpid()) + "_" + stem + "_" +
         std::to_string(counter++);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE_MESSAGE(f.good(), ("missing output file " + path));
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json run_json(const std::string& args, int expect_rc = 0) {
  std::string path = temp_path("doc") + ".json";
  CHECK(run(args + " --out " + path) == expect_rc);
  json doc = json::parse(slurp(path));
  std::remove(path.c_str());
  return doc;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("ball enumeration document and determinism") {
  json doc = run_json("ball --genus 2 --radius 3");
  CHECK(doc["kind"] == "ball");
  CHECK(doc["spheres"] == json::array({1, 8, 56, 392}));
  CHECK(doc["face_count"] == 457);

  std::string p1 = temp_path("ball1"), p2 = temp_path("ball2");
  CHECK(run("ball --genus 2 --radius 3 --out " + p1) == 0);
  CHECK(run("ball --genus 2 --radius 3 --out " + p2) == 0);
  CHECK(slurp(p1) == slurp(p2));
  std::remove(p1.c_str());
  std::remove(p2.c_str());

  std::string dot = temp_path("ball") + ".dot";
  CHECK(run("ball --radius 2 --dot " + dot) == 0);
  CHECK(slurp(dot).rfind("graph ball {", 0) == 0);
  std::remove(dot.c_str());
}

TEST_CASE("argument errors exit with 2") {
  CHECK(run("ball --bogus 1") == 2);
  CHECK(run("ball --radius 13") == 2);
  CHECK(run("") == 2);                  // a subcommand is required
  CHECK(run("classify") == 2);          // missing word
  CHECK(run("ball --out /nonexistent_zzz/x.json") == 2);
}

TEST_CASE("classify and reduce on the defining relation") {
  json c = run_json("classify a1 b1 A1 B1 a2 b2 A2 B2");
  CHECK(c["trivial"] == true);
  CHECK(c["canonical"]["text"] == "1");
  CHECK(c["distance_to_identity"] == 0);

  json r = run_json("reduce a1 b1 A1 B1 a2 b2 A2 B2");
  CHECK(r["steps"].size() == 1);
  CHECK(r["reduced"]["text"] == "1");
  CHECK(r["trivial"] == true);

  json g = run_json("geodesics a1 b1 A1 B1");
  CHECK(g["count"] == 2);
  CHECK(g["exceptional"] == true);
  CHECK(g["geodesics"].size() == 2);
}

TEST_CASE("diameter summary") {
  json doc = run_json("diam --genus 2 --radius 2");
  CHECK(doc["faces"] == 65);
  CHECK(doc["eloignement"] == 2);
  CHECK(doc["sandwich_holds"] == true);
}

TEST_CASE("torus footprint from squares") {
  json one = run_json("torus-footprint --squares 0,0");
  CHECK(one["length"] == 3);
  CHECK(one["height"] == 3);
  CHECK(one["plan"]["steps"].empty());
  CHECK(one["plan"]["terminal"] == "intore");

  json domino = run_json("torus-footprint --squares '0,0;1,0'");
  CHECK(domino["length"] == 5);
  CHECK(domino["height"] == 3);
  CHECK(domino["diam"] == 5);
  CHECK(domino["plan"]["step_count"] == 2);
}

TEST_CASE("torus footprint from explicit measurements") {
  json doc = run_json("torus-footprint --faces '0,0;1,0' --vlines '0.5;1' --hlines 0.5");
  CHECK(doc["length"] == 2);
  CHECK(doc["height"] == 1);
  CHECK(doc["footprint"]["derived"] == false);
  CHECK(doc["diam"] == 1);

  CHECK(run("torus-footprint --faces 0,0 --vlines 7") == 2);   // off-span line
  CHECK(run("torus-footprint --vlines 0.5") == 2);             // lines need faces
  CHECK(run("torus-footprint --squares 0,0 --random 5") == 2); // two sources
  CHECK(run("torus-footprint") == 2);                          // no source
}

TEST_CASE("torus footprint from a random blob") {
  json doc = run_json("torus-footprint --random 10 --seed 5");
  CHECK(doc["seed"] == 5);
  CHECK(doc["footprint"]["derived"] == true);
  CHECK(doc["footprint"]["squares"].size() == 10);

  json again = run_json("torus-footprint --random 10 --seed 5");
  CHECK(again == doc);
}

TEST_CASE("growth criteria verdicts") {
  json root = run_json("criterion --d n^1/2");
  CHECK(root["sublinear"] == "yes");
  CHECK(root["nlogn"] == "yes");

  json lin = run_json("criterion --d n");
  CHECK(lin["sublinear"] == "no");

  json damped = run_json("criterion --d n*log^-1");
  CHECK(damped["sublinear"] == "yes");
  CHECK(damped["nlogn"] == "no");

  json rel = run_json("criterion --d n^1/2 --w n");
  CHECK(rel.contains("over_weights"));

  CHECK(run("criterion --d n^-1") == 2);
  CHECK(run("criterion") == 2);
}

TEST_CASE("enumeration words") {
  json by_index = run_json("avila --n 12");
  CHECK(by_index["word"]["text"] == "b a a");
  CHECK(by_index["conjugator_length_bound"] == "56");

  json by_word = run_json("avila --word baa");
  CHECK(by_word["n"] == 12);

  CHECK(run("avila --n 3 --word b") == 2);
  CHECK(run("avila") == 2);
}

TEST_CASE("sigma placements") {
  json doc = run_json("sigma");
  CHECK(doc["complete"] == true);
  CHECK(doc["sigma"].size() == 6);
  CHECK(doc.contains("l_spec"));
  CHECK(doc.contains("k_spec"));

  // Linearly growing word lengths exhaust every candidate position.
  json blocked = run_json("sigma --l n --count 6", 1);
  CHECK(blocked["complete"] == false);
  CHECK(blocked.contains("blocking_m"));
  CHECK(blocked.contains("reason"));

  std::string prof = temp_path("profile") + ".json";
  {
    std::ofstream f(prof);
    f << "{\"l\": \"1\", \"k\": 2}\n";
  }
  json from_file = run_json("sigma --profile " + prof + " --count 4");
  CHECK(from_file["complete"] == true);
  CHECK(from_file["sigma"].size() == 4);
  std::remove(prof.c_str());

  CHECK(run("sigma --l weird") == 2);
}

TEST_CASE("bound certificates") {
  json closed = run_json("cert --surface closed --genus 2 --el 20");
  CHECK(closed["upper"]["render"] == "C' + 168");
  CHECK(closed["lower"]["render"] == "18*1/C");

  json boundary = run_json("cert --surface boundary --diam 10");
  CHECK(boundary["upper"]["render"] == "33");

  json torus = run_json("cert --surface torus --diam 5");
  CHECK(torus["upper"]["render"] == "20*C + C'");

  json disp = run_json("cert --kind displacement --lambda 4");
  CHECK(disp["bound"]["render"] == "42*log(18)");
  CHECK(disp["bound"].contains("certified_interval"));

  CHECK(run_json("cert --kind baumslag --p 2 --n 3")["length_bound"] == "7");
  CHECK(run_json("cert --kind heisenberg --n 5")["length_bound"] == "20");

  CHECK(run("cert") == 2);
  CHECK(run("cert --surface torus --kind heisenberg") == 2);
  CHECK(run("cert --surface klein") == 2);
  CHECK(run("cert --kind baumslag --p 1") == 2);
}

TEST_CASE("annulus schedules") {
  std::string emit = temp_path("sched") + ".json";
  std::string traj = temp_path("traj") + ".csv";
  json fig = run_json("annulus --preset figure --emit " + emit + " --traj " + traj);
  CHECK(fig["schedule"]["lambda"] == 4);
  CHECK(fig["schedule"]["delays"] == json::array({1, 1, 1, 2, 4}));
  json sched = json::parse(slurp(emit));
  CHECK(sched["kind"] == "schedule");
  CHECK(slurp(traj).rfind("round,strip0", 0) == 0);
  std::remove(emit.c_str());
  std::remove(traj.c_str());

  CHECK(run("annulus --reach 3,2,1") == 1);     // decreasing reach table
  CHECK(run("annulus") == 2);                   // nothing to do
  CHECK(run("annulus --targets 1,2 --emit x") == 2);  // no schedule requested
  CHECK(run("annulus --preset diagram") == 2);
}

TEST_CASE("annulus target orbits") {
  json doc = run_json("annulus --targets 3/2,9/4,11/4 --l 1 --growth 3");
  CHECK(doc["admissible_input"] == true);
  CHECK(doc["orbit"]["kind"] == "orbit");
  CHECK(doc["schedule"]["l"] == 1);
  REQUIRE(doc["lambda_growth"].size() == 3);
  CHECK(doc["lambda_growth"][0]["bound_holds"] == true);

  json lifted = run_json("annulus --targets 1,2,4");
  CHECK(lifted["admissible_input"] == false);
  CHECK(lifted["orbit"]["displacement_monotone"] == false);

  std::string vfile = temp_path("targets") + ".json";
  {
    std::ofstream f(vfile);
    f << "[\"3/2\", 3, \"7/2\"]\n";
  }
  json from_file = run_json("annulus --v " + vfile + " --l 1");
  CHECK(from_file["admissible_input"] == true);
  {
    std::ofstream f(vfile);
    f << "[1.5]\n";
  }
  CHECK(run("annulus --v " + vfile) == 2);  // floats are refused, not rounded
  std::remove(vfile.c_str());

  CHECK(run("annulus --targets 1,2 --v " + vfile) == 2);
}

TEST_CASE("lemma suite runner") {
  json doc = run_json("verify-lemmas --suite fact1");
  CHECK(doc["kind"] == "suites");
  REQUIRE(doc["results"].size() == 1);
  CHECK(doc["results"][0]["name"] == "fact1");
  CHECK(doc["all_pass"] == true);

  json rings = run_json("verify-lemmas --suite adjacence");
  CHECK(rings["all_pass"] == true);

  CHECK(run("verify-lemmas --suite nonsense") == 2);
}

TEST_CASE("enumeration budget exits with 3") {
  std::string cmd = "DISTO_BALL_BUDGET=10 " + bin() + " ball --radius 3 >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  CHECK(WEXITSTATUS(rc) == 3);
}

}  // TEST_SUITE
