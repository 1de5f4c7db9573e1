#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "fibrous/cli.hpp"
#include "fibrous/functors.hpp"
#include "fibrous/json_io.hpp"
#include "fixtures.hpp"

namespace fs = std::filesystem;
using namespace fibrous;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = {}) {
  std::ostringstream out, err;
  std::istringstream in(stdin_text);
  int code = cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() {
    dir_ = fs::temp_directory_path() / ("fibrous-cli-" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }
  std::string write(const std::string& name, const std::string& text) const {
    auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string write_json(const std::string& name, const json& j) const { return write(name, j.dump()); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

std::string sierpinski_topology() { return R"({"nB": 2, "opens": [[], [1], [0, 1]]})"; }

}  // namespace

TEST_CASE("from-top then check") {
  Scratch s;
  auto top = s.write("sierpinski.json", sierpinski_topology());
  auto g = run({"from-top", top});
  REQUIRE(g.code == 0);
  auto doc = json::parse(g.out);
  CHECK(doc["nA"] == 3);
  CHECK(doc["R"] == json::parse("[[1],[0,1],[0,1]]"));
  auto path = s.write("sierpinski-g.json", g.out);

  auto c = run({"check", path});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("F1–F6: pass", 0) == 0);

  auto piped = run({"--json", "check", "-"}, g.out);
  CHECK(piped.code == 0);
  CHECK(json::parse(piped.out)["report"]["passed"] == true);
}

TEST_CASE("check reports violations with exit 1") {
  Scratch s;
  auto g = functor_G_obj(FiniteTopology::sierpinski());
  json doc = io::write_preorder(g.X);
  for (auto& t : doc["d"])
    if (t[0] == 1 && t[1] == 1) t[2] = 1;
  auto r = run({"--json", "check", s.write_json("bad.json", doc)});
  CHECK(r.code == 1);
  auto rep = json::parse(r.out)["report"];
  CHECK(rep["passed"] == false);
  CHECK(rep["violations"][0]["tag"] == "F1");
  CHECK(rep["violations"][0]["witness"] == json::array({1, 1}));
  auto prose = run({"check", s.path("bad.json")});
  CHECK(prose.code == 1);
  CHECK(prose.out.find("F1 violated, witness [1,1]") != std::string::npos);
}

TEST_CASE("format and usage errors exit 2") {
  Scratch s;
  auto bad = s.write("broken.json", "{\n  \"nB\": 2,\n  \"nA\": oops\n}");
  auto r = run({"check", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(run({"check", s.path("missing.json")}).code == 2);
  CHECK(run({"check", s.write("shape.json", R"({"nB": 1, "nA": 1, "p": [3], "R": [[0]], "d": [[0,0,0]]})")}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", "--no-such-flag", bad}).code == 2);
  CHECK(run({"sample", "metric-r"}).code == 2);
  CHECK(run({"enum-top", "5"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("to-top") {
  Scratch s;
  auto chain = fixtures::chain3();
  auto w = preorder_spatial_witness(chain);
  auto path = s.write_json("chain.json", io::write_preorder(chain, &w));
  auto r = run({"to-top", path});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["opens"] == json::parse("[[],[2],[1,2],[0,1,2]]"));
  auto brute = run({"to-top", "--algorithm", "brute", path});
  CHECK(brute.out == r.out);
  CHECK(run({"to-top", "--algorithm", "brute", "--brute-limit", "2", path}).code == 2);
  CHECK(run({"to-top", "--algorithm", "magic", path}).code == 2);
  CHECK(run({"to-top", s.write_json("plain.json", io::write_preorder(chain))}).code == 2);
}

TEST_CASE("equiv and umap") {
  Scratch s;
  auto g = functor_G_obj(FiniteTopology::sierpinski());
  auto gpath = s.write_json("g.json", io::write_preorder(g.X, &g.w));
  auto ppath = s.write_json("p.json", io::write_preorder(fixtures::sierpinski_preorder()));
  auto e = run({"--json", "equiv", gpath, ppath});
  CHECK(e.code == 0);
  CHECK(json::parse(e.out)["equivalent"] == true);

  auto d = functor_G_obj(FiniteTopology::discrete(2));
  auto i = functor_G_obj(FiniteTopology::indiscrete(2));
  auto no = run({"equiv", s.write_json("d.json", io::write_preorder(d.X)), s.write_json("i.json", io::write_preorder(i.X))});
  CHECK(no.code == 1);
  CHECK(no.out.find("not equivalent") != std::string::npos);

  auto u = run({"--json", "umap", gpath});
  CHECK(u.code == 0);
  auto doc = json::parse(u.out);
  CHECK(doc["umap"]["u"] == json::array({1, 0}));
  CHECK(doc["umap"]["R0"] == json::parse("[[0,0],[0,1],[1,1]]"));
  CHECK(run({"umap", s.write_json("inc.json", io::write_preorder(fixtures::incomparable_fiber()))}).code == 1);
}

TEST_CASE("compose and morphism checks") {
  Scratch s;
  auto sier = FiniteTopology::sierpinski();
  auto g = functor_G_obj(sier);
  auto x = s.write_json("g.json", io::write_preorder(g.X));
  auto c = functor_G_mor({1, 1}, g, g, sier, sier);
  auto id = identity_morphism(g.X);
  auto mc = s.write_json("c.json", io::write_morphism(c));
  auto mid = s.write_json("id.json", io::write_morphism(id));
  auto r = run({"compose", x, x, x, mid, mc});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out) == io::write_morphism(c));
  CHECK(run({"check", x, "--morphism", mc, "--target", x}).code == 0);
  CHECK(run({"check", x, "--morphism", mc}).code == 2);
}

TEST_CASE("roundtrip and enum-top") {
  auto fg = run({"roundtrip", "--mode", "fg", "--all-n", "3"});
  CHECK(fg.code == 0);
  CHECK(fg.out.find("FG = 1 checked on 29 topologies") != std::string::npos);
  auto gf = run({"--json", "roundtrip", "--mode", "gf", "--random", "20", "--seed", "7"});
  CHECK(gf.code == 0);
  auto doc = json::parse(gf.out);
  CHECK(doc["cases"] == 20);
  CHECK(doc["seed"] == 7);
  CHECK(run({"roundtrip", "--mode", "xy"}).code == 2);
  auto e = run({"--json", "enum-top", "2"});
  CHECK(json::parse(e.out)["count"] == 4);
  CHECK(run({"enum-top", "3"}).out.rfind("29 topologies on 3 points", 0) == 0);
}

TEST_CASE("sample, witness files and replay") {
  Scratch s;
  auto ok = run({"sample", "padic:3", "--samples", "10000", "--seed", "42"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("seed: 42") != std::string::npos);
  CHECK(ok.out.find("no violations in 10000 samples") != std::string::npos);

  auto a = run({"--json", "sample", "cantor", "--samples", "300"});
  auto b = run({"--json", "sample", "cantor", "--samples", "300"});
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["seed"] == 0);

  auto wpath = s.path("witness.json");
  auto bad = run({"sample", "mutant-metric-q", "--samples", "5000", "--witness-out", wpath});
  CHECK(bad.code == 1);
  REQUIRE(fs::exists(wpath));
  auto replay = run({"--json", "sample", "--replay", wpath});
  CHECK(replay.code == 1);
  std::ifstream f(wpath);
  auto wdoc = json::parse(f);
  CHECK(json::parse(replay.out)["report"]["violations"][0]["witness"] == wdoc["witness"]);

  CHECK(run({"sample", "tangent-disk", "--strict-paper", "--samples", "500"}).code == 0);
  CHECK(run({"sample", "cantor", "--strict-paper"}).code == 2);
}

TEST_CASE("modulus-check") {
  CHECK(run({"modulus-check", "padic-translate:3", "--samples", "2000"}).code == 0);
  auto wrong = run({"--json", "modulus-check", "q-lipschitz2-wrong", "--samples", "2000"});
  CHECK(wrong.code == 1);
  CHECK(json::parse(wrong.out)["report"]["violations"][0]["tag"] == "MOR2");
}

TEST_CASE("the installed binary maps exit statuses") {
  Scratch s;
  auto bad = s.write("broken.json", "{");
  auto top = s.write("t.json", sierpinski_topology());
  auto status = [](const std::string& cmd) {
    int raw = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  const std::string bin = FIBROUS_CLI_PATH;
  CHECK(status(bin + " from-top " + top) == 0);
  CHECK(status(bin + " check " + bad) == 2);
  CHECK(status(bin + " sample mutant-padic:3 --samples 3000") == 1);
}
