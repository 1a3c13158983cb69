#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "scnr/cli.hpp"
#include "scnr/error.hpp"
#include "scnr/families.hpp"
#include "scnr/json_io.hpp"

using namespace scnr;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const CliHooks& hooks = {}) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err, hooks);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("scnr_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("digraph JSON round trip and diagnostics") {
  const Digraph g = families::h_family(7, 4);
  CHECK(parse_digraph(to_json(g).dump()) == g);
  CHECK(to_json(Digraph(3, {{2, 0}, {0, 1}, {1, 2}})).dump() ==
        R"({"n":3,"arcs":[[0,1],[1,2],[2,0]]})");
  CHECK_THROWS_WITH_AS(parse_digraph(R"({"n":3,"arcs":[[0,1],[2,2]]})"),
                       doctest::Contains("arc #1"), InputError);
  CHECK_THROWS_WITH_AS(parse_digraph(R"({"n":3,"arcs":[[0,1],[0,1]]})"),
                       doctest::Contains("arc #1"), InputError);
  CHECK_THROWS_WITH_AS(parse_digraph(R"({"n":3,"arcs":[[0,1],[0]]})"),
                       doctest::Contains("arc #1"), InputError);
  CHECK_THROWS_WITH_AS(parse_digraph("{\"n\":3,\n\"arcs\":[[0,1]"), doctest::Contains("line 2"),
                       InputError);
  CHECK_THROWS_AS(parse_digraph(R"({"arcs":[]})"), InputError);
}

TEST_CASE("polynomial and circulant JSON") {
  const ReliabilityPolynomial rp(3, {1, 0, 3, 0});
  CHECK(to_json(rp).dump() == R"({"n":3,"F":["1","0","3","0"]})");
  CHECK(polynomial_from_json(to_json(rp)) == rp);
  const ReliabilityPolynomial big(40, std::vector<mpz_class>(41, 0));
  CHECK(polynomial_from_json(to_json(big)) == big);
  CHECK(to_json(CirculantSpec(8, 5, 1)).dump() == R"({"n":8,"S":[1,5]})");
  CHECK(circulant_from_json(Json::parse(R"({"n":8,"S":[5,1]})")) == CirculantSpec(8, 1, 5));
  CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"n":1,"F":["x","0"]})")), InputError);
}

TEST_CASE("compute emits the polynomial") {
  const std::string c3 = write_temp("c3.json", R"({"n":3,"arcs":[[0,1],[1,2],[2,0]]})");
  const Run r = run({"compute", c3, "--format", "json"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "{\"n\":3,\"F\":[\"1\",\"0\",\"3\",\"0\"]}\n");
  CHECK(r.err.empty());

  const Run extra = run({"compute", c3, "--format", "json", "--nform", "--power", "--eval", "1/2"});
  const Json j = Json::parse(extra.out);
  CHECK(j["N"] == Json::parse(R"(["0","3","0","1"])"));
  CHECK(j["power"] == Json::parse(R"(["0","3","-6","4"])"));
  CHECK(j["eval"]["value"] == "1/2");

  const Run text = run({"compute", c3, "--eval", "1/2"});
  CHECK(text.out.find("F = 1 0 3 0") != std::string::npos);
  CHECK(text.out.find("Rel(1/2) = 1/2") != std::string::npos);
  const Run csv = run({"compute", c3, "--format", "csv"});
  CHECK(csv.out.rfind("i,F\n0,1\n1,0\n2,3\n3,0\n", 0) == 0);
}

TEST_CASE("compute input errors") {
  const std::string loop = write_temp("loop.json", R"({"n":3,"arcs":[[0,1],[1,1]]})");
  const Run r = run({"compute", loop});
  CHECK(r.code == kExitBadInput);
  CHECK(r.err.find("arc #1 [1,1] is a self-loop") != std::string::npos);

  const std::string weak = write_temp("weak.json", R"({"n":2,"arcs":[[0,1]]})");
  const Run w = run({"compute", weak, "--format", "json"});
  CHECK(w.code == kExitOk);
  CHECK(w.err.find("warning") != std::string::npos);
  CHECK(Json::parse(w.out)["F"][0] == "0");

  CHECK(run({"compute", "/nonexistent/file.json"}).code == kExitBadInput);
  CHECK(run({"compute"}).code == kExitBadInput);
  CHECK(run({"bogus"}).code == kExitBadInput);
  CHECK(run({"compute", weak, "--format", "xml"}).code == kExitBadInput);
}

TEST_CASE("compute capacity") {
  const std::string big = write_temp("c31.json", to_json(families::directed_cycle(31)).dump());
  const Run r = run({"compute", big});
  CHECK(r.code == kExitCapacity);
  CHECK(r.err.find("30") != std::string::npos);

  const std::string c12 = write_temp("c12.json", to_json(families::directed_cycle(12)).dump());
  ::setenv("SCNR_MAX_N", "10", 1);
  CHECK(run({"compute", c12}).code == kExitCapacity);
  ::setenv("SCNR_MAX_N", "100", 1);
  CHECK(run({"compute", big}).code == kExitCapacity);
  CHECK(run({"compute", c12}).code == kExitOk);
  ::unsetenv("SCNR_MAX_N");
}

TEST_CASE("family emits digraph JSON") {
  const Run r = run({"family", "--type", "cycle", "--n", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "{\"n\":3,\"arcs\":[[0,1],[1,2],[2,0]]}\n");
  const Run c = run({"family", "--type", "circulant", "--n", "8", "--s", "1,5"});
  CHECK(parse_digraph(c.out) == CirculantSpec(8, 1, 5).to_digraph());
  const Run h = run({"family", "--type", "h", "--n", "10", "--k", "8"});
  CHECK(parse_digraph(h.out) == families::h_family(10, 8));
  CHECK(run({"family", "--type", "g", "--n", "10"}).code == kExitBadInput);
  CHECK(run({"family", "--type", "circulant", "--n", "8", "--s", "0,5"}).code == kExitBadInput);
}

TEST_CASE("compare subcommand") {
  const std::string g = write_temp("z8a.json", to_json(CirculantSpec(8, 1, 7).to_digraph()).dump());
  const std::string h = write_temp("z8b.json", to_json(CirculantSpec(8, 1, 5).to_digraph()).dump());
  const Run r = run({"compare", g, h, "--format", "json"});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["verdict"]["near_zero"] == "G");
  CHECK(j["verdict"]["near_one"] == "H");
  CHECK(j["verdict"]["dominance"]["status"] == "mixed");
  const Run text = run({"compare", g, h});
  CHECK(text.out.find("near 0: G") != std::string::npos);
  const std::string c5 = write_temp("c5.json", to_json(families::directed_cycle(5)).dump());
  CHECK(run({"compare", g, c5}).code == kExitBadInput);
}

TEST_CASE("search subcommand") {
  const Run r = run({"search", "--n", "8", "--format", "json"});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["winner"] == "none");
  CHECK(j["witness"]["first"] == "{1,7}");
  CHECK(j["witness"]["second"] == "{1,5}");
  CHECK(j["witness"]["crossings"].size() >= 1);
  const std::string lo = j["witness"]["crossings"][0]["lo"];
  CHECK(lo.find('/') != std::string::npos);
  CHECK(run({"search", "--n", "4"}).code == kExitOk);
  CHECK(run({"search", "--n", "3"}).code == kExitBadInput);
  CHECK(run({"search", "--n", "26"}).code == kExitBadInput);
}

TEST_CASE("verify subcommand") {
  const Run ok = run({"verify", "--n", "6,8", "--format", "json"});
  CHECK(ok.code == kExitOk);
  CHECK(Json::parse(ok.out)["all_passed"] == true);

  const Run cap = run({"verify", "--n", "30"});
  CHECK(cap.code == kExitOk);
  CHECK(cap.out.find("SKIP") != std::string::npos);

  CliHooks hooks;
  auto flipped = std::make_shared<bool>(false);
  hooks.tamper = [flipped](std::string_view claim, int, std::vector<mpz_class>& f) {
    if (claim != "star-plus-arc-redundant" || *flipped) return;
    f[1] -= 1;
    *flipped = true;
  };
  const Run bad = run({"verify", "--n", "6"}, hooks);
  CHECK(bad.code == kExitClaimFailed);
  CHECK(bad.out.find("FAIL star-plus-arc-redundant n=6") != std::string::npos);

  CHECK(run({"verify", "--n", "5..x"}).code == kExitBadInput);
}

TEST_CASE("parse_order_list") {
  CHECK(parse_order_list("5..7,21") == std::vector<int>{5, 6, 7, 21});
  CHECK(parse_order_list("9") == std::vector<int>{9});
  CHECK_THROWS_AS(parse_order_list("9..5"), InputError);
  CHECK_THROWS_AS(parse_order_list(""), InputError);
}

TEST_CASE("mc subcommand") {
  const std::string c3 = write_temp("mc3.json", to_json(families::directed_cycle(3)).dump());
  const Run r = run({"mc", c3, "--eval", "0.5", "--samples", "100000", "--seed", "7",
                     "--format", "json"});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["kind"] == "estimate");
  CHECK(j["samples"] == 100000);
  const Run again = run({"mc", c3, "--eval", "0.5", "--samples", "100000", "--seed", "7",
                         "--format", "json", "--workers", "3"});
  CHECK(again.out == r.out);
  CHECK(run({"mc", c3, "--eval", "2"}).code == kExitBadInput);
}

TEST_CASE("outputs are identical across worker counts") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"search", "--n", "10", "--format", "json"},
           {"verify", "--n", "7,10", "--format", "json"}}) {
    std::vector<std::string> one = args, many = args;
    one.insert(one.end(), {"--workers", "1"});
    many.insert(many.end(), {"--workers", "8"});
    CHECK(run(one).out == run(many).out);
  }
}
