#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qwiht/error.hpp"
#include "qwiht/report.hpp"

using namespace qwiht;

TEST_CASE("numbers print with twelve significant digits") {
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(2.0) == "2");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(123456789.0123456) == "123456789.012");
  CHECK(format_number(1e-20) == "1e-20");
}

TEST_CASE("table accounting") {
  TableArtifact ok{"g", "c", {{2, 6, 3}, {4, 3, 0}}, 24, 6};
  CHECK_NOTHROW(ok.check_accounting());
  CHECK(ok.infinite_hitting_time());
  CHECK(ok.verdict() == "Yes, infinite hitting time exists");
  TableArtifact wrong_space{"g", "c", {{2, 6, 3}, {4, 3, 0}}, 25, 6};
  CHECK_THROWS_AS(wrong_space.check_accounting(), InvariantError);
  TableArtifact wrong_total{"g", "c", {{2, 6, 3}, {4, 3, 0}}, 24, 5};
  CHECK_THROWS_AS(wrong_total.check_accounting(), InvariantError);
  TableArtifact none{"g", "c", {{24, 1, 0}}, 24, 0};
  CHECK(none.verdict() == "No, infinite hitting time does not exist");
}

TEST_CASE("table csv layout") {
  TableArtifact t{"cube3", "grover", {{2, 6, 3}, {4, 3, 0}}, 24, 6};
  CHECK(render_table_csv({t}) == "graph,coin,k,m_k,V_k\ncube3,grover,6,2,3\ncube3,grover,3,4,0\n");
}

TEST_CASE("reproducing the first table") {
  ReproduceOptions opt;
  opt.target = "1";
  const auto out = reproduce(opt);
  CHECK(out.csv ==
        "# qwiht reproduce target=1 seed=1\n"
        "graph,coin,k,m_k,V_k\n"
        "cube3,grover,6,2,3\ncube3,grover,3,4,0\n"
        "cube3,dft,2,2,1\ncube3,dft,2,8,0\ncube3,dft,1,4,0\n"
        "cube3,random(seed=1),1,24,0\n");
  CHECK(out.text.find("|V| = 6") != std::string::npos);
  CHECK(reproduce(opt).json == out.json);
  opt.target = "9";
  CHECK_THROWS_AS(reproduce(opt), ArgumentError);
}

TEST_CASE("summary grid") {
  ReproduceOptions opt;
  opt.target = "summary";
  const auto out = reproduce(opt);
  std::istringstream csv(out.csv);
  std::string line;
  std::getline(csv, line);
  std::getline(csv, line);
  CHECK(line == "graph,coin,V,H");
  std::size_t rows = 0, positive = 0;
  while (std::getline(csv, line)) {
    ++rows;
    const auto v = std::stoul(line.substr(line.find(',', line.find(',') + 1) + 1));
    const bool random = line.find("random") != std::string::npos;
    const bool s32 = line.rfind("s3-2,", 0) == 0;
    CHECK((v > 0) == (!random && !s32));
    positive += v > 0;
  }
  CHECK(rows == 24);
  CHECK(positive == 14);
}

TEST_CASE("configured runs are byte-deterministic") {
  const auto text = R"(name = det
[graph]
preset = s3-3
[coin]
kind = random
[analysis]
run = decompose, iht, cps, symmetries, sweep, simulate
[simulate]
steps = 300
initial = random
)";
  const auto a = run(parse_config(text));
  const auto b = run(parse_config(text));
  CHECK(a.json == b.json);
  CHECK(a.csv == b.csv);
  CHECK(a.text == b.text);
  REQUIRE(a.files.size() == b.files.size());
  for (std::size_t i = 0; i < a.files.size(); ++i) CHECK(a.files[i].content == b.files[i].content);
  CHECK(a.csv.rfind("# qwiht name=det graph=s3-3 coin=random(seed=1) seed=1\n", 0) == 0);
  CHECK(a.json.find("\"basis\"") == std::string::npos);
}

TEST_CASE("seed override changes random coins") {
  auto cfg = parse_config("[graph]\npreset = cube3\n[coin]\nkind = random\n");
  RunOverrides o;
  o.seed = 77;
  apply_overrides(cfg, o);
  CHECK(run(cfg).csv.find("random(seed=77)") != std::string::npos);
  o.seed.reset();
  o.rank_tol = 0.0;
  CHECK_THROWS_AS(apply_overrides(cfg, o), ConfigError);
}

TEST_CASE("bases are emitted on request") {
  const auto out = run(parse_config("[graph]\npreset = cube3\n[output]\nbases = true\n"));
  CHECK(out.json.find("\"basis\"") != std::string::npos);
}

TEST_CASE("simulate reports the overlap cross-check") {
  const auto out = run(parse_config("[graph]\npreset = cube3\n[analysis]\nrun = simulate\n[simulate]\ninitial = basis:0:0\n"));
  CHECK(out.json.find("\"overlap\": 0.4,") != std::string::npos);
  CHECK(out.json.find("\"verdict\": \"infinite (certified by IHT overlap)\"") != std::string::npos);
  CHECK(out.text.find("[decompose]") == std::string::npos);
  CHECK_THROWS_AS(run(parse_config("[graph]\npreset = cube3\n[analysis]\nrun = simulate\n[simulate]\ninitial = iht:6\n")),
                  ConfigError);
}

TEST_CASE("outputs are written into the target directory") {
  const auto dir = std::filesystem::temp_directory_path() / "qwiht_report_test";
  std::filesystem::remove_all(dir);
  const auto out = run(parse_config("name = w\n[graph]\npreset = cube3\n"));
  write_outputs(out, dir.string());
  for (const auto& f : out.files) {
    std::ifstream is(dir / f.name);
    std::stringstream ss;
    ss << is.rdbuf();
    CHECK(ss.str() == f.content);
  }
  CHECK(std::filesystem::exists(dir / "w.iht.csv"));
  std::filesystem::remove_all(dir);
}
