#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "polyface/constructions.hpp"
#include "polyface/io.hpp"

using namespace polyface;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("polyface_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content) const {
    fs::path p = path / name;
    std::ofstream(p) << content;
    return p.string();
  }
  std::string jfile(const std::string& name, const json& j) const { return file(name, j.dump()); }
};

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(POLYFACE_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 256> buf{};
  RunResult out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out.output += buf.data();
  int status = pclose(pipe);
  out.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

json u23_matroid_json() {
  return matroid_to_json(Matroid::uniform({2, full_mask(3), 3}));
}

}  // namespace

TEST_CASE("rank vector files round trip exactly") {
  RankVector h(2, {Rational(0), Rational(1, 3), Rational(2), Rational(7, 3)});
  json j = rank_vector_to_json(h);
  CHECK(rank_vector_from_json(j) == h);
  CHECK(j["values"][1] == "1/3");

  SUBCASE("integers are accepted, floats are not") {
    CHECK(rank_vector_from_json(json{{"n", 1}, {"values", {0, 2}}}).at(1) == 2);
    CHECK_THROWS_AS(rank_vector_from_json(json{{"n", 1}, {"values", {0, 1.5}}}), ParseError);
  }
  SUBCASE("schema violations") {
    CHECK_THROWS_AS(rank_vector_from_json(json{{"n", 2}, {"values", {"0", "1"}}}), ParseError);
    CHECK_THROWS_AS(rank_vector_from_json(json{{"values", {"0", "1"}}}), ParseError);
    CHECK_THROWS_AS(rank_vector_from_json(json{{"n", 1}, {"values", {"1", "1"}}}), ParseError);
    CHECK_THROWS_AS(rank_vector_from_json(json{{"n", 1}, {"values", {"0", "1/0"}}}), ParseError);
  }
}

TEST_CASE("entropy vector files use plain numbers") {
  EntropyVector h(1, {0.0, 0.5});
  json j = entropy_vector_to_json(h);
  EntropyVector back = entropy_vector_from_json(j);
  CHECK(back.at(1) == 0.5);
}

TEST_CASE("matroid files accept circuits, ranks, or both") {
  Matroid u23 = Matroid::uniform({2, full_mask(3), 3});
  json both = matroid_to_json(u23);
  CHECK(matroid_from_json(both) == u23);

  json circuits_only{{"n", 3}, {"circuits", {{1, 2, 3}}}};
  CHECK(matroid_from_json(circuits_only) == u23);

  json ranks_only{{"n", 3}, {"ranks", {0, 1, 1, 2, 1, 2, 2, 2}}};
  CHECK(matroid_from_json(ranks_only) == u23);

  SUBCASE("disagreeing fields are rejected") {
    json bad = both;
    bad["circuits"] = json::array({json::array({1, 2})});
    CHECK_THROWS_WITH_AS(matroid_from_json(bad), doctest::Contains("disagree"), ParseError);
  }
  SUBCASE("missing payload") {
    CHECK_THROWS_AS(matroid_from_json(json{{"n", 3}}), ParseError);
  }
}

TEST_CASE("distribution files round trip") {
  auto parity = uniform_matroid_dist(2, 3, 2);
  json j = distribution_to_json(parity);
  JointDistribution back = distribution_from_json(j);
  CHECK(back.pmf() == parity.pmf());
  SUBCASE("masses must sum to one") {
    json bad = j;
    bad["pmf"][0]["p"] = "1/8";
    CHECK_THROWS_WITH_AS(distribution_from_json(bad), doctest::Contains("sum"), ParseError);
  }
}

TEST_CASE("certificates re-validate on load") {
  Certificate cert = matus_boundary_dist(Matroid::uniform({2, full_mask(3), 3}), 0b011, 2, 0.4);
  json j = certificate_to_json(cert);
  Certificate back = certificate_from_json(j);
  CHECK(back.residual < 1e-9);
  CHECK(back.a == cert.a);

  SUBCASE("tampered points fail") {
    json bad = j;
    bad["point"]["a"] = 0.5;
    CHECK_THROWS_WITH_AS(certificate_from_json(bad), doctest::Contains("re-validate"), ParseError);
  }
}

TEST_CASE("face reports serialize every section") {
  FaceReport r = classify_face(Matroid::uniform({2, full_mask(3), 3}), 0b011);
  json j = face_report_to_json(r);
  CHECK(j["face_type"] == "matus");
  CHECK(j["two_face_confirmed"] == true);
  CHECK(j["sum_face_dim"] == 2);
  CHECK(j["circuit_analysis"][0]["size"] == 3);
  CHECK(j["circuit_analysis"][0]["alpha_overlap"] == 2);
  CHECK(j["loop_conditions"]["m_loops_subset_of_u_loops"] == true);
  CHECK(j["chi"]["members"].size() == 15);  // every v in [2,16]
  CHECK(j.contains("notes"));
  CHECK(j.contains("certificates"));
}

TEST_CASE("region csv has the documented shape") {
  ChiOracle chi;
  Matroid u23 = Matroid::uniform({2, full_mask(3), 3});
  auto pieces = region_boundary_data(FaceType::Matus, chi.bind(u23), std::log(4.0));
  std::string csv = region_csv(pieces);
  CHECK(csv.rfind("label,kind,x1,y1,x2,y2\n", 0) == 0);
  CHECK(csv.find("staircase v=2,staircase,0,") != std::string::npos);
  CHECK(csv.find("entropic v=2,strip,") != std::string::npos);
}

TEST_CASE("cli command surface") {
  TempDir dir;
  std::string u23 = dir.jfile("u23.json", u23_matroid_json());
  std::string u23_rank = dir.jfile("u23_rank.json",
                                  rank_vector_to_json(Matroid::uniform({2, full_mask(3), 3}).rank()));
  std::string u11_rank = dir.jfile("u11_rank.json",
                                  rank_vector_to_json(Matroid::uniform({1, 0b001, 3}).rank()));
  std::string bad_rank = dir.jfile("bad_rank.json",
                                  json{{"n", 2}, {"values", {"0", "1", "1", "3"}}});
  std::string garbage = dir.file("garbage.json", "{not json");

  SUBCASE("check-polymatroid") {
    RunResult ok = run_cli("check-polymatroid --h " + u23_rank);
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("polymatroid") != std::string::npos);
    RunResult bad = run_cli("check-polymatroid --h " + bad_rank);
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("F(1;2|)") != std::string::npos);
    CHECK(run_cli("check-polymatroid --h " + garbage).exit_code == 2);
    CHECK(run_cli("check-polymatroid --h " + dir.path.string() + "/missing.json").exit_code == 2);
  }
  SUBCASE("face-dim") {
    RunResult r = run_cli("face-dim --h1 " + u23_rank + " --h2 " + u11_rank);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "2\n");
    RunResult single = run_cli("face-dim --h " + u23_rank);
    CHECK(single.output == "1\n");
    CHECK(run_cli("face-dim --h1 " + u23_rank).exit_code == 2);
  }
  SUBCASE("is-extreme and is-two-face") {
    CHECK(run_cli("is-extreme --h " + u23_rank).exit_code == 0);
    CHECK(run_cli("is-two-face --h1 " + u23_rank + " --h2 " + u11_rank).exit_code == 0);
    std::string u13_rank = dir.jfile("u13_rank.json",
                                    rank_vector_to_json(Matroid::uniform({1, full_mask(3), 3}).rank()));
    CHECK(run_cli("is-two-face --h1 " + u23_rank + " --h2 " + u13_rank).exit_code == 1);
  }
  SUBCASE("circuits") {
    RunResult r = run_cli("circuits --matroid " + u23 + " --format json");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.output)["circuits"] == json::array({json::array({1, 2, 3})}));
  }
  SUBCASE("classify emits a Matus report deterministically") {
    RunResult r1 = run_cli("classify --matroid " + u23 + " --alpha 1,2");
    CHECK(r1.exit_code == 0);
    CHECK(json::parse(r1.output)["face_type"] == "matus");
    RunResult r2 = run_cli("classify --matroid " + u23 + " --alpha 1,2");
    CHECK(r1.output == r2.output);  // byte-identical across runs
    CHECK(run_cli("classify --matroid " + u23 + " --alpha 1,2,3").exit_code == 1);
  }
  SUBCASE("region emits csv") {
    RunResult r = run_cli("region --matroid " + u23 + " --alpha 1,2 --a-max ln:4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("label,kind", 0) == 0);
    CHECK(r.output.find("entropic v=3") != std::string::npos);
  }
  SUBCASE("certify writes a loadable certificate") {
    std::string out = (dir.path / "cert.json").string();
    RunResult r = run_cli("certify --matroid " + u23 + " --alpha 1,2 --v 2 --a 0.4 --out " + out);
    CHECK(r.exit_code == 0);
    Certificate cert = certificate_from_json(load_json_file(out));
    CHECK(cert.a == 0.4);
    CHECK(cert.b == doctest::Approx(std::log(2.0) - 0.4));
    CHECK(cert.residual < 1e-9);
    CHECK(run_cli("certify --matroid " + u23 + " --alpha 1,2 --v 2 --a 2.0").exit_code == 1);
  }
  SUBCASE("lattice a values avoid precision loss") {
    RunResult r = run_cli("certify --matroid " + u23 + " --alpha 1,2 --v 3 --a ln:3");
    CHECK(r.exit_code == 0);
    json cert = json::parse(r.output);
    CHECK(cert["point"]["b"].get<double>() == doctest::Approx(0.0));
  }
}
