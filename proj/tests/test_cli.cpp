#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mds/cli.hpp"
#include "mds/render.hpp"

using namespace mds;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "mds-oracle");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(cli({"check-2d", "--left", "-3/4,1/2", "--right", "1/4,3/4"}).code == kExitOk);
  CHECK(cli({"check-2d", "--left", "-3/4,1/2", "--right", "1/4,1/2"}).code == kExitInconclusive);
  CHECK(cli({"check-tetra", "--tuple", "-3/5,6/17,1/3,1/2"}).code == kExitOk);
  CHECK(cli({"check-tetra", "--tuple", "-5/18,5/7,2/5,1"}).code == kExitInconclusive);
  CHECK(cli({"check-3d", "--left", "-3/5,-1/5,-3/10", "--right", "6/17,2/17,3/17"}).code == kExitOk);
  CHECK(cli({"check-3d", "--n1", "--left", "-2/3,-1/3,-1/3", "--right", "1/3,1/6,1/6"}).code == kExitOk);
  CHECK(cli({"check-wps", "--weights", "17,20,18,27"}).code == kExitOk);
  CHECK(cli({"check-wps", "--weights", "7,18,5,25"}).code == kExitInconclusive);
  CHECK(cli({"rays", "--tuple", "-3/5,6/17,1/3,1/2"}).code == kExitOk);
}

TEST_CASE("input errors exit with 2") {
  CHECK(cli({}).code == kExitInputError);
  CHECK(cli({"frobnicate"}).code == kExitInputError);
  CHECK(cli({"check-2d", "--left", "1/0,1", "--right", "1/4,3/4"}).code == kExitInputError);
  CHECK(cli({"check-2d", "--left", "-3/4,1/2"}).code == kExitInputError);
  CHECK(cli({"check-2d", "--left", "-3/4,1/2,1", "--right", "1/4,3/4"}).code == kExitInputError);
  // Crossing outside the unit segment.
  CHECK(cli({"check-2d", "--left", "-1,3", "--right", "1,3"}).code == kExitInputError);
  CHECK(cli({"check-2d", "--left", "-3/4,1/2", "--right", "1/4,3/4", "--m-factor", "0"}).code == kExitInputError);
  CHECK(cli({"check-tetra", "--tuple", "1/2,1/2,0,0"}).code == kExitInputError);
  CHECK(cli({"check-3d", "--n1", "--left", "-5/18,-1/9,-5/18", "--right", "5/7,2/7,5/7"}).code ==
        kExitInputError);
  CHECK(cli({"check-wps", "--weights", "1,2,3"}).code == kExitInputError);
  CHECK(cli({"check-wps", "--weights", "1,x,3,4"}).code == kExitInputError);
  CHECK(cli({"search", "--dim", "5"}).code == kExitInputError);
  CHECK(cli({"check-2d", "--format", "xml", "--left", "-3/4,1/2", "--right", "1/4,3/4"}).code == kExitInputError);
  CHECK(cli({"check-2d", "--input", "/nonexistent/file.json"}).code == kExitInputError);
}

TEST_CASE("json output carries the schema and round-trips") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"check-2d", "--json", "--left", "-3/4,1/2", "--right", "1/4,3/4"},
           {"check-3d", "--format=json", "--left", "-5/18,-1/9,-5/18", "--right", "5/7,2/7,5/7"},
           {"check-tetra", "--json", "--tuple", "-3/5,6/17,1/3,1/2"},
           {"check-wps", "--weights", "47,13,12,30"}}) {
    const Run r = cli(args);
    const Json j = Json::parse(r.out);
    CHECK(j.at("schema") == kSchema);
    CHECK(to_json(report_from_json(j)) == j);
  }
  const Json j = Json::parse(cli({"check-tetra", "--json", "--tuple", "-3/5,6/17,1/3,1/2"}).out);
  CHECK(j.at("verdict") == "NotMDS");
  CHECK(j.at("normalization").at("m") == "170");
  CHECK(j.at("values").at("w") == "81/85");
}

TEST_CASE("rays") {
  const Json j = Json::parse(cli({"rays", "--tuple", "-3/5,6/17,1/3,1/2"}).out);
  CHECK(j.at("weights") == Json::parse("[17,20,18,27]"));
  CHECK(j.at("index") == "1");
  const Run md = cli({"rays", "--format", "md", "--tuple", "-2/3,1/3,1/2,1/2"});
  CHECK(md.out.find("index 6") != std::string::npos);
}

TEST_CASE("csv and markdown layouts") {
  const Run csv = cli({"check-2d", "--format", "csv", "--left", "-3/4,1/2", "--right", "1/4,3/4"});
  CHECK(csv.out.rfind("relation,id,holds,witness\n", 0) == 0);
  const Run md = cli({"check-2d", "--left", "-3/4,1/2", "--right", "1/4,3/4"});
  CHECK(md.out.find("| condition | holds | witness |") != std::string::npos);
  const Run table = cli({"search", "--bound", "50"});
  CHECK(table.out.rfind("| weights | relation | n |\n|---|---|---|\n", 0) == 0);
  CHECK(table.out.find("| 17,20,18,27 | (2,1,3,2) | 1 |") != std::string::npos);
  const Run tcsv = cli({"search", "--bound", "50", "--format", "csv"});
  CHECK(tcsv.out.rfind("weights,relation,n\n", 0) == 0);
}

TEST_CASE("file and stdin-free input") {
  const auto path = std::filesystem::temp_directory_path() / "mds_cli_polygon.json";
  {
    std::ofstream f(path);
    f << R"({"type": "polygon4", "p_left": ["-3/4", "1/2"], "p_right": ["1/4", "3/4"]})";
  }
  CHECK(cli({"check-2d", "--input", path.string()}).code == kExitOk);
  {
    std::ofstream f(path);
    f << R"({"type": "tetra", "tuple": ["-5/18", "5/7", "2/5", "1"]})";
  }
  CHECK(cli({"check-3d", "--input", path.string()}).code == kExitInconclusive);
  CHECK(cli({"check-tetra", "--input", path.string()}).code == kExitInconclusive);
  {
    std::ofstream f(path);
    f << "{not json";
  }
  CHECK(cli({"check-2d", "--input", path.string()}).code == kExitInputError);
  std::filesystem::remove(path);
}

TEST_CASE("search output does not depend on the number of jobs") {
  const std::string one = cli({"search", "--bound", "45", "--jobs", "1", "--json"}).out;
  CHECK(cli({"search", "--bound", "45", "--jobs", "4", "--json"}).out == one);
  setenv("MDS_ORACLE_JOBS", "3", 1);
  CHECK(cli({"search", "--bound", "45", "--json"}).out == one);
  unsetenv("MDS_ORACLE_JOBS");
  CHECK(Json::parse(one).at("rows").is_array());
}

TEST_CASE("verify-derivative") {
  const Run r = cli({"verify-derivative", "--samples-2d", "20", "--samples-3d", "5", "--seed", "3"});
  CHECK(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j.at("passed_2d") == 20);
  CHECK(r.err.find("20 passed") != std::string::npos);
}
