#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "../tools/cli.hpp"
#include "geonet/io.hpp"
#include "geonet/relax.hpp"
#include "support.hpp"

using namespace geonet;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "geonet_test_cli";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST_CASE("solve-angles") {
  const Run r = run({"solve-angles"});
  CHECK(r.code == 0);
  CHECK(r.out.find("3.38257526585546") != std::string::npos);
  CHECK(run({"solve-angles", "--tol", "1e-20"}).code == 2);
}

TEST_CASE("construct and verify") {
  const std::string net = scratch("t3.json");
  REQUIRE(run({"construct", "--family", "t3", "--out", net}).code == 0);
  CHECK(load_net(net).topology().vertex_count() == 29);

  const Run v = run({"verify", "--in", net, "--irreducibility", "--lemmas", "--report", scratch("v.csv")});
  CHECK(v.code == 0);
  CHECK(read_text(scratch("v.csv")).find("lemma,intercept_ratio") != std::string::npos);

  CHECK(run({"verify", "--in", scratch("nope.json")}).code == 2);
  CHECK(run({"construct", "--family", "t3", "--n", "2"}).code == 2);
  CHECK(run({"construct", "--family", "ring", "--n", "3"}).code == 2);
  CHECK(run({"construct", "--family", "hex"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify fails on an unbalanced net") {
  const std::string net = scratch("jit.json");
  save_net(jitter_interior(testing::net25().net, 0.05, 1), net);
  CHECK(run({"verify", "--in", net}).code == 1);
  CHECK(run({"imbalance", "--in", net}).code == 0);
}

TEST_CASE("relax") {
  const std::string in = scratch("jit2.json"), out = scratch("relaxed.json");
  save_net(jitter_interior(testing::net25().net, 0.05, 2), in);
  const Run r = run({"relax", "--in", in, "--out", out});
  CHECK(r.code == 0);
  CHECK(max_imbalance(load_net(out)) <= 1e-10);
  CHECK(run({"relax", "--in", in, "--max-iters", "3"}).code == 1);
  CHECK(run({"relax", "--in", in, "--frames", scratch("frames")}).code == 2);
  CHECK(run({"relax", "--in", in, "--step", "-1"}).code == 2);

  const std::string frames = scratch("frames");
  std::filesystem::remove_all(frames);
  CHECK(run({"relax", "--in", in, "--max-iters", "20", "--trace-every", "10", "--frames", frames}).code == 1);
  CHECK(std::filesystem::exists(std::filesystem::path(frames) / "frame_00002.svg"));
}

TEST_CASE("export-svg") {
  const std::string net = scratch("t3b.json"), svg = scratch("t3.svg");
  REQUIRE(run({"construct", "--family", "t3", "--out", net}).code == 0);
  CHECK(run({"export-svg", "--in", net, "--out", svg}).code == 0);
  CHECK(read_text(svg).find("<svg") != std::string::npos);
  CHECK(run({"export-svg", "--in", net, "--out", svg, "--margin", "0"}).code == 2);
}
