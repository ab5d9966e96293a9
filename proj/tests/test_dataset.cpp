#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <random>
#include <sstream>

#include "csv.hpp"
#include "dataset.hpp"
#include "error.hpp"
#include "ingest.hpp"
#include "json_io.hpp"
#include "oracles.hpp"

using rdc::CodecDataset;
using rdc::DatasetMode;
using rdc::RawMeasurement;
using rdc::RdcPoint;

#ifndef RDC_DATA_DIR
#define RDC_DATA_DIR "."
#endif

namespace {

RawMeasurement measurement(double bpp, double mse, long long bit_depth = 8) {
  RawMeasurement m;
  m.sequence_id = "seq";
  m.width = 1920;
  m.height = 1080;
  m.frame_rate = 30;
  m.bit_depth = bit_depth;
  m.bits_per_pixel = bpp;
  m.mse = mse;
  return m;
}

}  // namespace

TEST_CASE("normalize_rate denormalizes bits/pixel for 1080p30") {
  CHECK(rdc::normalize_rate(measurement(0.0, 1.0)) == 0.0);
  CHECK(rdc::normalize_rate(measurement(1.0, 1.0)) == doctest::Approx(62.208).epsilon(1e-15));
  // near-inverse of a 3 Mb/s reference point
  CHECK(rdc::normalize_rate(measurement(0.04823, 1.0)) ==
        doctest::Approx(0.04823 * 1920 * 1080 * 30 / 1e6).epsilon(1e-15));
}

TEST_CASE("normalize_rate is linear in bits_per_pixel") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dbpp(0.0, 2.0), dk(0.0, 8.0);
  for (int rep = 0; rep < 100; ++rep) {
    const double bpp = dbpp(rng);
    const double k = dk(rng);
    const double lhs = rdc::normalize_rate(measurement(k * bpp, 1.0));
    const double rhs = k * rdc::normalize_rate(measurement(bpp, 1.0));
    CHECK(oracles::close_rel(lhs, rhs, 1e-12, 1e-15));
  }
}

TEST_CASE("normalize_mse scales by bit depth") {
  CHECK(rdc::normalize_mse(measurement(0.1, 256.0, 12)) == 1.0);  // exact
  CHECK(rdc::normalize_mse(measurement(0.1, 42.0, 8)) == 42.0);
  CHECK(rdc::normalize_mse(measurement(0.1, 16.0, 10)) == 1.0);
}

TEST_CASE("unsupported bit depth is rejected with an explicit message") {
  try {
    rdc::normalize_mse(measurement(0.1, 1.0, 9));
    FAIL("expected rejection");
  } catch (const rdc::Error& e) {
    CHECK(e.kind() == rdc::ErrorKind::invariant);
    CHECK(std::string(e.what()).find("bit_depth") != std::string::npos);
  }
}

TEST_CASE("raw measurement invariants") {
  RawMeasurement bad = measurement(0.1, 1.0);
  bad.width = 0;
  CHECK_THROWS_AS(rdc::validate(bad), rdc::Error);
  bad = measurement(-0.1, 1.0);
  CHECK_THROWS_AS(rdc::validate(bad), rdc::Error);
  bad = measurement(0.1, -1.0);
  CHECK_THROWS_AS(rdc::validate(bad), rdc::Error);
  bad = measurement(0.1, 1.0);
  bad.frame_rate = 0.0;
  CHECK_THROWS_AS(rdc::validate(bad), rdc::Error);
}

TEST_CASE("aggregate means normalized values") {
  SUBCASE("single measurement is the identity") {
    const std::vector<RawMeasurement> ms{measurement(0.5, 12.0)};
    const RdcPoint p = rdc::aggregate(ms, 700.0);
    CHECK(p.rate == rdc::normalize_rate(ms[0]));
    CHECK(p.distortion == 12.0);
    CHECK(p.complexity == 700.0);
  }
  SUBCASE("two rates averaging to 3 Mb/s") {
    // bits/pixel chosen so normalized rates are exactly 2 and 4 Mb/s
    const double bpp2 = 2.0 / 62.208;
    const double bpp4 = 4.0 / 62.208;
    const std::vector<RawMeasurement> ms{measurement(bpp2, 1.0), measurement(bpp4, 3.0)};
    const RdcPoint p = rdc::aggregate(ms, 100.0);
    CHECK(p.rate == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(p.distortion == doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("empty list is rejected") {
    CHECK_THROWS_AS(rdc::aggregate(std::vector<RawMeasurement>{}, 1.0), rdc::Error);
  }
}

TEST_CASE("55-sequence aggregate matches a brute-force summation oracle") {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> dbpp(0.001, 0.3), dmse(0.5, 900.0);
  std::vector<RawMeasurement> ms;
  const long long depths[3] = {8, 10, 12};
  for (int i = 0; i < 55; ++i) {
    ms.push_back(measurement(dbpp(rng), dmse(rng), depths[i % 3]));
  }
  const RdcPoint p = rdc::aggregate(ms, 873.0);
  double rate_sum = 0.0, mse_sum = 0.0;
  for (const RawMeasurement& m : ms) {
    rate_sum += m.bits_per_pixel * 1920.0 * 1080.0 * 30.0 / 1e6;
    mse_sum += m.mse / std::exp2(2.0 * static_cast<double>(m.bit_depth - 8));
  }
  CHECK(oracles::close_rel(p.rate, rate_sum / 55.0, 1e-12));
  CHECK(oracles::close_rel(p.distortion, mse_sum / 55.0, 1e-12));
}

TEST_CASE("aggregate is invariant under permutation of the measurement list") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> dbpp(0.001, 0.3), dmse(0.5, 900.0);
  std::vector<RawMeasurement> ms;
  for (int i = 0; i < 23; ++i) ms.push_back(measurement(dbpp(rng), dmse(rng)));
  const RdcPoint base = rdc::aggregate(ms, 1.0);
  for (int rep = 0; rep < 10; ++rep) {
    std::shuffle(ms.begin(), ms.end(), rng);
    const RdcPoint p = rdc::aggregate(ms, 1.0);
    CHECK(p.rate == base.rate);  // bitwise: summation is order independent
    CHECK(p.distortion == base.distortion);
  }
}

TEST_CASE("codec dataset invariants") {
  const std::vector<RdcPoint> pts{{1, 10, 5}, {2, 6, 5}};
  CHECK_NOTHROW(CodecDataset("a", pts, DatasetMode::curve));
  CHECK_THROWS_AS(CodecDataset("a", {{1, 10, 5}}, DatasetMode::curve), rdc::Error);
  CHECK_NOTHROW(CodecDataset("a", {{1, 10, 5}}, DatasetMode::cloud));
  CHECK_THROWS_AS(CodecDataset("a", {}, DatasetMode::cloud), rdc::Error);
  // non-increasing rate in curve mode
  CHECK_THROWS_AS(CodecDataset("a", {{2, 6, 5}, {1, 10, 5}}, DatasetMode::curve), rdc::Error);
  // duplicate points
  CHECK_THROWS_AS(CodecDataset("a", {{1, 10, 5}, {1, 10, 5}}, DatasetMode::cloud), rdc::Error);
  // negative values
  CHECK_THROWS_AS(CodecDataset("a", {{1, -1, 5}, {2, 6, 5}}, DatasetMode::curve), rdc::Error);
}

TEST_CASE("raw CSV parsing") {
  SUBCASE("valid file") {
    std::istringstream in(
        "sequence_id,width,height,frame_rate,bit_depth,bits_per_pixel,mse\n"
        "a,1920,1080,30,8,0.1,12.5\n"
        "b,832,480,50,12,0.2,512\n");
    const auto rows = rdc::parse_raw_csv(in, "test.csv");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].sequence_id == "a");
    CHECK(rows[1].bit_depth == 12);
    CHECK(rows[1].mse == 512.0);
  }
  SUBCASE("bad header") {
    std::istringstream in("foo,bar\n1,2\n");
    CHECK_THROWS_AS(rdc::parse_raw_csv(in, "test.csv"), rdc::Error);
  }
  SUBCASE("wrong field count names the line") {
    std::istringstream in(
        "sequence_id,width,height,frame_rate,bit_depth,bits_per_pixel,mse\n"
        "a,1920,1080,30,8,0.1\n");
    try {
      rdc::parse_raw_csv(in, "test.csv");
      FAIL("expected parse error");
    } catch (const rdc::Error& e) {
      CHECK(std::string(e.what()).find("test.csv:2") != std::string::npos);
    }
  }
  SUBCASE("empty file") {
    std::istringstream in("");
    CHECK_THROWS_AS(rdc::parse_raw_csv(in, "test.csv"), rdc::Error);
  }
}

TEST_CASE("dataset JSON round-trips") {
  const std::string fixture = std::string(RDC_DATA_DIR) + "/table1_codecs_synthetic_rd.json";
  const std::vector<CodecDataset> codecs = rdc::load_dataset(fixture);
  REQUIRE(codecs.size() == 17);
  const std::string json = rdc::dataset_to_json(codecs);
  const std::vector<CodecDataset> reloaded = rdc::parse_dataset(json, "round-trip");
  CHECK(codecs == reloaded);
}

TEST_CASE("bundled fixture carries the published complexities") {
  const std::string fixture = std::string(RDC_DATA_DIR) + "/table1_codecs_synthetic_rd.json";
  const std::vector<CodecDataset> codecs = rdc::load_dataset(fixture);
  auto kmac_of = [&](const std::string& name) {
    for (const CodecDataset& c : codecs) {
      if (c.name() == name) return c.points().front().complexity;
    }
    FAIL(("missing codec " + name));
    return 0.0;
  };
  CHECK(kmac_of("CANF-VC") == 1748.0);
  CHECK(kmac_of("DCVC") == 762.0);
  CHECK(kmac_of("CR16") == 541.0);
  CHECK(kmac_of("HyTIP") == 873.0);
  CHECK(kmac_of("DCVC-FM") == 878.0);
  CHECK(kmac_of("MCR64") == 821.0);
}

TEST_CASE("dataset parse errors name the offending record") {
  SUBCASE("empty file") {
    try {
      rdc::parse_dataset("", "empty.json");
      FAIL("expected parse error");
    } catch (const rdc::Error& e) {
      CHECK(e.kind() == rdc::ErrorKind::parse);
    }
  }
  SUBCASE("curve tie rejection") {
    const std::string doc = R"([{"name":"x","mode":"curve","complexity_kmac_per_pixel":1,
      "points":[{"rate_mbps":1,"mse":5},{"rate_mbps":1,"mse":4}]}])";
    try {
      rdc::parse_dataset(doc, "ties.json");
      FAIL("expected invariant error");
    } catch (const rdc::Error& e) {
      CHECK(e.kind() == rdc::ErrorKind::invariant);
      CHECK(std::string(e.what()).find("\"x\"") != std::string::npos);
    }
  }
  SUBCASE("duplicate codec names") {
    const std::string doc = R"([
      {"name":"x","mode":"cloud","complexity_kmac_per_pixel":1,"points":[{"rate_mbps":1,"mse":5}]},
      {"name":"x","mode":"cloud","complexity_kmac_per_pixel":1,"points":[{"rate_mbps":2,"mse":4}]}])";
    try {
      rdc::parse_dataset(doc, "dup.json");
      FAIL("expected duplicate-name error");
    } catch (const rdc::Error& e) {
      CHECK(e.kind() == rdc::ErrorKind::duplicate_name);
      CHECK(std::string(e.what()).find("\"x\"") != std::string::npos);
    }
  }
  SUBCASE("missing complexity everywhere") {
    const std::string doc = R"([{"name":"x","mode":"cloud","points":[{"rate_mbps":1,"mse":5}]}])";
    CHECK_THROWS_AS(rdc::parse_dataset(doc, "nokmac.json"), rdc::Error);
  }
  SUBCASE("conflicting per-point and codec complexity") {
    const std::string doc = R"([{"name":"x","mode":"cloud","complexity_kmac_per_pixel":2,
      "points":[{"rate_mbps":1,"mse":5,"kmac_per_pixel":3}]}])";
    CHECK_THROWS_AS(rdc::parse_dataset(doc, "conflict.json"), rdc::Error);
  }
}

TEST_CASE("curve points are sorted by rate on load") {
  const std::string doc = R"([{"name":"x","mode":"curve","complexity_kmac_per_pixel":1,
    "points":[{"rate_mbps":3,"mse":2},{"rate_mbps":1,"mse":6},{"rate_mbps":2,"mse":4}]}])";
  const auto codecs = rdc::parse_dataset(doc, "unsorted.json");
  REQUIRE(codecs.size() == 1);
  CHECK(codecs[0].points()[0].rate == 1.0);
  CHECK(codecs[0].points()[1].rate == 2.0);
  CHECK(codecs[0].points()[2].rate == 3.0);
}

TEST_CASE("ingest report for raw CSV records the applied normalizations") {
  std::mt19937_64 rng(3);
  // build two instantiation CSVs on disk
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "rdcbench_ingest_test";
  fs::create_directories(dir);
  auto write_csv = [&](const std::string& name, double bpp_scale) {
    std::ostringstream body;
    body << "sequence_id,width,height,frame_rate,bit_depth,bits_per_pixel,mse\n";
    body << "s1,1920,1080,30,8," << 0.01 * bpp_scale << ",20\n";
    body << "s2,1920,1080,30,12," << 0.02 * bpp_scale << ",5120\n";
    const std::string path = (dir / name).string();
    rdc::write_text_file(path, body.str());
    return path;
  };
  const std::vector<std::string> paths{write_csv("low.csv", 1.0), write_csv("high.csv", 4.0)};
  const rdc::IngestResult result = rdc::ingest_raw_csv(paths, {873.0}, "HyTIP", DatasetMode::curve);
  REQUIRE(result.codecs.size() == 1);
  CHECK(result.codecs[0].points().size() == 2);
  CHECK(result.codecs[0].points()[0].rate < result.codecs[0].points()[1].rate);
  const std::string report = rdc::ingest_report_to_json(result.report);
  CHECK(report.find("\"mse_divisor\": 256.0") != std::string::npos);
  CHECK(report.find("HyTIP") != std::string::npos);
  fs::remove_all(dir);
}
