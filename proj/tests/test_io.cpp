#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>

#include "gonchar/io.hpp"

namespace gonchar {
namespace {

const mp::Real kTol("1e-30", 256);

TEST(ZerosCsv, DegreeTwoRows) {
  const auto rows = io::zero_rows(classify_zeros(2, kTol));
  ASSERT_EQ(rows.size(), 3u);
  // sorted by argument: (3-sqrt5)/2 and (3+sqrt5)/2 at argument 0, then -1 at pi
  EXPECT_EQ(rows[0].region, Region::A2);
  EXPECT_EQ(rows[0].re.substr(0, 12), "0.3819660112");
  EXPECT_EQ(rows[1].region, Region::A3);
  EXPECT_EQ(rows[1].re.substr(0, 12), "2.6180339887");
  EXPECT_EQ(rows[2].region, Region::OnC0);
  EXPECT_TRUE(rows[2].on_c0);
  EXPECT_FALSE(rows[0].on_c0);
}

TEST(ZerosCsv, RoundTripIsByteIdentical) {
  for (int d : {1, 2, 7, 12}) {
    const std::string csv = io::emit_zeros_csv(io::zero_rows(classify_zeros(d, kTol)));
    EXPECT_EQ(csv.rfind(io::kZerosHeader, 0), 0u);
    EXPECT_EQ(io::emit_zeros_csv(io::parse_zeros_csv(csv)), csv) << d;
    for (const auto& r : io::parse_zeros_csv(csv))
      for (const auto* f : {&r.re, &r.im, &r.radius}) EXPECT_EQ(f->find('e'), std::string::npos) << *f;
  }
}

TEST(ZerosCsv, IntersectionPointsForTwelve) {
  const auto rows = io::zero_rows(classify_zeros(12, kTol));
  EXPECT_EQ(rows.size(), 23u);
  int inter = 0;
  for (const auto& r : rows) inter += r.region == Region::IntersectionPoint ? 1 : 0;
  EXPECT_EQ(inter, 2);
}

TEST(ZerosCsv, RejectsMalformedInput) {
  EXPECT_THROW(io::parse_zeros_csv("bad header\n"), io::ParseError);
  const std::string h = std::string(io::kZerosHeader) + "\n";
  EXPECT_THROW(io::parse_zeros_csv(h + "1,0,3,0,1e-30,A3\n"), io::ParseError);
  EXPECT_THROW(io::parse_zeros_csv(h + "1,0,3,0,0.1,A4,false\n"), io::ParseError);
  EXPECT_THROW(io::parse_zeros_csv(h + "1,0,x,0,0.1,A3,false\n"), io::ParseError);
  EXPECT_THROW(io::parse_zeros_csv(h + "1,0,3,0,0.1,A3,yes\n"), io::ParseError);
}

TEST(CensusCsv, RoundTripAndRowRule) {
  std::vector<Census> rows;
  for (int d = 1; d <= 12; ++d) {
    const auto cz = classify_zeros(d, kTol);
    const Census c = census_of(cz);
    const Census r = io::census_from_rows(d, io::zero_rows(cz));
    EXPECT_EQ(c.N1, r.N1);
    EXPECT_EQ(c.N2, r.N2);
    EXPECT_EQ(c.N3, r.N3);
    EXPECT_EQ(c.on_circle, r.on_circle);
    EXPECT_EQ(c.has_intersection_pair, r.has_intersection_pair);
    rows.push_back(c);
  }
  const std::string csv = io::emit_census_csv(rows);
  EXPECT_EQ(io::emit_census_csv(io::parse_census_csv(csv)), csv);
  EXPECT_NE(csv.find("\n6,11,3,3,3,5,true\n"), std::string::npos);
  EXPECT_THROW(io::parse_census_csv(std::string(io::kCensusHeader) + "\n3,6,1,1,1,0,false\n"), io::ParseError);
}

TEST(Json, EnvelopeRoundTrip) {
  ::setenv("SOURCE_DATE_EPOCH", "1700000000", 1);
  const auto rows = io::zero_rows(classify_zeros(3, kTol));
  io::Json payload{{"zeros", io::zero_rows_json(rows)}, {"q", rat_to_string(RatQ(3, 7))}};
  const std::string s = io::dump(io::envelope(io::Json{{"subcommand", "zeros"}, {"d", 3}}, "ok", payload));
  EXPECT_EQ(io::dump(io::Json::parse(s)), s);
  const auto j = io::Json::parse(s);
  EXPECT_EQ(j["schema_version"], "1");
  EXPECT_EQ(j["timestamp"], "2023-11-14T22:13:20Z");
  EXPECT_EQ(j["payload"]["q"], "3/7");
  EXPECT_EQ(io::zero_rows_from_json(j["payload"]["zeros"]), rows);
  ::unsetenv("SOURCE_DATE_EPOCH");
}

TEST(Svg, DeterministicWithOneMarkerPerZero) {
  const auto rows = io::zero_rows(classify_zeros(2, kTol));
  const std::string a = io::emit_svg_zeroplot(rows);
  EXPECT_EQ(a, io::emit_svg_zeroplot(io::parse_zeros_csv(io::emit_zeros_csv(rows))));
  EXPECT_NE(a.find("viewBox=\"0 0 800 800\""), std::string::npos);
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto p = a.find(needle); p != std::string::npos; p = a.find(needle, p + 1)) ++n;
    return n;
  };
  EXPECT_EQ(count("class=\"A2\""), 1u);
  EXPECT_EQ(count("class=\"A3\""), 1u);
  EXPECT_EQ(count("class=\"OnC0\""), 1u);
  EXPECT_THROW(io::emit_svg_zeroplot({}), std::invalid_argument);
}

TEST(Files, EmptyPathIsAnIoError) { EXPECT_THROW(io::write_file("", "x"), io::IoError); }

TEST(Cache, StoreAndLoad) {
  const auto dir = std::filesystem::temp_directory_path() / "gonchar-cache-test";
  std::filesystem::remove_all(dir);
  ::setenv("GONCHAR_CACHE", dir.c_str(), 1);
  const auto rows = io::zero_rows(classify_zeros(4, kTol));
  EXPECT_FALSE(io::cache_load(4, RatQ(1), 100).has_value());
  io::cache_store(4, RatQ(1), 100, rows);
  const auto back = io::cache_load(4, RatQ(1), 100);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, rows);
  EXPECT_FALSE(io::cache_load(4, RatQ(1), 128).has_value());
  io::write_file(io::cache_path(4, RatQ(1), 100), "{ not json");
  EXPECT_FALSE(io::cache_load(4, RatQ(1), 100).has_value());
  std::size_t leftovers = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    leftovers += e.path().string().find(".tmp.") != std::string::npos ? 1 : 0;
  EXPECT_EQ(leftovers, 0u);
  std::filesystem::remove_all(dir);
  ::unsetenv("GONCHAR_CACHE");
}

}  // namespace
}  // namespace gonchar
