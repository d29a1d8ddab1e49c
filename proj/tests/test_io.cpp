#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "foldline/io.hpp"

using namespace foldline;

TEST(Io, DatumJsonRoundTrip) {
  auto b = builtin("A4+flip");
  auto j = datum_to_json(b.datum, &*b.sigma);
  auto back = parse_datum_json(j.dump());
  EXPECT_EQ(back.datum, b.datum);
  ASSERT_TRUE(back.sigma.has_value());
  EXPECT_EQ(back.sigma->images(), b.sigma->images());
}

TEST(Io, DatumJsonErrors) {
  auto kind_of = [](const std::string& text) {
    try {
      parse_datum_json(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::internal;
  };
  EXPECT_EQ(kind_of("{"), ErrorKind::parse);
  EXPECT_EQ(kind_of(R"({"labels": ["1","2"], "pairing": [[2,-1],[-2,2]]})"), ErrorKind::asymmetric);
  EXPECT_EQ(kind_of(R"({"labels": ["1","2"], "pairing": [[2,-1],[-1,2]], "sigma": {"1": "3"}})"),
            ErrorKind::unknown_label);
  EXPECT_EQ(kind_of(R"({"labels": ["1","2"], "pairing": [[2,-1.5],[-1.5,2]]})"), ErrorKind::parse);
}

TEST(Io, LoadDatumFromFile) {
  const std::string path = ::testing::TempDir() + "foldline_b2.json";
  {
    std::ofstream out(path);
    out << R"({"labels": ["1","2"], "pairing": [[2,-2],[-2,4]]})";
  }
  auto d = load_datum(path);
  EXPECT_FALSE(d.datum.simply_laced());
  EXPECT_FALSE(d.sigma.has_value());
  std::remove(path.c_str());
  EXPECT_EQ(load_datum("A2").datum.rank(), 2u);
  EXPECT_THROW(load_datum("/nonexistent/x.json"), Error);
}

TEST(Io, CoordinateParsing) {
  auto r = parse_rat_coords("1/2, 3 ,4/6");
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[2], PosRational(2, 3));
  EXPECT_THROW(parse_rat_coords("0"), Error);
  EXPECT_EQ(parse_tropz_coords("-3,4")[0], TropInt{-3});
  EXPECT_THROW(parse_tropn_coords("-1"), Error);
  auto s = parse_sym_coords("a,b+c,a/b");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].variables()->names, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(parse_int_list("1,2,3"), (std::vector<std::int64_t>{1, 2, 3}));
  EXPECT_THROW(parse_int_list("1,x"), Error);
}

TEST(Io, StableJson) {
  Monoid m(builtin("A2").datum);
  auto j = monoid_element_to_json(m, m.element({0, 1, 2}));
  EXPECT_EQ(j.dump(), R"({"coords":[0,1,2],"word":["1","2","1"]})");
  CheckReport r{"x", 3, 0, "", 1.5};
  EXPECT_EQ(check_report_to_json(r).count("seconds"), 0u);
}
