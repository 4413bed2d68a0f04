#include <catch2/catch_amalgamated.hpp>

#include "fockdigits/serialize.hpp"
#include "fockdigits/translation.hpp"

#include "matchers.hpp"

using namespace fockdigits;

TEST_CASE("digit vector JSON round trip") {
  const DigitVector d(2, {1, 0, 1});
  const Json j = to_json(d);
  CHECK(j.dump() == R"({"base":2,"digits":[1,0,1]})");
  CHECK(digit_vector_from_json(j) == d);
}

TEST_CASE("matrix sparse triplet export") {
  const RegisterSpec spec = RegisterSpec::finite(2, 2);
  const Json j = to_json(materialized(t_operator(0, spec)));
  CHECK(j["dim"] == 4);
  REQUIRE(j["entries"].size() == 2);
  CHECK(j["entries"][0] == Json::array({0, 1, 1.0, 0.0}));
  CHECK(j["entries"][1] == Json::array({2, 3, 1.0, 0.0}));
}

TEST_CASE("matrix export drops sub-threshold entries") {
  DenseMatrix m(2);
  m.at(0, 0) = Complex(1.0, 0.0);
  m.at(1, 0) = Complex(1e-15, 0.0);
  const Json j = to_json(m);
  REQUIRE(j["entries"].size() == 1);
  CHECK(j["entries"][0][0] == 0);
}

TEST_CASE("matrix CSV export carries the header and full precision") {
  DenseMatrix m(2);
  m.at(0, 1) = Complex(1.0 / 3.0, -0.25);
  const std::string csv = to_csv(m);
  CHECK(csv.rfind("row,col,re,im\n", 0) == 0);
  CHECK(csv.find("0,1,0.33333333333333331,-0.25") != std::string::npos);
}

TEST_CASE("residue coefficient dump") {
  const Json j = to_json(ResidueCoefficients::lookup(2));
  CHECK(j["k"] == 2);
  REQUIRE(j["coefficients"].size() == 1);
  CHECK(j["coefficients"][0]["j"] == 1);
  CHECK(j["coefficients"][0]["C"][0].get<double>() == Catch::Approx(0.25));
  CHECK(j["coefficients"][0]["C"][1].get<double>() == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("region report with and without the unitary range") {
  const RegisterSpec b2q3 = RegisterSpec::finite(2, 3);
  const Json mid = region_report_json(unitarity_region(0, b2q3), b2q3, true);
  CHECK(mid["LV"] == Json::array({0, 0}));
  CHECK(mid["unitary"] == Json::array({1, 6}));
  CHECK(mid["RV"] == Json::array({7, 7}));
  CHECK(mid["commutator_ok"] == true);

  const Json top = region_report_json(unitarity_region(2, b2q3), b2q3, true);
  CHECK(top["unitary"].is_null());

  const RegisterSpec truncated = RegisterSpec::truncated_infinite(2, 5, 2);
  const Json inf = region_report_json(unitarity_region(0, truncated), truncated, true);
  CHECK(inf["RV"].is_null());
}

TEST_CASE("serialization is byte-stable for fixed inputs") {
  const RegisterSpec spec = RegisterSpec::finite(3, 2);
  const Json a = to_json(materialized(T_operator(0, spec)));
  const Json b = to_json(materialized(T_operator(0, spec)));
  CHECK(a.dump() == b.dump());
  const std::string c1 = to_json(ResidueCoefficients::lookup(5)).dump();
  const std::string c2 = to_json(ResidueCoefficients::lookup(5)).dump();
  CHECK(c1 == c2);
}
