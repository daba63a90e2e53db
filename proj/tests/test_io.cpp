#include <doctest.h>

#include "chowbound/io.hpp"
#include "test_util.hpp"

using namespace chowbound;

TEST_CASE("polynomial JSON round trip") {
  const ZPoly f = parse_plane_form("X0^2 + X1^2 - 6*X2^2");
  const Json j = to_json(f);
  CHECK(j["r"] == 0);
  CHECK(j["s"] == 2);
  CHECK(j["multidegree"] == Json::array({2}));
  CHECK(j["terms"][0]["coeff"] == "1");
  CHECK(j["terms"][0]["exps"] == Json::parse("[[2,0,0]]"));
  CHECK(zpoly_from_json(j) == f);
  const ZPoly big = parse_plane_form("123456789012345678901234567890*X0 - X1");
  CHECK(zpoly_from_json(Json::parse(to_json(big).dump())) == big);
}

TEST_CASE("term order in input files is irrelevant") {
  const Json a = Json::parse(R"({"r":0,"s":2,"multidegree":[2],"terms":[
    {"coeff":"-6","exps":[[0,0,2]]},{"coeff":"1","exps":[[2,0,0]]},{"coeff":1,"exps":[[0,2,0]]}]})");
  CHECK(zpoly_from_json(a) == parse_plane_form("X0^2 + X1^2 - 6*X2^2"));
}

TEST_CASE("malformed polynomial files") {
  CHECK_THROWS_AS(zpoly_from_json(Json::parse(R"({"s":2,"multidegree":[1],"terms":[]})")), InputError);
  CHECK_THROWS_AS(zpoly_from_json(Json::parse(R"({"r":0,"s":2,"multidegree":[1]})")), InputError);
  CHECK_THROWS_AS(
      zpoly_from_json(Json::parse(R"({"r":0,"s":2,"multidegree":[1],"terms":[{"coeff":"1","exps":[[1,0]]}]})")),
      InputError);
  CHECK_THROWS_AS(
      zpoly_from_json(Json::parse(R"({"r":0,"s":2,"multidegree":[2],"terms":[{"coeff":"1","exps":[[1,0,0]]}]})")),
      InputError);
  CHECK_THROWS_AS(
      zpoly_from_json(Json::parse(R"({"r":0,"s":2,"multidegree":[1],"terms":[{"coeff":"x","exps":[[1,0,0]]}]})")),
      InputError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("ChowPoint JSON") {
  const ChowPoint c = chow_plane_curve(parse_plane_form("X0^2 + X1^2 - 6*X2^2"));
  const Json j = to_json(c);
  CHECK(j["kind"] == "chow_point");
  CHECK(j["provenance"] == "plane-curve");
  CHECK(j["degree"] == 2);
  CHECK(j["r"] == 1);
  CHECK(j["coeff_vector"].size() == 36);
  const ChowPoint back = chow_point_from_json(j);
  CHECK(back.coeffs == c.coeffs);
  CHECK(back.provenance == ChowProvenance::plane_curve);
  Json bad = j;
  bad["terms"][0]["coeff"] = "-1";
  CHECK_THROWS_AS(chow_point_from_json(bad), InputError);
  CHECK(provenance_from_string("zero-cycle") == ChowProvenance::zero_cycle);
  CHECK_THROWS_AS(provenance_from_string("other"), InputError);
}

TEST_CASE("zero-cycle input") {
  const ZeroCycleInput z = zero_cycle_from_json(Json::parse(R"({"f":["-2","0","1"],"h":["0","0","1"]})"));
  CHECK(z.f == std::vector<BigInt>{-2, 0, 1});
  CHECK(z.h == std::vector<BigInt>{0, 0, 1});
  CHECK(zero_cycle_from_json(Json::parse(R"({"f":["-5","1"]})")).h.empty());
  CHECK_THROWS_AS(zero_cycle_from_json(Json::parse(R"({"h":["1"]})")), InputError);
}

TEST_CASE("BoundReport JSON itemizes every term") {
  const Json j = to_json(bezout_bound(0, BoundParams{2, 2, 1, 1}, false));
  for (const char* key : {"N_n", "N_d_minus_n", "N_d", "deg_W", "input_height", "input_kind", "height_offset",
                          "point_height", "height_term", "hW_bound", "log2_term", "log2_term_dimension", "total"})
    CHECK(j.contains(key));
  CHECK(j["deg_W"] == "6435");
  CHECK(j["N_d"] == "35");
  CHECK(j["hW_bound"] == "1.16703991762081e+06");
  CHECK(j["total"].get<std::string>().substr(0, 7) == "1.24732");
}

TEST_CASE("witness JSON and CSV") {
  Instance inst = conic_family(6);
  inst.p_max = 5;
  const ScanReport r = scan_primes(inst);
  const Json j = to_json(r);
  CHECK(j["rows"].size() == 3);
  const Json& w3 = j["rows"][1]["witness"];
  CHECK(w3["p"] == 3);
  CHECK(w3["k"] == 2);
  CHECK(w3["modulus"] == Json::array({1, 0, 1}));
  for (const char* key : {"G", "H", "scalar"}) CHECK(w3.contains(key));
  CHECK(j["rows"][2]["decomposes"] == "no");
  CHECK(j["verdict"] == "holds");
  const std::string csv = scan_csv(r, {"w2.json", "w3.json", ""});
  CHECK(csv == "prime,decomposes,k,witness_file\n2,yes,1,w2.json\n3,yes,2,w3.json\n5,no,2,\n");
}
