#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "vp/io.hpp"

using namespace vp;

TEST_CASE("paths round-trip through JSON") {
  for (const auto& p : enumerate_cpaths(2, 1, 3)) CHECK(cpath_from_json(json::parse(to_json(p).dump())) == p);
  for (const auto& p : enumerate_vpaths(2, 1, 3)) CHECK(vpath_from_json(json::parse(to_json(p).dump())) == p);
}

TEST_CASE("polynomials round-trip, including big coefficients") {
  LaurentPoly3 p = char_full(2, 0, 4);
  mpz_class big("123456789012345678901234567890");
  p.add_term({-2, 1, 0}, big);
  CHECK(poly_from_json(json::parse(to_json(p).dump())) == p);
  CHECK_THROWS(poly_from_json(json::parse(R"([{"q":0,"z1":0,"z2":0,"c":"x"}])")));
}

TEST_CASE("transfer matrices round-trip") {
  for (const auto& m : {r_matrix(2, 3), l_matrix(2)}) {
    const auto back = matrix_from_json(json::parse(to_json(m).dump()));
    CHECK(back.kind == m.kind);
    CHECK(back.labels == m.labels);
    CHECK(back.entries == m.entries);
  }
}

TEST_CASE("coinvariant tables serialize to JSON and CSV") {
  const auto t = coinvariant_dims(CoinvariantSpec{ModuleSpec::W2(1, 1, 1), 1, 1});
  const json j = to_json(t);
  CHECK(j.at("total_dim") == 2);
  CHECK(j.at("stabilized") == true);
  CHECK(poly_from_json(j.at("character")) == t.character());
  const std::string csv = dims_csv_header() + dims_csv_rows(t);
  CHECK(csv.rfind("family,k,l1,l2,l3,M,N,m,n,d,dim,stabilized\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("family names") {
  CHECK(family_from_name(family_name(Family::U)) == Family::U);
  CHECK(family_from_name("Wbar") == Family::W);
  CHECK_THROWS_AS(family_from_name("X"), std::invalid_argument);
}

TEST_CASE("golden files load and a corrupted entry is detected") {
  const std::string dir = std::string(VP_DATA_DIR) + "/golden/";
  const auto g = load_golden_matrix(dir + "L1.json");
  CHECK(golden_matches(g, l_matrix(1), 0));
  GoldenMatrix bad = g;
  bad.rows[0][1] = "q*z1";
  std::string why;
  CHECK_FALSE(golden_matches(bad, l_matrix(1), 0, &why));
  CHECK(why.find("entry (0,1)") != std::string::npos);
  const auto table = load_golden_table(dir + "W1_table.json");
  CHECK(table.columns.size() == 3);
  CHECK(table.rows.size() == 10);
  CHECK_THROWS(read_json_file(dir + "missing.json"));
}
