#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vp/characters.hpp"
#include "vp/oracle.hpp"
#include "vp/paths.hpp"

namespace vp {

using json = nlohmann::json;

json to_json(const CPath& p);
json to_json(const VPath& p);
CPath cpath_from_json(const json& j);
VPath vpath_from_json(const json& j);

// List of {"q","z1","z2","c"} with the coefficient as a decimal string.
json to_json(const LaurentPoly3& p);
LaurentPoly3 poly_from_json(const json& j);

// {"kind","k","N","labels":[[a,b],...],"rows":[[poly,...],...]}.
json to_json(const TransferMatrix& m);
TransferMatrix matrix_from_json(const json& j);

json to_json(const CoinvariantTable& t);

// CSV with columns family,k,l1,l2,l3,M,N,m,n,d,dim,stabilized.
std::string dims_csv_header();
std::string dims_csv_rows(const CoinvariantTable& t);

std::string family_name(Family f);
Family family_from_name(const std::string& s);  // throws std::invalid_argument

// Golden matrix: labels plus symbolic entries such as "q^N*z1*z2".
struct GoldenMatrix {
  std::vector<std::pair<int, int>> labels;
  std::vector<std::vector<std::string>> rows;
};
GoldenMatrix load_golden_matrix(const std::string& path);
// Entry-wise canonical comparison (each symbol parsed with N = n_value).
bool golden_matches(const GoldenMatrix& g, const TransferMatrix& m, int n_value, std::string* why = nullptr);

// Golden monomial table: one column per module, one row per (M,N).
struct GoldenTable {
  std::vector<ModuleSpec> columns;
  struct Row {
    int M, N;
    std::vector<std::vector<std::string>> cells;  // compact monomials, e.g. "f2h1"
  };
  std::vector<Row> rows;
};
GoldenTable load_golden_table(const std::string& path);

json read_json_file(const std::string& path);

}  // namespace vp
