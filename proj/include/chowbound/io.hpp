#ifndef CHOWBOUND_IO_HPP
#define CHOWBOUND_IO_HPP

// JSON forms of polynomials, Chow points, witnesses and reports.
//
// Polynomial file:
//   {"r": 0, "s": 2, "multidegree": [2],
//    "terms": [{"coeff": "-6", "exps": [[0, 0, 2]]}, ...]}
// Integer coefficients are decimal strings; over F_{p^k} a coefficient is
// the list of its F_p digits (c_0 .. c_{k-1} in the basis 1, a, a^2, ...).
// Term order in input files is irrelevant.

#include <string>
#include <vector>

#include <json.hpp>

#include "chowbound/chowforms.hpp"
#include "chowbound/combinat.hpp"
#include "chowbound/modfactor.hpp"
#include "chowbound/verify.hpp"

namespace chowbound {

using Json = nlohmann::ordered_json;

Json to_json(const ZPoly& f);
Json to_json(const FPoly& f);
ZPoly zpoly_from_json(const Json& j);

Json to_json(const ChowPoint& c);
ChowPoint chow_point_from_json(const Json& j);

struct ZeroCycleInput {
  std::vector<BigInt> f;  // low to high
  std::vector<BigInt> h;
};
/// {"f": ["-2", "0", "1"], "h": ["0", "0", "1"]}
ZeroCycleInput zero_cycle_from_json(const Json& j);

Json to_json(const BoundReport& b);
Json to_json(const DecompositionWitness& w);
Json to_json(const ScanReport& r);

/// prime,decomposes,k,witness_file
std::string scan_csv(const ScanReport& r, const std::vector<std::string>& witness_files);

Json read_json_file(const std::string& path);

}  // namespace chowbound

#endif  // CHOWBOUND_IO_HPP
