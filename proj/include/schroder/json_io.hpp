#ifndef SCHRODER_JSON_IO_HPP
#define SCHRODER_JSON_IO_HPP

#include <json.hpp>

#include "schroder/coeff_poly.hpp"
#include "schroder/parking.hpp"
#include "schroder/partition.hpp"
#include "schroder/paths.hpp"
#include "schroder/symfunc.hpp"

namespace schroder {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& mu);
Partition partition_from_json(const Json& j);

/// [{"q":..,"t":..,"y":..,"num":"..","den":".."}], highest monomial first.
Json to_json(const CoeffPoly& c);
CoeffPoly coeff_poly_from_json(const Json& j);

/// {"basis":"e","terms":[{"index":[2,1],"coeff":[...]}]}
Json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const Json& j);

/// [{"value":0,"barred":false},...]
Json to_json(const SchroderWord& w);
SchroderWord word_from_json(int m, int n, const Json& j);

/// {"m":..,"n":..,"basis":"e","series":[{"y":k,"q":j,"terms":[{"index":..,"coeff":..}]}]}
/// with one entry per (y,q) exponent pair; t must be absent.
Json enumerator_json(int m, int n, const SymFunc& f);

/// {"shape":"0.0~","count":N}
Json parking_row_json(const SchroderWord& shape, const Integer& count);

}  // namespace schroder

#endif  // SCHRODER_JSON_IO_HPP
