#pragma once

#include <json.hpp>

#include "jacklaurent/epsalgebra.hpp"
#include "jacklaurent/parse.hpp"

namespace jl {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Json to_json(const Bipartition& a);
Json to_json(Box b);
Json to_json(const BoxSet& s);
Json to_json(const EquivClass& E);
Json to_json(const OrderReport& r);
Json to_json(const TransitionMatrix& A, const MatKP& ainv, const PoleReport& poles);
Json to_json(const MatK& m);
Json to_json(const MatKP& m);

Partition partition_from_json(const Json& j);
Bipartition bipartition_from_json(const Json& j);

/// "2,1;1" -> ((2,1),(1)); empty sides allowed (";").
Bipartition parse_bipartition(const std::string& s);
std::string bipartition_to_cli(const Bipartition& a);

}  // namespace jl
