#pragma once

#include <string>
#include <string_view>

#include "sds/sds.hpp"

namespace sds {

/// Parses {n, edges:[[i,j]], order:[...], functions:[{vertex, table}]}.
/// Labels are 1-based; `table` is a bitstring of length 2^(degree+1).
SdsDefinition parse_sds_json(std::string_view text);
SdsDefinition load_sds_file(const std::string& path);

std::string to_json(const SdsDefinition& sds);

/// The four-vertex system with edges {1,2},{1,3},{1,4},{3,4}, order 2413 and
///   f1 = x1 x3 + x2 + x4,  f2 = x1 x2 + 1,  f3 = x1 + x2 + x3,  f4 = x1 x2 + x3.
SdsDefinition example1();

}  // namespace sds
