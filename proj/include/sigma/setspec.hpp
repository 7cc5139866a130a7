#pragma once

#include <string>
#include <string_view>

#include "sigma/coeffset.hpp"
#include "sigma/recursion.hpp"

namespace sigma {

/// "span:M", "list:a,b,c" or "file:path" (JSON {"elements": [...],
/// "exact_integer": bool}). `symmetrize` adds -S; `extra` may be
/// "drop:v1,v2" to remove ±v for each listed value.
CoefficientSet parse_set_spec(std::string_view spec, bool symmetrize = false, std::string_view extra = {});

/// "re,im", "polar:r,theta" or "quad:b,c".
Candidate parse_point(std::string_view spec);

}  // namespace sigma
