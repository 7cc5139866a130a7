#pragma once

#include <string>

#include "json.hpp"
#include "sigma/coeffset.hpp"
#include "sigma/decide.hpp"
#include "sigma/geometry.hpp"
#include "sigma/oracle.hpp"
#include "sigma/render.hpp"

namespace sigma {

using json = nlohmann::json;

json to_json(complex z);
json to_json(const CoefficientSet& s);
json to_json(const Witness& w);
json to_json(const Certificate& c);
json to_json(const Decision& d);
json to_json(const ReplayResult& r);
json to_json(const SearchConfig& c);
json to_json(const ConnectednessVerdict& v);
json to_json(const DepthReport& r);
json to_json(const RigidityReport& r);
json to_json(const QuasiRigidityReport& r);
json to_json(const Gap3Report& r);
json to_json(const ProductReport& r);
json to_json(const MinModulusReport& r);
json to_json(const CrossCheckReport& r);
json to_json(const SpikeCountReport& r);
json to_json(const SpikeBand& b);
json to_json(const RasterSpec& s);

/// Raster sidecar: spec, set, digest, code histogram.
json raster_metadata(const Raster& r);

/// Parses {"elements": [...], "exact_integer": bool}.
CoefficientSet set_from_json(const json& j);

/// Two-space indented JSON followed by a newline. Doubles are written in
/// their shortest round-trip form.
std::string dump(const json& j);

}  // namespace sigma
