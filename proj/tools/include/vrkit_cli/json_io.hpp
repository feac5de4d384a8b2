#pragma once

#include <json.hpp>
#include <string>

#include "vrkit/loewner.hpp"
#include "vrkit/region.hpp"

namespace vrkit::cli {

using json = nlohmann::json;

json complex_to_json(cx z);
cx complex_from_json(const json& j);

// {"schema":"vrkit/1","type":"region","kind":...,"z0":[re,im],"edges":[...],...}
json region_to_json(const region_spec& spec);
region_spec region_from_json(const json& j);

// {"kind":"slit|measure_path|exponent","pieces":[...] / "x","anchor"}
json driving_to_json(const driving_spec& driving);
driving_spec driving_from_json(const json& j);

// {"schema":"vrkit/1","type":"trajectory","z0":[re,im],"samples":[[t,re,im],...],"driving":{...}}
json trajectory_to_json(const trajectory& traj);
trajectory trajectory_from_json(const json& j);

// canonical serialization: sorted keys, two-space indent, trailing newline;
// re-emitting a parsed document reproduces it byte for byte
std::string dump_json(const json& j);

// writes to the path, or to stdout when the path is empty or "-"
void write_text(const std::string& path, const std::string& content);

json read_json_file(const std::string& path);

}  // namespace vrkit::cli
