#pragma once

#include <json.hpp>
#include <string>

#include "sr/adversarial.hpp"
#include "sr/fourier.hpp"
#include "sr/recon.hpp"
#include "sr/torus.hpp"

namespace sr {

using json = nlohmann::ordered_json;

// {"dim": d, "points": [[...]], "weights": [...]}
json comb_to_json(const DiracComb& c);
DiracComb comb_from_json(const json& j);

// {"dim", "index_set": {"type": "linf"|"l1", "T"}, "entries": [{"l", "re", "im"}]}
json table_to_json(const FourierTable& t);
FourierTable table_from_json(const json& j);

json params_to_json(const ReconParams& p);

json cube_pair_to_json(const CubePair& p);
CubePair cube_pair_from_json(const json& j);

json separated_pair_to_json(const SeparatedPair& p);
SeparatedPair separated_pair_from_json(const json& j);

json load_json(const std::string& path);
void save_json(const json& j, const std::string& path);

}  // namespace sr
