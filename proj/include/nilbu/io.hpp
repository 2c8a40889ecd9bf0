#pragma once

#include "nilbu/coverings.hpp"
#include "nilbu/epimorphisms.hpp"
#include "nilbu/homology.hpp"

#include <json.hpp>

#include <string_view>

namespace nilbu {

using Json = nlohmann::ordered_json;

/// {"free_rank": r, "torsion": [...], "gen_images": {"s1": [...], ...}}
Json to_json(const AbelianGroup& g);

/// {"s": [...], "v": [...], "h": 0|1}
Json to_json(const Z2Char& phi);
Z2Char z2char_from_json(const Json& j);

/// {"base": "...", "phi": {...}, "cover": "...", "index": k}
Json to_json(const CoveringDescriptor& d);

/// Character argument: either a JSON object or a 0-based position in
/// enumerate_epis(n). The result is checked to be an epimorphism of n.
Z2Char parse_character(std::string_view text, const NilManifold& n);

} // namespace nilbu
