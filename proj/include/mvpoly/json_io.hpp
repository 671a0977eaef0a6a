#pragma once

#include <json.hpp>

#include "mvpoly/polytope.hpp"

namespace mvpoly {

using json = nlohmann::json;

json cartan_to_json(const CartanData& c);
CartanData cartan_from_json(const json& j);

json element_to_json(const WeylElement& w); // {"word": [...]}

// {"cartan": {...}, "bz": [{"weight": [...], "value": v}, ...]},
// weights in lexicographic order so files diff cleanly.
json polytope_to_json(const MVContext& ctx, const BZData& bz);
BZData polytope_from_json(const MVContext& ctx, const json& j);

// {"word": [...], "n": [...]}
json lusztig_to_json(const Word& word, const IntVec& n);
std::pair<Word, IntVec> lusztig_from_json(const json& j);

// {"vertices": [{"w": [...], "mu": [...]}, ...]} in element order
json vertices_to_json(const MVContext& ctx, const MVPolytope& P);

} // namespace mvpoly
