#pragma once

#include <json.hpp>

#include "fia/decompose.hpp"

namespace fia {

// All records serialize into one structured-text family: JSON objects with
// a format_version and type tag, scalars as strings, keys in canonical
// segment order. ordered_json keeps insertion order so output is
// byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

int parse_segment_key(const Poset& poset, const std::string& key);

Json poset_to_json(const Poset& poset);
PosetPtr poset_from_json(const Json& j);

Json coeffs_to_json(const AlgElement& e);
AlgElement coeffs_from_json(const Json& j, const PosetPtr& poset, const RingSpec& spec);

Json element_to_json(const AlgElement& e);
AlgElement element_from_json(const Json& j, const PosetPtr& poset, const RingSpec& spec);

Json linmap_to_json(const LinMap& f);
LinMap linmap_from_json(const Json& j, const PosetPtr& poset, const RingSpec& spec);

Json hd_to_json(const HigherDerivation& d);
HigherDerivation hd_from_json(const Json& j, const PosetPtr& poset, const RingSpec& spec);

Json tm_to_json(const TransitiveMap& sigma);
TransitiveMap tm_from_json(const Json& j, const PosetPtr& poset, const RingSpec& spec);

Json decomposition_to_json(const Decomposition& dec, bool verified);
Decomposition decomposition_from_json(const Json& j, const PosetPtr& poset, const RingSpec& spec);

/// Canonical text form: two-space indent, trailing newline.
std::string dump(const Json& j);

Json load_file(const std::string& path);
void save_file(const std::string& path, const Json& j);

}  // namespace fia
