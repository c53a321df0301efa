#pragma once

#include <optional>
#include <string>

#include "rowlab/shape.hpp"
#include "rowlab/tableau.hpp"

// vendored single-header nlohmann/json
#include <json.hpp>

namespace rowlab {

using Json = nlohmann::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json poset_to_json(const Poset& p);
Poset poset_from_json(const Json& j);

Json ideal_to_json(const Poset& p, const Bitset& ideal);
Bitset ideal_from_json(const Poset& p, const Json& j);

Json shape_to_json(const Shape& s);
Shape shape_from_json(const Json& j);

// {"shape": ..., "entries": bottom-up row-major arrays, null outside boxes}
Json tableau_to_json(const IncreasingTableau& t);
IncreasingTableau tableau_from_json(const Json& j);

Json word_to_json(const std::vector<int>& w);

// Paper-style layout: top row printed first, rows indented to their start
// column, one cell per entry.
std::string tableau_to_ascii(const IncreasingTableau& t);

// Named poset specs: rect:a,b  trap:a,b  og612  h3  q:n  i2:m
struct PosetHandle {
  std::string spec;
  Poset poset;
  std::optional<ShapePoset> shape;  // present for rect/trap
  // Upper bound on #ideals when cheaply computable (rect/trap/q/i2).
  std::optional<std::size_t> ideal_count_hint;
};

PosetHandle parse_poset_spec(const std::string& spec);

// FNV-1a of a canonical serialization; used as cache key material.
std::uint64_t fnv1a(const std::string& data);
std::string poset_signature(const Poset& p);

}  // namespace rowlab
