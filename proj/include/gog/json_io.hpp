#pragma once

#include "gog/bass_serre.hpp"
#include "gog/checks.hpp"
#include "gog/chiswell.hpp"
#include "gog/enumerate.hpp"
#include "gog/finite_group.hpp"
#include "gog/graph_of_groups.hpp"

#include <filesystem>
#include <json.hpp>

namespace gog {

using Json = nlohmann::ordered_json;

/// Reads a file and parses it; throws Error{BadInput} on I/O or syntax errors.
Json read_json_file(const std::filesystem::path& path);

/// Group object {"name", "order", "table", "generators"}. A string is a group
/// reference: a catalog name ("Z/4", "Klein four", "Q8", ...) or a path to a
/// group file relative to `base`.
FiniteGroup group_from_json(const Json& j, const std::filesystem::path& base = {});
Json group_to_json(const FiniteGroup& g);

struct GraphInput {
  GraphOfGroups graph;
  OrientationCharacter omega;
};

/// Graph object {"vertices", "edges", "omega"}; omega is optional and defaults
/// to the trivial character. Vertex characters are a full sign list, or an
/// object of generator signs extended multiplicatively.
GraphInput graph_from_json(const Json& j, const std::filesystem::path& base = {});
Json graph_to_json(const GraphOfGroups& g, const OrientationCharacter& omega);

/// Words in pi_1: space-separated syllables "vertex:element", "t:edge" or
/// "t:edge^-1". Elements are indices or generator names.
NormalForm parse_word(const BassSerre& bs, const std::string& text);

Json to_json(const AbelianGroupInvariants& a);
Json to_json(const CheckReport& r);
Json to_json(const BassSerre& bs, const FixedSubtreeReport& r);
Json to_json(const BassSerre& bs, const ChiswellResult& r);
Json to_json(const TorusVerdict& v);
Json to_json(const EnumeratedGraph& e);

}  // namespace gog
