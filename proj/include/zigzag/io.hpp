#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zigzag/qsym.hpp"
#include "zigzag/templates.hpp"
#include "zigzag/verify.hpp"

namespace zigzag {

inline constexpr const char* kJsonSchema = "zigzag-harmonic/1";

// Rows of '#', each row starting under the last box of the previous one.
std::string render_word(const BinaryWord& w);
// Infinite clusters drawn with three boxes each, marked with the infinity sign.
std::string render_template(const Template& t);

enum class GraphRegion { All, Zeta, Finite, Ideal };  // whole graph, zeta(t), zeta(t) \ J(t), J(t)

struct GraphDump {
    std::vector<Vertex> vertices;                            // by level, then lexicographic
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // lower -> upper, indices into vertices
};

// Vertices of the region with level <= max_level and the covering edges between them.
GraphDump build_graph(const std::optional<Template>& t, GraphRegion region, std::size_t max_level);

std::string graph_dot(const GraphDump& g);
nlohmann::json graph_json(const GraphDump& g);

nlohmann::json fexpansion_json(const FExpansion& f);
FExpansion fexpansion_from_json(const nlohmann::json& j);

nlohmann::json suite_json(const SuiteResult& r);
nlohmann::json report_json(const std::vector<SuiteResult>& results);
std::string report_text(const std::vector<SuiteResult>& results);

}  // namespace zigzag
