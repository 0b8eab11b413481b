#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paxis/pipeline.hpp"

namespace paxis {

/// Colour class of a vertex: axis, thin spine off the axis, C^(1) off the spine, everything else.
enum class VertexClass { axis, spine_off_axis, central_off_spine, outer };

std::string_view vertex_class_name(VertexClass c);

/// Axisless n classify every vertex as outer.
std::vector<VertexClass> classify_vertices(const AxialGeometry& geom);

enum class GraphFormat { dot, graphml };

/// "dot" or "graphml"; anything else is std::nullopt.
std::optional<GraphFormat> parse_graph_format(std::string_view text);

std::string_view file_extension(GraphFormat format);

std::string to_dot(const PipelineResult& result);
std::string to_graphml(const PipelineResult& result);

/// Writes the graph in the requested format; throws IoError on failure.
void export_graph(const PipelineResult& result, GraphFormat format, const std::filesystem::path& path);

}  // namespace paxis
