#include "paxis/export.hpp"

#include <sstream>

#include "paxis/report.hpp"

namespace paxis {

std::string_view vertex_class_name(VertexClass c) {
    switch (c) {
        case VertexClass::axis: return "axis";
        case VertexClass::spine_off_axis: return "spine_off_axis";
        case VertexClass::central_off_spine: return "central_off_spine";
        case VertexClass::outer: return "outer";
    }
    return "?";
}

std::vector<VertexClass> classify_vertices(const AxialGeometry& geom) {
    std::vector<VertexClass> classes(geom.ax_dist.size(), VertexClass::outer);
    if (!geom.axial()) return classes;
    for (VertexId v = 0; v < classes.size(); ++v) {
        if (geom.on_axis(v)) {
            classes[v] = VertexClass::axis;
        } else if (geom.on_spine(v)) {
            classes[v] = VertexClass::spine_off_axis;
        } else if (geom.ax_dist[v] <= 1) {
            classes[v] = VertexClass::central_off_spine;
        }
    }
    return classes;
}

std::optional<GraphFormat> parse_graph_format(std::string_view text) {
    if (text == "dot") return GraphFormat::dot;
    if (text == "graphml") return GraphFormat::graphml;
    return std::nullopt;
}

std::string_view file_extension(GraphFormat format) {
    return format == GraphFormat::dot ? ".dot" : ".graphml";
}

std::string to_dot(const PipelineResult& result) {
    const auto& g = result.graph;
    const auto& geom = result.geometry;
    const auto& omega = result.profile(Invariant::omega_loc).values;
    const auto classes = classify_vertices(geom);

    std::ostringstream out;
    out << "graph G_" << g.n() << " {\n";
    out << "  graph [n=" << g.n() << ", axisless=" << (geom.axial() ? "false" : "true") << "];\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [label=\"" << g.vertex(v).to_string() << "\", class=\""
            << vertex_class_name(classes[v]) << "\", deg=" << g.degree(v) << ", omega_loc=" << omega[v];
        // Distances are undefined without an axis, so they are omitted.
        if (geom.ax_dist[v] != kUnreachable) out << ", ax_dist=" << geom.ax_dist[v];
        if (geom.sp_dist[v] != kUnreachable) out << ", sp_dist=" << geom.sp_dist[v];
        out << "];\n";
    }
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId w : g.neighbors(u)) {
            if (u < w) out << "  " << u << " -- " << w << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string to_graphml(const PipelineResult& result) {
    const auto& g = result.graph;
    const auto& geom = result.geometry;
    const auto& omega = result.profile(Invariant::omega_loc).values;
    const auto classes = classify_vertices(geom);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"n\" for=\"graph\" attr.name=\"n\" attr.type=\"int\"/>\n"
        << "  <key id=\"axisless\" for=\"graph\" attr.name=\"axisless\" attr.type=\"boolean\"/>\n"
        << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
        << "  <key id=\"class\" for=\"node\" attr.name=\"class\" attr.type=\"string\"/>\n"
        << "  <key id=\"deg\" for=\"node\" attr.name=\"deg\" attr.type=\"int\"/>\n"
        << "  <key id=\"omega_loc\" for=\"node\" attr.name=\"omega_loc\" attr.type=\"int\"/>\n"
        << "  <key id=\"ax_dist\" for=\"node\" attr.name=\"ax_dist\" attr.type=\"int\"/>\n"
        << "  <key id=\"sp_dist\" for=\"node\" attr.name=\"sp_dist\" attr.type=\"int\"/>\n"
        << "  <graph id=\"G_" << g.n() << "\" edgedefault=\"undirected\">\n"
        << "    <data key=\"n\">" << g.n() << "</data>\n"
        << "    <data key=\"axisless\">" << (geom.axial() ? "false" : "true") << "</data>\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "    <node id=\"v" << v << "\">"
            << "<data key=\"label\">" << g.vertex(v).to_string() << "</data>"
            << "<data key=\"class\">" << vertex_class_name(classes[v]) << "</data>"
            << "<data key=\"deg\">" << g.degree(v) << "</data>"
            << "<data key=\"omega_loc\">" << omega[v] << "</data>";
        if (geom.ax_dist[v] != kUnreachable) out << "<data key=\"ax_dist\">" << geom.ax_dist[v] << "</data>";
        if (geom.sp_dist[v] != kUnreachable) out << "<data key=\"sp_dist\">" << geom.sp_dist[v] << "</data>";
        out << "</node>\n";
    }
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId w : g.neighbors(u)) {
            if (u < w) out << "    <edge source=\"v" << u << "\" target=\"v" << w << "\"/>\n";
        }
    }
    out << "  </graph>\n</graphml>\n";
    return out.str();
}

void export_graph(const PipelineResult& result, GraphFormat format, const std::filesystem::path& path) {
    write_text_file(path, format == GraphFormat::dot ? to_dot(result) : to_graphml(result));
}

}  // namespace paxis
