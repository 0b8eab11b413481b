#include <doctest.h>

#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "paxis/export.hpp"
#include "paxis/report.hpp"
#include "paxis/verify.hpp"

namespace fs = std::filesystem;
using paxis::VertexClass;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch_dir(const std::string& tag) {
    std::random_device rd;
    auto dir = fs::temp_directory_path() / ("paxis_" + tag + "_" + std::to_string(rd()));
    fs::remove_all(dir);
    return dir;
}

std::map<VertexClass, std::size_t> class_sizes(int n) {
    auto result = paxis::run_pipeline(n);
    std::map<VertexClass, std::size_t> sizes;
    for (auto c : paxis::classify_vertices(result.geometry)) ++sizes[c];
    return sizes;
}

std::size_t occurrences(const std::string& haystack, const std::string& needle) {
    std::size_t count = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++count;
    return count;
}

}  // namespace

TEST_CASE("format_ratio rounds half-up to four decimals") {
    CHECK(paxis::format_ratio(1, 7) == "0.1429");
    CHECK(paxis::format_ratio(2, 3) == "0.6667");
    CHECK(paxis::format_ratio(1, 8) == "0.1250");
    CHECK(paxis::format_ratio(1, 20000) == "0.0001");
    CHECK(paxis::format_ratio(1, 20001) == "0.0000");
    CHECK(paxis::format_ratio(3, 3) == "1.0000");
    CHECK(paxis::format_ratio(0, 2) == "0.0000");
    CHECK(paxis::format_ratio(276, 5604) == "0.0493");
    CHECK_THROWS_AS(paxis::format_ratio(1, 0), std::invalid_argument);
}

TEST_CASE("CSV rows") {
    CHECK(paxis::basic_axial_row(paxis::run_pipeline(8)).to_csv() == "8,22,yes,2,6,10,0.0909,0.2727,0.4545");
    CHECK(paxis::basic_axial_row(paxis::run_pipeline(2)).to_csv() == "2,2,no,0,--,--,0.0000,--,--");

    auto r14 = paxis::run_pipeline(14);
    CHECK(paxis::extremal_row(r14, paxis::Invariant::deg).to_csv() == "14,deg,15,2,0,1,0");
    auto r2 = paxis::run_pipeline(2);
    CHECK(paxis::extremal_row(r2, paxis::Invariant::omega_loc).to_csv() == "2,omega_loc,2,2,--,--,--");
}

TEST_CASE("CSV bodies") {
    auto results = paxis::run_pipelines(1, 4);
    auto basic = paxis::basic_axial_csv(results);
    CHECK(basic.rfind(std::string(paxis::kBasicAxialHeader) + "\n", 0) == 0);
    CHECK(occurrences(basic, "\n") == 5);
    CHECK(basic.find('\r') == std::string::npos);

    auto extremal = paxis::extremal_location_csv(results);
    CHECK(occurrences(extremal, "\n") == 1 + 3 * 4);
    // deg block first, then omega_loc, then dim_loc.
    CHECK(extremal.find("4,deg") < extremal.find("1,omega_loc"));
    CHECK(extremal.find("4,omega_loc") < extremal.find("1,dim_loc"));

    auto shells = paxis::shells_csv(results);
    CHECK(shells.find("\n2,") == std::string::npos);
    CHECK(shells.find("3,ax,0,1\n") != std::string::npos);
    CHECK(shells.find("3,ax,1,2\n") != std::string::npos);
}

TEST_CASE("run_range writes files, manifest checksums, deterministic bodies") {
    auto first = scratch_dir("a");
    auto second = scratch_dir("b");
    auto summary = paxis::run_range(1, 12, {first, 2, "test"});
    paxis::run_range(1, 12, {second, 1, "test"});

    REQUIRE(summary.files.size() == 4);
    for (const char* name : {"basic_axial.csv", "extremal_location.csv", "shells.csv"}) {
        CHECK(slurp(first / name) == slurp(second / name));
    }

    auto manifest = nlohmann::json::parse(slurp(first / "manifest.json"));
    CHECK(manifest["n_min"] == 1);
    CHECK(manifest["n_max"] == 12);
    CHECK(manifest["version"] == "test");
    CHECK(manifest["wall_time_seconds"].size() == 12);
    REQUIRE(manifest["files"].size() == 3);
    for (const auto& entry : manifest["files"]) {
        auto name = entry["name"].get<std::string>();
        CHECK(entry["sha256"] == paxis::sha256_hex(slurp(first / name)));
    }

    fs::remove_all(first);
    fs::remove_all(second);
}

TEST_CASE("run_range errors") {
    CHECK_THROWS_AS(paxis::run_range(0, 3, {}), std::invalid_argument);
    CHECK_THROWS_AS(paxis::run_range(5, 4, {}), std::invalid_argument);

    // out_dir collides with a regular file.
    auto blocker = scratch_dir("blocker");
    paxis::write_text_file(blocker, "x");
    CHECK_THROWS_AS(paxis::run_range(1, 2, {blocker / "sub"}), paxis::IoError);
    fs::remove(blocker);
}

TEST_CASE("sha256_hex") {
    CHECK(paxis::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("vertex classes") {
    auto s9 = class_sizes(9);
    CHECK(s9[VertexClass::axis] == 2);
    CHECK(s9[VertexClass::spine_off_axis] == 0);
    CHECK(s9[VertexClass::central_off_spine] == 6);
    CHECK(s9[VertexClass::outer] == 22);

    auto s1 = class_sizes(1);
    CHECK(s1[VertexClass::axis] == 1);
    CHECK(s1.size() == 1);

    auto s24 = class_sizes(24);
    CHECK(s24[VertexClass::axis] == 11);
    CHECK(s24[VertexClass::spine_off_axis] == 40);
    CHECK(s24[VertexClass::central_off_spine] == 68);
    CHECK(s24[VertexClass::outer] == 1456);

    for (int n = 1; n <= 30; ++n) {
        std::size_t total = 0;
        for (auto [c, k] : class_sizes(n)) total += k;
        CHECK(total == paxis::partition_count(n));
    }

    auto s2 = class_sizes(2);
    CHECK(s2[VertexClass::outer] == 2);
    CHECK(s2.size() == 1);
}

TEST_CASE("graph export") {
    CHECK(paxis::parse_graph_format("dot") == paxis::GraphFormat::dot);
    CHECK(paxis::parse_graph_format("graphml") == paxis::GraphFormat::graphml);
    CHECK_FALSE(paxis::parse_graph_format("png").has_value());

    auto r8 = paxis::run_pipeline(8);
    auto dot = paxis::to_dot(r8);
    CHECK(dot.rfind("graph G_8 {", 0) == 0);
    CHECK(dot.find("axisless=false") != std::string::npos);
    CHECK(dot.find("label=\"4,4\"") != std::string::npos);
    CHECK(occurrences(dot, " -- ") == r8.graph.edge_count());
    CHECK(occurrences(dot, "class=\"axis\"") == 2);
    CHECK(occurrences(dot, "class=\"spine_off_axis\"") == 4);

    auto gml = paxis::to_graphml(r8);
    CHECK(occurrences(gml, "<node ") == 22);
    CHECK(occurrences(gml, "<edge ") == r8.graph.edge_count());
    CHECK(occurrences(gml, "<data key=\"ax_dist\">") == 22);

    auto r2 = paxis::run_pipeline(2);
    auto dot2 = paxis::to_dot(r2);
    CHECK(dot2.find("axisless=true") != std::string::npos);
    CHECK(occurrences(dot2, "class=\"outer\"") == 2);
    CHECK(dot2.find("ax_dist") == std::string::npos);
    auto gml2 = paxis::to_graphml(r2);
    CHECK(gml2.find("<data key=\"axisless\">true</data>") != std::string::npos);
    CHECK(gml2.find("<data key=\"ax_dist\">") == std::string::npos);

    auto dir = scratch_dir("export");
    fs::create_directories(dir);
    paxis::export_graph(r8, paxis::GraphFormat::graphml, dir / "G_8.graphml");
    CHECK(slurp(dir / "G_8.graphml") == gml);
    fs::remove_all(dir);
}

TEST_CASE("verify") {
    CHECK(paxis::partition_count(0) == 1);
    CHECK(paxis::partition_count(8) == 22);
    CHECK(paxis::partition_count(30) == 5604);

    auto report = paxis::verify_range(1, 20, 2);
    CHECK(report.ok());

    auto axisless = paxis::verify_range(2, 2);
    CHECK(axisless.ok());
    std::size_t skipped = 0;
    for (const auto& c : axisless.checks) {
        if (c.property == "axis_edgeless" || c.property == "spine_sandwich" || c.property == "radius_sandwich") {
            CHECK(c.status == paxis::CheckStatus::skipped);
        }
        if (c.property == "conjugation_automorphism" || c.property == "adjacency_simple_symmetric") {
            CHECK(c.status == paxis::CheckStatus::pass);
        }
        skipped += c.status == paxis::CheckStatus::skipped;
    }
    CHECK(skipped > 0);

    std::ostringstream out;
    axisless.print(out);
    CHECK(out.str().find("n=2 axis_edgeless skipped (axisless)") != std::string::npos);
}

TEST_CASE("verify reports counterexamples for a corrupted result") {
    auto r = paxis::run_pipeline(10);
    r.profiles[1].values[5] += 1;  // omega_loc
    r.geometry.spine.pop_back();

    auto checks = paxis::verify_result(r);
    auto status_of = [&](const std::string& name) {
        for (const auto& c : checks) {
            if (c.property == name) return c.status;
        }
        FAIL("missing check " << name);
        return paxis::CheckStatus::skipped;
    };
    CHECK(status_of("oracle_equivalence") == paxis::CheckStatus::fail);
    CHECK(status_of("dim_shift") == paxis::CheckStatus::fail);
    CHECK(status_of("spine_membership") == paxis::CheckStatus::fail);
    CHECK(status_of("axis_edgeless") == paxis::CheckStatus::pass);
}
