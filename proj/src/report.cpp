#include "paxis/report.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>
#include <openssl/evp.h>

namespace paxis {

std::string format_ratio(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw std::invalid_argument("format_ratio: zero denominator");
    // Scaled by 10^4, with half-up rounding done in integers.
    std::uint64_t scaled = (num * 20000 + den) / (2 * den);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%llu.%04llu", static_cast<unsigned long long>(scaled / 10000),
                  static_cast<unsigned long long>(scaled % 10000));
    return buf;
}

namespace {

template <class T>
std::string cell(const std::optional<T>& value) {
    return value ? std::to_string(*value) : std::string(kUndefinedCell);
}

}  // namespace

std::string BasicAxialRow::to_csv() const {
    std::ostringstream out;
    out << n << ',' << p_n << ',' << (axial ? "yes" : "no") << ',' << a_n << ',' << cell(sigma_n) << ','
        << cell(c1_n) << ',' << format_ratio(a_n, p_n) << ','
        << (sigma_n ? format_ratio(*sigma_n, p_n) : kUndefinedCell) << ','
        << (c1_n ? format_ratio(*c1_n, p_n) : kUndefinedCell);
    return out.str();
}

std::string ExtremalRow::to_csv() const {
    std::ostringstream out;
    out << n << ',' << invariant_name(invariant) << ',' << max_value << ',' << argmax_size << ','
        << cell(argmax_axis_count) << ',' << cell(rho_ax) << ',' << cell(rho_sp);
    return out.str();
}

BasicAxialRow basic_axial_row(const PipelineResult& result) {
    const auto& geom = result.geometry;
    BasicAxialRow row;
    row.n = result.n();
    row.p_n = result.graph.vertex_count();
    row.axial = geom.axial();
    row.a_n = geom.axis.size();
    if (row.axial) {
        row.sigma_n = geom.spine.size();
        row.c1_n = central_region(geom, 1).size();
    }
    return row;
}

ExtremalRow extremal_row(const PipelineResult& result, Invariant id) {
    const auto& prof = result.profile(id);
    return {result.n(), id, prof.max_value, prof.argmax.size(), prof.argmax_axis_count, prof.rho_ax, prof.rho_sp};
}

std::string basic_axial_csv(std::span<const PipelineResult> results) {
    std::string out = std::string(kBasicAxialHeader) + '\n';
    for (const auto& r : results) out += basic_axial_row(r).to_csv() + '\n';
    return out;
}

std::string extremal_location_csv(std::span<const PipelineResult> results) {
    std::string out = std::string(kExtremalHeader) + '\n';
    for (Invariant id : kAllInvariants) {
        for (const auto& r : results) out += extremal_row(r, id).to_csv() + '\n';
    }
    return out;
}

std::string shells_csv(std::span<const PipelineResult> results) {
    std::string out = std::string(kShellsHeader) + '\n';
    for (const auto& r : results) {
        if (!r.geometry.axial()) continue;
        auto shells = shell_counts(r.geometry);
        auto emit = [&](const char* kind, const std::vector<std::size_t>& counts) {
            for (std::size_t k = 0; k < counts.size(); ++k) {
                out += std::to_string(r.n()) + ',' + kind + ',' + std::to_string(k) + ',' +
                       std::to_string(counts[k]) + '\n';
            }
        };
        emit("ax", shells.ax);
        emit("sp", shells.sp);
    }
    return out;
}

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 digest failed");
    }
    std::string hex;
    for (unsigned int i = 0; i < length; ++i) {
        char byte[3];
        std::snprintf(byte, sizeof byte, "%02x", digest[i]);
        hex += byte;
    }
    return hex;
}

void write_text_file(const std::filesystem::path& path, std::string_view body) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

namespace {

std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::ostringstream out;
    out << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

}  // namespace

ReportSummary run_range(int n_min, int n_max, const ReportOptions& options) {
    ReportSummary summary;
    summary.results = run_pipelines(n_min, n_max, options.threads);

    std::error_code ec;
    std::filesystem::create_directories(options.out_dir, ec);
    if (ec) throw IoError("cannot create " + options.out_dir.string() + ": " + ec.message());

    const std::pair<const char*, std::string> bodies[] = {
        {"basic_axial.csv", basic_axial_csv(summary.results)},
        {"extremal_location.csv", extremal_location_csv(summary.results)},
        {"shells.csv", shells_csv(summary.results)},
    };

    nlohmann::ordered_json manifest;
    manifest["tool"] = "paxis";
    manifest["version"] = options.tool_version;
    manifest["n_min"] = n_min;
    manifest["n_max"] = n_max;
    manifest["timestamp"] = utc_timestamp();
    auto& timings = manifest["wall_time_seconds"];
    timings = nlohmann::ordered_json::object();
    for (const auto& r : summary.results) timings[std::to_string(r.n())] = r.seconds;
    manifest["files"] = nlohmann::ordered_json::array();

    for (const auto& [name, body] : bodies) {
        auto path = options.out_dir / name;
        write_text_file(path, body);
        auto digest = sha256_hex(body);
        manifest["files"].push_back({{"name", name}, {"sha256", digest}});
        summary.files.push_back({path, digest});
    }

    auto manifest_path = options.out_dir / "manifest.json";
    auto manifest_body = manifest.dump(2) + '\n';
    write_text_file(manifest_path, manifest_body);
    summary.files.push_back({manifest_path, sha256_hex(manifest_body)});
    return summary;
}

}  // namespace paxis
