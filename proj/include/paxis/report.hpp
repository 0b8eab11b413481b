#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "paxis/pipeline.hpp"

namespace paxis {

/// Placeholder for undefined (axisless) cells.
inline constexpr const char* kUndefinedCell = "--";

inline constexpr const char* kBasicAxialHeader =
    "n,p_n,axial,a_n,sigma_n,c1_n,a_over_p,sigma_over_p,c1_over_p";
inline constexpr const char* kExtremalHeader = "n,invariant,max,argmax_size,argmax_axis_count,rho_ax,rho_sp";
inline constexpr const char* kShellsHeader = "n,kind,k,count";

/// num/den rounded half-up to four decimals, e.g. (1, 7) -> "0.1429".
std::string format_ratio(std::uint64_t num, std::uint64_t den);

struct BasicAxialRow {
    int n = 0;
    std::size_t p_n = 0;
    bool axial = false;
    std::size_t a_n = 0;
    std::optional<std::size_t> sigma_n;
    std::optional<std::size_t> c1_n;

    std::string to_csv() const;
};

struct ExtremalRow {
    int n = 0;
    Invariant invariant = Invariant::deg;
    int max_value = 0;
    std::size_t argmax_size = 0;
    std::optional<std::size_t> argmax_axis_count;
    std::optional<int> rho_ax;
    std::optional<int> rho_sp;

    std::string to_csv() const;
};

BasicAxialRow basic_axial_row(const PipelineResult& result);
ExtremalRow extremal_row(const PipelineResult& result, Invariant id);

/// CSV bodies including header, LF line endings.
std::string basic_axial_csv(std::span<const PipelineResult> results);
/// Grouped by invariant (deg, omega_loc, dim_loc), ascending n within a group.
std::string extremal_location_csv(std::span<const PipelineResult> results);
/// Axial and spinal shell counts; axisless n contribute no rows.
std::string shells_csv(std::span<const PipelineResult> results);

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EmittedFile {
    std::filesystem::path path;
    std::string sha256;
};

struct ReportOptions {
    std::filesystem::path out_dir = ".";
    unsigned threads = 1;
    std::string tool_version = "0.1.0";
};

struct ReportSummary {
    std::vector<PipelineResult> results;
    std::vector<EmittedFile> files;  // the three CSVs, then manifest.json
};

/**
 * Runs every n in [n_min, n_max] and writes basic_axial.csv,
 * extremal_location.csv, shells.csv and manifest.json into out_dir.
 * Throws std::invalid_argument for a bad range, IoError on write failure.
 */
ReportSummary run_range(int n_min, int n_max, const ReportOptions& options);

std::string sha256_hex(std::string_view data);

void write_text_file(const std::filesystem::path& path, std::string_view body);

}  // namespace paxis
