// paxis: partition-graph axial analysis driver.
//
//   paxis report [n_min n_max] [--n-min N] [--n-max N] [--out-dir DIR] [--threads T]
//   paxis export [n_min n_max] --format dot|graphml [--out-dir DIR]
//   paxis verify [n_min n_max] [--threads T]

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "paxis/export.hpp"
#include "paxis/report.hpp"
#include "paxis/verify.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kUsageError = 2;
constexpr int kIoError = 3;

struct RangeArgs {
    int n_min = 1;
    int n_max = 30;
};

void add_range(CLI::App* sub, RangeArgs& range) {
    sub->add_option("n_min,--n-min", range.n_min, "smallest n")->capture_default_str();
    sub->add_option("n_max,--n-max", range.n_max, "largest n")->capture_default_str();
}

bool valid(const RangeArgs& range) {
    if (range.n_min < 1 || range.n_max < range.n_min) {
        std::cerr << "error: need 1 <= n_min <= n_max (got " << range.n_min << ", " << range.n_max << ")\n";
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Axial analysis of partition graphs"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    RangeArgs range;
    std::string out_dir = ".";
    std::string format = "dot";
    unsigned threads = 1;

    auto* report = app.add_subcommand("report", "emit basic_axial.csv, extremal_location.csv, shells.csv");
    add_range(report, range);
    report->add_option("--out-dir", out_dir, "output directory")->capture_default_str();
    report->add_option("--threads", threads, "worker threads")->capture_default_str();

    auto* exporter = app.add_subcommand("export", "write coloured graph files G_<n>.<ext>");
    add_range(exporter, range);
    exporter->add_option("--format", format, "dot or graphml")->capture_default_str();
    exporter->add_option("--out-dir", out_dir, "output directory")->capture_default_str();
    exporter->add_option("--threads", threads, "worker threads")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run all structural property checks");
    add_range(verify, range);
    verify->add_option("--threads", threads, "worker threads")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }
    if (!valid(range)) return kUsageError;

    try {
        if (*report) {
            if (range.n_max > paxis::kRadiusBoundMaxN) {
                std::cerr << "warning: no reference data exists beyond n = 30\n";
            }
            paxis::ReportOptions options{out_dir, threads, kVersion};
            auto summary = paxis::run_range(range.n_min, range.n_max, options);
            for (const auto& file : summary.files) {
                std::cout << file.sha256 << "  " << file.path.string() << '\n';
            }
            return 0;
        }

        if (*exporter) {
            auto parsed = paxis::parse_graph_format(format);
            if (!parsed) {
                std::cerr << "error: unsupported format '" << format << "' (expected dot or graphml)\n";
                return kUsageError;
            }
            std::filesystem::create_directories(out_dir);
            for (const auto& result : paxis::run_pipelines(range.n_min, range.n_max, threads)) {
                auto path = std::filesystem::path(out_dir) /
                            ("G_" + std::to_string(result.n()) + std::string(paxis::file_extension(*parsed)));
                paxis::export_graph(result, *parsed, path);
                std::cout << path.string() << '\n';
            }
            return 0;
        }

        if (*verify) {
            auto result = paxis::verify_range(range.n_min, range.n_max, threads);
            result.print(std::cout);
            std::cout << (result.ok() ? "all properties hold" : std::to_string(result.failures()) + " failure(s)")
                      << '\n';
            return result.ok() ? 0 : 1;
        }
    } catch (const paxis::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
