#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entherm/lattice.hpp"

namespace entherm {

// Full description of one run. Everything except out_dir enters the config
// hash, so reruns are traceable to their inputs.
struct RunConfig {
    ClusterSpec geometry{ClusterKind::chain, 8};
    double j_a = 1.0;
    double jb_over_ja = 1.0;
    double lambda_max = 6.0;
    double dlambda = 0.02;
    double t_min = 0.01;
    double t_max = 100.0;
    int beta_points = 400;
    double tol = 1e-10;
    int max_iter = 1000;
    std::uint64_t seed = 1;
    std::string out_dir = ".";

    double j_b() const { return j_a * jb_over_ja; }
};

void validate(const RunConfig& config);

RunConfig run_config_from_json(const std::string& text);
RunConfig load_run_config(const std::string& path);

// FNV-1a over a canonical serialization of the physics fields.
std::uint64_t config_hash(const RunConfig& config);

// 17 significant digits; round-trips every double exactly.
std::string format_double(double v);
double parse_double(const std::string& s);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void write_csv(const std::string& path, const CsvTable& table);
CsvTable read_csv(const std::string& path);

// JSON sidecar next to the CSVs: config hash, the config itself, and the
// subcommand that produced the files.
void write_metadata(const std::string& path, const RunConfig& config,
                    const std::string& command);

} // namespace entherm
