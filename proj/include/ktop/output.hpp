// output.hpp — CSV, binary-P5 graymap, and run-manifest writers. All text output
// uses 12 significant digits, LF endings, and a fixed column order so identical
// inputs produce byte-identical files.

#pragma once

#include "ktop/kicked_top.hpp"
#include "ktop/survey.hpp"

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace ktop::io {

// 12 significant digits, C locale.
std::string format_value(double value);

// Header is fixed: kick,linear_entropy,von_neumann,concurrence,discord,tangle,bell_m
// with absent measures left as empty fields.
void write_time_series_csv(const std::filesystem::path& path,
                           const std::vector<survey::CorrelationRecord>& records);

// Header: theta,phi,<measure>... one row per cell, theta-major.
void write_phase_map_csv(const std::filesystem::path& path, const survey::PhaseMap& map);

// Header: seed_id,step,theta,phi
void write_poincare_csv(const std::filesystem::path& path,
                        const std::vector<top::SectionPoint>& points);

struct PgmNormalization {
    double min = 0.0;
    double max = 0.0;
};

// Binary P5, min-max normalized per file; pixel (0,0) is the first row of
// `values` (row-major rows x cols). Returns the normalization applied.
PgmNormalization write_pgm(const std::filesystem::path& path, int rows, int cols,
                           const std::vector<double>& values);

// One manifest accompanies every command's outputs; re-running the recorded
// command reproduces the data files byte-identically.
struct RunManifest {
    std::string command;
    nlohmann::json parameters;
    nlohmann::json outputs = nlohmann::json::array();
    double wall_clock_seconds = 0.0;

    void add_output(const std::filesystem::path& path, const std::string& kind);
    void add_output(const std::filesystem::path& path, const std::string& kind,
                    const PgmNormalization& norm);
    nlohmann::json to_json() const;
};

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);

} // namespace ktop::io
