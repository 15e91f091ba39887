// output.cpp — File writers for the CLI surface

#include "ktop/output.hpp"

#include "ktop/version.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ktop::io {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path, bool binary) {
    std::ofstream out(path, binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path.string());
    }
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

std::string field(const std::optional<double>& value) {
    return value ? format_value(*value) : std::string();
}

} // namespace

std::string format_value(double value) {
    char buffer[48];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

void write_time_series_csv(const std::filesystem::path& path,
                           const std::vector<survey::CorrelationRecord>& records) {
    std::ofstream out = open_for_write(path, false);
    out << "kick,linear_entropy,von_neumann,concurrence,discord,tangle,bell_m\n";
    for (const survey::CorrelationRecord& r : records) {
        out << r.kick << ',' << field(r.linear_entropy) << ',' << field(r.von_neumann) << ','
            << field(r.concurrence) << ',' << field(r.discord) << ',' << field(r.tangle) << ','
            << field(r.bell_m) << '\n';
    }
    finish(out, path);
}

void write_phase_map_csv(const std::filesystem::path& path, const survey::PhaseMap& map) {
    std::ofstream out = open_for_write(path, false);
    out << "theta,phi";
    for (const auto& [measure, values] : map.values) {
        out << ',' << survey::measure_name(measure);
    }
    out << '\n';
    const std::size_t n_phi = map.grid.phi.size();
    for (std::size_t row = 0; row < map.grid.theta.size(); ++row) {
        for (std::size_t col = 0; col < n_phi; ++col) {
            out << format_value(map.grid.theta[row]) << ',' << format_value(map.grid.phi[col]);
            for (const auto& [measure, values] : map.values) {
                out << ',' << format_value(values[row * n_phi + col]);
            }
            out << '\n';
        }
    }
    finish(out, path);
}

void write_poincare_csv(const std::filesystem::path& path,
                        const std::vector<top::SectionPoint>& points) {
    std::ofstream out = open_for_write(path, false);
    out << "seed_id,step,theta,phi\n";
    for (const top::SectionPoint& pt : points) {
        out << pt.seed_id << ',' << pt.step << ',' << format_value(pt.theta) << ','
            << format_value(pt.phi) << '\n';
    }
    finish(out, path);
}

PgmNormalization write_pgm(const std::filesystem::path& path, int rows, int cols,
                           const std::vector<double>& values) {
    if (rows < 1 || cols < 1 ||
        values.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        throw std::invalid_argument("write_pgm: values size does not match rows x cols");
    }
    PgmNormalization norm{values[0], values[0]};
    for (const double v : values) {
        norm.min = std::min(norm.min, v);
        norm.max = std::max(norm.max, v);
    }
    const double span = norm.max - norm.min;

    std::ofstream out = open_for_write(path, true);
    out << "P5\n" << cols << ' ' << rows << "\n255\n";
    std::vector<unsigned char> pixels(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double scaled = span > 0.0 ? (values[i] - norm.min) / span : 0.0;
        pixels[i] = static_cast<unsigned char>(std::lround(255.0 * scaled));
    }
    out.write(reinterpret_cast<const char*>(pixels.data()),
              static_cast<std::streamsize>(pixels.size()));
    finish(out, path);
    return norm;
}

void RunManifest::add_output(const std::filesystem::path& path, const std::string& kind) {
    outputs.push_back({{"path", path.string()}, {"kind", kind}});
}

void RunManifest::add_output(const std::filesystem::path& path, const std::string& kind,
                             const PgmNormalization& norm) {
    outputs.push_back({{"path", path.string()},
                       {"kind", kind},
                       {"normalization", {{"min", norm.min}, {"max", norm.max}}}});
}

nlohmann::json RunManifest::to_json() const {
    return {
        {"command", command},
        {"parameters", parameters},
        {"version", std::string(kVersion)},
        {"deterministic", "identical flags reproduce the data files byte-identically"},
        {"wall_clock_seconds", wall_clock_seconds},
        {"outputs", outputs},
    };
}

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
    std::ofstream out = open_for_write(path, false);
    out << manifest.to_json().dump(2) << '\n';
    finish(out, path);
}

} // namespace ktop::io
