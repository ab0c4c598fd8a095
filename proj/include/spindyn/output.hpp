#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "spindyn/integrator.hpp"

namespace spindyn {

inline constexpr int kCsvSchemaVersion = 1;

/// Header line of the current CSV schema, without the trailing newline.
const std::string& csv_header();

/// One row per sample. Numbers use the shortest round-trip representation,
/// so identical runs give byte-identical files.
void write_csv(std::ostream& out, const Trajectory& traj);
void write_csv(const std::filesystem::path& path, const Trajectory& traj);

/// Column-major table read back from a CSV file.
struct CsvTable {
    std::vector<std::string> header;
    std::map<std::string, std::vector<double>> columns;
    std::size_t rows = 0;

    /// Throws IoError if the column is missing.
    const std::vector<double>& column(const std::string& name) const;
};

/// Throws IoError for unreadable files, ragged rows or non-numeric cells.
CsvTable read_csv(std::istream& in);
CsvTable read_csv(const std::filesystem::path& path);

/// Two stacked line plots against tau: zeta components, and the in-plane
/// spin-velocity angle about `axis`.
void write_svg(std::ostream& out, const Trajectory& traj, const Vec3& axis);

/// Formats a double like the CSV writer.
std::string format_number(double x);

}  // namespace spindyn
