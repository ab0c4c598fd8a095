#include "spindyn/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "spindyn/analysis.hpp"
#include "spindyn/errors.hpp"

namespace spindyn {

const std::string& csv_header() {
    static const std::string header =
        "tau,t,x,y,z,bx,by,bz,gamma,zx,zy,zz,Pi_e1,Pi_e2,Pi_e3,Pi_b1,Pi_b2,Pi_b3,m,res_vv,res_frenkel,res_spinnorm,"
        "res_massshell";
    return header;
}

std::string format_number(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const Trajectory& traj) {
    out << csv_header() << '\n';
    std::string line;
    for (const auto& s : traj.samples) {
        const Vec3 r = s.state.r.spatial();
        const Vec3 beta = velocity_beta(s.state.v);
        const AntisymTensor2& pi = s.state.spin;
        const double row[] = {s.phase.tau, s.t, r.x, r.y, r.z, beta.x, beta.y, beta.z, s.gamma, s.zeta.x, s.zeta.y,
                              s.zeta.z, pi.e.x, pi.e.y, pi.e.z, pi.b.x, pi.b.y, pi.b.z, s.mass, s.residuals.vv,
                              s.residuals.supplementary, s.residuals.spin_norm, s.residuals.mass_shell};
        line.clear();
        for (double v : row) {
            if (!line.empty()) line += ',';
            line += format_number(v);
        }
        out << line << '\n';
    }
}

void write_csv(const std::filesystem::path& path, const Trajectory& traj) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    write_csv(out, traj);
    if (!out) throw IoError("write failed for " + path.string());
}

const std::vector<double>& CsvTable::column(const std::string& name) const {
    const auto it = columns.find(name);
    if (it == columns.end()) throw IoError("CSV has no column '" + name + "'");
    return it->second;
}

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) throw IoError("CSV is empty");
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) table.header.push_back(cell);
    }
    if (table.header.empty()) throw IoError("CSV header is empty");
    std::vector<std::vector<double>*> cols;
    for (const auto& h : table.header) {
        if (table.columns.count(h)) throw IoError("CSV repeats column '" + h + "'");
        cols.push_back(&table.columns[h]);
    }

    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::size_t col = 0, start = 0;
        while (true) {
            const std::size_t end = std::min(line.find(',', start), line.size());
            if (col >= cols.size()) throw IoError("CSV line " + std::to_string(lineno) + " has too many cells");
            double v = 0.0;
            const char* first = line.data() + start;
            const char* last = line.data() + end;
            const auto res = std::from_chars(first, last, v);
            if (res.ec != std::errc() || res.ptr != last)
                throw IoError("CSV line " + std::to_string(lineno) + " column '" + table.header[col] +
                              "' is not a number");
            cols[col++]->push_back(v);
            if (end == line.size()) break;
            start = end + 1;
        }
        if (col != cols.size()) throw IoError("CSV line " + std::to_string(lineno) + " has too few cells");
        ++table.rows;
    }
    return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path.string());
    return read_csv(in);
}

namespace {

struct Series {
    std::vector<double> y;
    const char* colour;
    const char* label;
};

void panel(std::ostream& out, const std::vector<double>& x, const std::vector<Series>& series, double top,
           double height, const char* title) {
    const double left = 60, width = 560;
    double x0 = x.empty() ? 0 : x.front(), x1 = x.empty() ? 1 : x.back();
    if (x1 == x0) x1 = x0 + 1;
    double lo = 0, hi = 0;
    bool first = true;
    for (const auto& s : series)
        for (double v : s.y) {
            lo = first ? v : std::min(lo, v);
            hi = first ? v : std::max(hi, v);
            first = false;
        }
    if (hi - lo < 1e-12) {
        lo -= 1;
        hi += 1;
    }
    out << "<rect x='" << left << "' y='" << top << "' width='" << width << "' height='" << height
        << "' fill='none' stroke='#999'/>\n";
    out << "<text x='" << left << "' y='" << top - 6 << "' font-size='12'>" << title << "</text>\n";
    out << "<text x='" << left - 4 << "' y='" << top + 10 << "' font-size='10' text-anchor='end'>"
        << format_number(hi) << "</text>\n";
    out << "<text x='" << left - 4 << "' y='" << top + height << "' font-size='10' text-anchor='end'>"
        << format_number(lo) << "</text>\n";
    double legend = left + width - 150;
    for (const auto& s : series) {
        out << "<polyline fill='none' stroke='" << s.colour << "' stroke-width='1' points='";
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double px = left + width * (x[i] - x0) / (x1 - x0);
            const double py = top + height * (hi - s.y[i]) / (hi - lo);
            out << px << ',' << py << ' ';
        }
        out << "'/>\n";
        out << "<text x='" << legend << "' y='" << top - 6 << "' font-size='11' fill='" << s.colour << "'>" << s.label
            << "</text>\n";
        legend += 45;
    }
}

}  // namespace

void write_svg(std::ostream& out, const Trajectory& traj, const Vec3& axis) {
    std::vector<double> tau, zx, zy, zz, angle;
    for (const auto& s : traj.samples) {
        tau.push_back(s.phase.tau);
        zx.push_back(s.zeta.x);
        zy.push_back(s.zeta.y);
        zz.push_back(s.zeta.z);
        angle.push_back(spin_velocity_angle(s.zeta, velocity_beta(s.state.v), axis));
    }
    angle = unwrap(angle);
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='640' height='520' font-family='sans-serif'>\n";
    panel(out, tau, {{zx, "#c0392b", "zeta_x"}, {zy, "#27ae60", "zeta_y"}, {zz, "#2c3e50", "zeta_z"}}, 30, 200,
          "zeta vs proper time");
    panel(out, tau, {{angle, "#8e44ad", "angle"}}, 290, 200, "spin-velocity angle (rad) vs proper time");
    out << "</svg>\n";
}

}  // namespace spindyn
