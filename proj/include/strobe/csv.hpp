#pragma once

/// CSV export: header `index,theta,rx,ry,rz,r_dot_q`, LF line endings,
/// shortest round-trip decimal per value (up to 17 significant digits),
/// byte-deterministic for identical inputs.

#include <charconv>
#include <fstream>
#include <ostream>
#include <string>

#include "strobe/errors.hpp"
#include "strobe/sphere.hpp"

namespace strobe {

inline std::string format_double(double x) {
    if (x == 0.0) return "0";  // avoid "-0"
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

inline void write_csv(const Trajectory& t, std::ostream& os) {
    os << "index,theta,rx,ry,rz,r_dot_q\n";
    for (const Sample& s : t.samples) {
        os << s.index << ',' << format_double(s.theta) << ',' << format_double(s.r.x) << ','
           << format_double(s.r.y) << ',' << format_double(s.r.z) << ','
           << format_double(s.r_dot_q) << '\n';
    }
}

inline void write_csv_file(const Trajectory& t, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open '" + path + "' for writing");
    write_csv(t, os);
    os.flush();
    if (!os) throw IoError("write failed for '" + path + "'");
}

}  // namespace strobe
