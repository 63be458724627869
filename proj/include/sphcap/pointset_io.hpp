#pragma once

#include <iosfwd>
#include <string>

#include "sphcap/sphere.hpp"

namespace sphcap {

enum class PointSetFormat { Json, Csv };

// JSON schema: {"d": int, "n": int, "label"?: string, "points": [[d+1 floats], ...]}.
// CSV: headerless, one point per row, d+1 comma-separated columns.
// Floats are written with 17 significant digits so unit vectors round-trip
// bit-for-bit.
void save_point_set(const PointSet& p, std::ostream& out, PointSetFormat format);
PointSet load_point_set(std::istream& in, PointSetFormat format);

// File helpers; format inferred from the extension (.csv -> CSV, else JSON).
void save_point_set_file(const PointSet& p, const std::string& path);
PointSet load_point_set_file(const std::string& path);

}  // namespace sphcap
