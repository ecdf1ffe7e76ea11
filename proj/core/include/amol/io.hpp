#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "amol/frame.hpp"
#include "amol/grid.hpp"

namespace amol {

// Raw row-major little-endian doubles at `path`, metadata at path + ".json".
void write_image(const std::string& path, const Image& f);
// Throws on a missing or inconsistent sidecar or a short data file.
Image read_image(const std::string& path);

// 17 significant digits.
std::string format_double(double v);

// Columns family,eps,j,l,k1,k2,re,im in flat order.
std::string coefficients_csv(const Frame& frame, const CoefficientSet& c);

// Writes to a temporary sibling and renames over `path`.
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t v);

}  // namespace amol
