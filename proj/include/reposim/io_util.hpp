#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace reposim::io {

// 64-bit FNV-1a. Also the documented n-gram bucket hash of the embedding
// model format.
std::uint64_t fnv1a64(std::string_view data);

std::string to_hex(std::uint64_t v);

// Shortest-round-trip decimal formatting for doubles; all artifact files use
// this so that identical values serialize identically.
std::string format_double(double v);

// strtod with full-string validation.
double parse_double(std::string_view s, bool& ok);

std::uint64_t parse_u64(std::string_view s, bool& ok);

std::vector<std::string_view> split_ws(std::string_view line);

// Whole-file read; throws IoError.
std::string read_file(const std::filesystem::path& p);

// Write via temp file + rename so partially written artifacts never appear.
void atomic_write(const std::filesystem::path& p, std::string_view contents);

}  // namespace reposim::io
