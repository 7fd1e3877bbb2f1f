#pragma once

// Text formats:
//   nodes file    one decimal integer per line, ascending
//   samples file  lines of "n re im", whitespace separated
// Blank lines and lines starting with '#' are skipped on input.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <vector>

#include "sparsesum/phase.hpp"

namespace sparsesum::io {

std::vector<std::int64_t> read_nodes(std::istream& in);
std::vector<std::int64_t> read_nodes(const std::filesystem::path& path);
void write_nodes(std::ostream& out, const std::vector<std::int64_t>& nodes);

std::map<std::int64_t, complex> read_samples(std::istream& in);
std::map<std::int64_t, complex> read_samples(const std::filesystem::path& path);
void write_samples(std::ostream& out, const std::map<std::int64_t, complex>& samples);

}  // namespace sparsesum::io
