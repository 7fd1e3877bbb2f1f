#include "sparsesum/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include "sparsesum/error.hpp"

namespace sparsesum::io {

namespace {

bool skip_line(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  return in;
}

[[noreturn]] void bad_line(std::size_t line_no, const std::string& line) {
  throw Error(ErrorKind::Io, "line " + std::to_string(line_no) + ": cannot parse '" + line + "'");
}

}  // namespace

std::vector<std::int64_t> read_nodes(std::istream& in) {
  std::vector<std::int64_t> nodes;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    std::istringstream ss(line);
    std::int64_t n;
    std::string rest;
    if (!(ss >> n) || (ss >> rest)) bad_line(line_no, line);
    if (!nodes.empty() && n <= nodes.back()) {
      throw Error(ErrorKind::InvalidSequence,
                  "line " + std::to_string(line_no) + ": nodes must be strictly ascending");
    }
    nodes.push_back(n);
  }
  return nodes;
}

std::vector<std::int64_t> read_nodes(const std::filesystem::path& path) {
  auto in = open(path);
  return read_nodes(in);
}

void write_nodes(std::ostream& out, const std::vector<std::int64_t>& nodes) {
  for (auto n : nodes) out << n << '\n';
}

std::map<std::int64_t, complex> read_samples(std::istream& in) {
  std::map<std::int64_t, complex> samples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    std::istringstream ss(line);
    std::int64_t n;
    double re;
    double im;
    std::string rest;
    if (!(ss >> n >> re >> im) || (ss >> rest)) bad_line(line_no, line);
    if (!samples.emplace(n, complex(re, im)).second) {
      throw Error(ErrorKind::Io, "line " + std::to_string(line_no) + ": duplicate index " +
                                     std::to_string(n));
    }
  }
  return samples;
}

std::map<std::int64_t, complex> read_samples(const std::filesystem::path& path) {
  auto in = open(path);
  return read_samples(in);
}

void write_samples(std::ostream& out, const std::map<std::int64_t, complex>& samples) {
  out << std::setprecision(17);
  for (const auto& [n, v] : samples) out << n << ' ' << v.real() << ' ' << v.imag() << '\n';
}

}  // namespace sparsesum::io
