#include <doctest.h>

#include <random>
#include <sstream>

#include "sparsesum/error.hpp"
#include "sparsesum/io.hpp"

using namespace sparsesum;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected sparsesum::Error");
  return ErrorKind::InvalidPanel;
}

}  // namespace

TEST_CASE("read_nodes") {
  std::istringstream in("# nodes\n1\n\n2\n  4  \n8\n");
  CHECK(io::read_nodes(in) == std::vector<std::int64_t>{1, 2, 4, 8});

  std::istringstream bad("1\nx\n");
  CHECK(kind_of([&] { io::read_nodes(bad); }) == ErrorKind::Io);
  std::istringstream down("1\n3\n2\n");
  CHECK(kind_of([&] { io::read_nodes(down); }) == ErrorKind::InvalidSequence);
  std::istringstream extra("1 2\n");
  CHECK(kind_of([&] { io::read_nodes(extra); }) == ErrorKind::Io);
  CHECK(kind_of([] { io::read_nodes(std::filesystem::path("/nonexistent/nodes.txt")); }) ==
        ErrorKind::Io);
}

TEST_CASE("read_samples") {
  std::istringstream in("# n re im\n0 1 0\n2 0.5 -0.25\n1 1e-3 2\n");
  const auto s = io::read_samples(in);
  REQUIRE(s.size() == 3);
  CHECK(s.at(2) == complex(0.5, -0.25));
  CHECK(s.at(1) == complex(1e-3, 2.0));

  std::istringstream dup("0 1 0\n0 2 0\n");
  CHECK(kind_of([&] { io::read_samples(dup); }) == ErrorKind::Io);
  std::istringstream shortline("0 1\n");
  CHECK(kind_of([&] { io::read_samples(shortline); }) == ErrorKind::Io);
}

TEST_CASE("round trip") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int trial = 0; trial < 20; ++trial) {
    std::map<std::int64_t, complex> samples;
    std::vector<std::int64_t> nodes;
    std::int64_t n = static_cast<std::int64_t>(rng() % 100);
    for (int i = 0; i < 50; ++i) {
      n += 1 + static_cast<std::int64_t>(rng() % 1000);
      nodes.push_back(n);
      samples[n] = complex(u(rng), u(rng) * 1e-9);
    }
    std::stringstream ns;
    io::write_nodes(ns, nodes);
    CHECK(io::read_nodes(ns) == nodes);
    std::stringstream ss;
    io::write_samples(ss, samples);
    CHECK(io::read_samples(ss) == samples);
  }
}
