#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sparsesum/error.hpp"
#include "sparsesum/nodes.hpp"

using namespace sparsesum;

namespace {

constexpr double kPi = std::numbers::pi;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected sparsesum::Error");
  return ErrorKind::Io;
}

}  // namespace

TEST_CASE("q_sequence") {
  SUBCASE("q = 1.15, M = 151") {
    const auto s = q_sequence({1.15, 151});
    CHECK(s.size() == 151);
    CHECK(s.first() == 1);
    CHECK(s[23] == 24);
    CHECK(s[24] == 28);
    CHECK(s.last() == 1272553509);
  }
  SUBCASE("q = 2, M = 5") {
    const auto s = q_sequence({2.0, 5});
    CHECK(std::vector<std::int64_t>(s.nodes().begin(), s.nodes().end()) ==
          std::vector<std::int64_t>{1, 2, 4, 8, 16});
  }
  SUBCASE("errors") {
    CHECK(kind_of([] { q_sequence({1.15, 150}); }) == ErrorKind::InvalidCount);
    CHECK(kind_of([] { q_sequence({1.15, 1}); }) == ErrorKind::InvalidCount);
    CHECK(kind_of([] { q_sequence({1.0, 151}); }) == ErrorKind::InvalidRatio);
    CHECK(kind_of([] { q_sequence({0.5, 151}); }) == ErrorKind::InvalidRatio);
    CHECK(kind_of([] { q_sequence({3.0, 101}); }) == ErrorKind::OutOfRange);
  }
}

TEST_CASE("hybrid_nodes") {
  SUBCASE("a = 1") {
    const auto spec = HybridSpec::for_lorentzian(1.0);
    CHECK(spec.flat_end == 2);
    CHECK(spec.cutoff == 300);
    CHECK(spec.flat_count() == 2);
    const auto s = hybrid_nodes(spec);
    CHECK(s[0] == 1);
    CHECK(s[1] == 2);
    CHECK(s[2] == 3);
    CHECK(s.last() == 300);
    CHECK(s.size() <= 151);
  }
  SUBCASE("a = 5 cutoff") {
    const auto spec = HybridSpec::for_lorentzian(5.0);
    CHECK(spec.cutoff == 477);
    CHECK(spec.flat_end == 7);
  }
  SUBCASE("N0 = 120 makes every integer in [1, 120] a node") {
    const HybridSpec spec{120, 100000, 151};
    CHECK(spec.flat_count() == 120);
    const auto s = hybrid_nodes(spec);
    for (std::int64_t j = 0; j < 120; ++j) CHECK(s[j] == j + 1);
    CHECK(s.last() == 100000);
  }
  SUBCASE("a = 1e5 uses all 151 nodes on a geometric tail") {
    const auto spec = HybridSpec::for_lorentzian(1e5);
    CHECK(spec.flat_end == 127324);
    CHECK(spec.cutoff == 9549296);
    const auto s = hybrid_nodes(spec);
    CHECK(s.size() == 151);
    CHECK(s[119] == 127324);
    CHECK(s.last() == 9549296);
  }
  SUBCASE("errors") {
    CHECK(kind_of([] { hybrid_nodes({10, 10, 151}); }) == ErrorKind::InvalidCutoff);
    CHECK(kind_of([] { hybrid_nodes({10, 5, 151}); }) == ErrorKind::InvalidCutoff);
    CHECK(kind_of([] { hybrid_nodes({10, 500, 150}); }) == ErrorKind::InvalidCount);
    // a short budget still lands exactly on N
    const auto tiny = hybrid_nodes({2, 1000000, 11});
    CHECK(tiny.size() == 11);
    CHECK(tiny.last() == 1000000);
  }
}

TEST_CASE("split_nodes") {
  SUBCASE("a = pi/2: region 1 empty") {
    const auto spec = SplitSpec::for_resonant(kPi / 2);
    CHECK(spec.singular_index == 0);
    CHECK(spec.cutoff == 10000);
    const auto segs = split_nodes(spec);
    REQUIRE(segs.size() == 1);
    REQUIRE(segs[0].nodes);
    CHECK(segs[0].first == 1);
    CHECK(segs[0].last == 10000);
    CHECK(segs[0].nodes->size() == 151);
  }
  SUBCASE("a = 3pi/2: single direct term then [2, 1e4]") {
    const auto spec = SplitSpec::for_resonant(1.5 * kPi);
    CHECK(spec.singular_index == 1);
    const auto segs = split_nodes(spec);
    REQUIRE(segs.size() == 2);
    CHECK(!segs[0].nodes);
    CHECK(segs[0].first == 1);
    CHECK(segs[0].last == 1);
    CHECK(segs[1].first == 2);
    CHECK(segs[1].last == 10000);
  }
  SUBCASE("a = 1e5 pi + pi/2: dense reversed sequence ending at N0") {
    const auto spec = SplitSpec::for_resonant(1e5 * kPi + kPi / 2);
    CHECK(spec.singular_index == 100000);
    CHECK(spec.cutoff == 1000000000);
    const auto segs = split_nodes(spec);
    REQUIRE(segs.size() == 2);
    REQUIRE(segs[0].nodes);
    const auto v = segs[0].nodes->nodes();
    CHECK(v.front() == 1);
    CHECK(v.back() == 100000);
    CHECK(v.size() % 2 == 1);
    // unit steps right next to N0
    CHECK(v[v.size() - 2] == 99999);
    for (std::size_t i = 2; i + 1 < v.size(); ++i) CHECK(v[i + 1] - v[i] <= v[i] - v[i - 1] + 1);
    REQUIRE(segs[1].nodes);
    CHECK(segs[1].nodes->first() == 100001);
    CHECK(segs[1].nodes->last() == 1000000000);
  }
  SUBCASE("direct region up to N0 = 301") {
    const auto segs = split_nodes({301, 3010000, 1.1, 151});
    CHECK(!segs[0].nodes);
    const auto segs2 = split_nodes({302, 3020000, 1.1, 151});
    CHECK(segs2[0].nodes.has_value());
  }
  SUBCASE("integer a/pi is singular") {
    CHECK(kind_of([] { SplitSpec::for_resonant(2.0 * kPi); }) == ErrorKind::SingularParameter);
  }
}

TEST_CASE("repair_nodes") {
  using V = std::vector<std::int64_t>;
  CHECK(repair_nodes({1, 2, 5}) == V{1, 2, 5});
  CHECK(repair_nodes({1, 1, 2, 5}) == V{1, 2, 5});
  CHECK(repair_nodes({1, 2, 10, 12}) == V{1, 2, 6, 10, 12});
  CHECK(repair_nodes({1, 2, 3, 4}) == V{1, 3, 4});
}
