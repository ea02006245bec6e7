#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "srball/shelling.hpp"
#include "support.hpp"

using namespace srball;

TEST_SUITE("shelling") {
  TEST_CASE("a path of triangles is a shellable ball") {
    auto c = build_complex({{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}, 5);
    auto order = identity_order(c);
    auto cert = verify_shelling(c, order);
    CHECK(cert.pass);
    REQUIRE(cert.steps.size() == 3);
    CHECK(cert.steps[0].glued.empty());
    REQUIRE(cert.steps[1].glued.size() == 1);
    CHECK(cert.steps[1].glued[0].ridge == Face{1, 2});
    CHECK(verify_ball(c, order).pass);
  }

  TEST_CASE("a bad order of a shellable complex fails at the right step") {
    auto c = build_complex({{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}, 5);
    std::vector<std::size_t> order{0, 2, 1};
    auto cert = verify_shelling(c, order);
    CHECK_FALSE(cert.pass);
    REQUIRE(cert.failing_step);
    CHECK(*cert.failing_step == 1);
    REQUIRE(cert.steps[1].bad_intersection);
    CHECK(*cert.steps[1].bad_intersection == Face{2});
  }

  TEST_CASE("two triangles meeting at a vertex are not shellable in any order") {
    auto c = build_complex({{0, 1, 2}, {2, 3, 4}}, 5);
    CHECK_FALSE(verify_shelling(c, std::vector<std::size_t>{0, 1}).pass);
    CHECK_FALSE(verify_shelling(c, std::vector<std::size_t>{1, 0}).pass);
  }

  TEST_CASE("a sphere shells but is not a ball") {
    auto c = build_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, 4);
    auto order = identity_order(c);
    CHECK(verify_shelling(c, order).pass);
    auto ball = verify_ball(c, order);
    CHECK_FALSE(ball.pass);
    REQUIRE(ball.failing_step);
    CHECK(*ball.failing_step == 3);
    CHECK_FALSE(ball.flags[3].proper);
  }

  TEST_CASE("a ridge glued to two earlier facets breaks the ball property") {
    // Three triangles on a common edge: shellable, not a pseudomanifold.
    auto c = build_complex({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}, 5);
    auto order = identity_order(c);
    CHECK(verify_shelling(c, order).pass);
    auto ball = verify_ball(c, order);
    CHECK_FALSE(ball.pass);
    CHECK_FALSE(ball.flags[2].unique_gluing);
  }

  TEST_CASE("input validation") {
    auto c = build_complex({{0, 1}, {1, 2}}, 3);
    CHECK_THROWS(verify_shelling(c, std::vector<std::size_t>{0}));
    CHECK_THROWS(verify_shelling(c, std::vector<std::size_t>{0, 0}));
    CHECK_THROWS(verify_shelling(c, std::vector<std::size_t>{0, 2}));
    CHECK_THROWS_WITH(verify_shelling(build_complex({{0, 1}, {2}}, 3), std::vector<std::size_t>{0, 1}), "not pure");
  }

  TEST_CASE("the seed is carried through") {
    auto c = build_complex({{0, 1}, {1, 2}}, 3);
    CHECK(verify_shelling(c, identity_order(c), 42).seed == 42u);
  }

  TEST_CASE("property: verdicts agree with brute force on random orders") {
    std::mt19937_64 rng(9001);
    int passes = 0;
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 5 + static_cast<int>(rng() % 3);
      const int k = 2 + static_cast<int>(rng() % 2);
      std::vector<oracle::Set> sets;
      for (int c = 0; c < 2 + static_cast<int>(rng() % 5); ++c) {
        oracle::Set all(n);
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        oracle::Set f(all.begin(), all.begin() + k);
        std::sort(f.begin(), f.end());
        sets.push_back(f);
      }
      auto c = support::complex_of(sets, n);
      auto order = identity_order(c);
      std::shuffle(order.begin(), order.end(), rng);
      auto cert = verify_shelling(c, order);
      const int brute = oracle::shelling_failure(support::ordered_sets(c, order));
      CHECK(cert.pass == (brute < 0));
      if (!cert.pass) CHECK(static_cast<int>(*cert.failing_step) == brute);
      passes += cert.pass;
    }
    CHECK(passes > 20);
  }

  TEST_CASE("property: stacked balls in construction order are certified balls") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 80; ++trial) {
      const int d = 2 + static_cast<int>(rng() % 4);
      auto sets = oracle::random_stacked_ball(rng, d, static_cast<int>(rng() % 8));
      const int n = static_cast<int>(oracle::vertices_of(sets).size());
      auto c = support::complex_of(sets, n);
      std::vector<std::size_t> order;
      for (const auto& s : sets) order.push_back(*c.facet_index(Face::from(s)));
      auto ball = verify_ball(c, order);
      CHECK(ball.pass);
      // a certified ball has a pure boundary one dimension lower
      auto b = boundary_complex(c);
      CHECK(b.is_pure());
      CHECK(b.max_facet_size() == d - 1);
    }
  }
}
