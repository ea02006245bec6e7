#include <random>

#include "doctest.h"
#include "srball/bounds.hpp"
#include "support.hpp"

using namespace srball;

namespace {

/// Facets of the boundary of the cyclic polytope C(n, k) by Gale's evenness condition.
std::vector<oracle::Set> gale_facets(int n, int k) {
  std::vector<oracle::Set> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (__builtin_popcountll(mask) != k) continue;
    bool even = true;
    for (int i = 0; i < n && even; ++i)
      for (int j = i + 1; j < n && even; ++j) {
        if ((mask >> i) & 1 || (mask >> j) & 1) continue;
        int between = 0;
        for (int x = i + 1; x < j; ++x) between += (mask >> x) & 1;
        even = between % 2 == 0;
      }
    if (even) out.push_back(oracle::bits_to_set(mask));
  }
  return out;
}

Rational q(long long p, long long r = 1) { return Rational(p, r); }

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("closed forms at n=6 d=4 m=2") {
    auto b = closed_form_bounds({6, 4, 2});
    CHECK(b.lower == q(6));
    CHECK(b.upper == q(12));
    CHECK(b.in_range);
    CHECK(lower_bound_estimate({6, 4, 2}) == q(8));
    CHECK_FALSE(closed_form_bounds({6, 4, 3}).in_range);
    CHECK_FALSE(closed_form_bounds({6, 4, 1}).in_range);
    CHECK_THROWS(closed_form_bounds({3, 4, 2}));
  }

  TEST_CASE("closed forms against direct products") {
    for (int n = 4; n <= 12; ++n)
      for (int d = 2; d < n; ++d)
        for (int m = 2; m <= (d + 1) / 2; ++m) {
          BigInt lo = n, hi = n;
          for (int i = 1; i <= n - d; ++i) {
            lo *= m + i - 1;
            hi *= d - m + i;
          }
          auto b = closed_form_bounds({n, d, m});
          CHECK(b.lower == Rational(lo, factorial(n - d + 1)));
          CHECK(b.upper == Rational(hi, factorial(n - d + 1)));
          CHECK(b.lower <= b.upper);
        }
  }

  TEST_CASE("cyclic h-vectors match Gale evenness") {
    for (int n = 5; n <= 9; ++n)
      for (int d = 3; d < n; ++d) {
        auto facets = gale_facets(n, d - 1);
        auto h = oracle::h_vector(oracle::f_vector(facets));
        CHECK(support::to_ll(cyclic_h(n, d)) == h);
      }
  }

  TEST_CASE("cyclic max shifts match the Hochster table of the Gale complex") {
    for (auto [n, d] : {std::pair{6, 5}, {7, 4}, {8, 4}, {7, 5}, {8, 5}}) {
      auto c = support::complex_of(gale_facets(n, d - 1), n);
      auto table = hochster_betti_table(c, FieldSpec::rationals());
      CHECK(shifts(table).max == cyclic_max_shifts(n, d));
    }
  }

  TEST_CASE("cyclic comparators") {
    CHECK(cyclic_h(6, 5).sum() == 9);
    CHECK(cyclic_upper_product(6, 5) == q(9));
    CHECK(cyclic_h(8, 5).sum() == 20);
    CHECK(cyclic_upper_product(8, 5) == q(20));
    CHECK(cyclic_h(7, 4).sum() == 10);
    CHECK(cyclic_upper_product(7, 4) == q(35, 2));
    CHECK(cyclic_h(8, 4).sum() == 12);
    CHECK(cyclic_upper_product(8, 4) == q(24));
    CHECK_THROWS(cyclic_max_shifts(4, 4));
  }

  TEST_CASE("property: even-dimensional cyclic spheres attain the product, odd ones stay below") {
    for (int n = 5; n <= 12; ++n)
      for (int d = 3; d < n; ++d) {
        const Rational e(cyclic_h(n, d).sum());
        if ((d - 1) % 2 == 0) CHECK(e == cyclic_upper_product(n, d));
        else CHECK(e < cyclic_upper_product(n, d));
      }
  }

  TEST_CASE("Betti bounds need a gap-free table") {
    BettiTable t;
    t.add(0, 0, 1);
    t.add(1, 2, 1);
    t.add(2, 4, 1);
    auto b = betti_bounds(t);
    CHECK(b.p == 2);
    CHECK(b.lower == q(4));
    CHECK(b.upper == q(4));
    BettiTable gap;
    gap.add(0, 0, 1);
    gap.add(2, 4, 1);
    CHECK_THROWS(betti_bounds(gap));
  }

  TEST_CASE("spheres are inapplicable") {
    auto s = build_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, 4);
    auto rep = check_conjecture(s, identity_order(s));
    CHECK(rep.verdict == Verdict::Inapplicable);
    REQUIRE(rep.reasons.size() == 1);
    CHECK(rep.reasons[0] == "no boundary");
  }

  TEST_CASE("a bad order is not a certified ball") {
    auto c = build_complex({{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}, 5);
    auto rep = check_conjecture(c, std::vector<std::size_t>{0, 2, 1});
    CHECK_FALSE(rep.ball_pass);
    CHECK(rep.verdict == Verdict::Inapplicable);
    REQUIRE_FALSE(rep.reasons.empty());
    CHECK(rep.reasons.back().rfind("not a certified ball", 0) == 0);
  }

  TEST_CASE("interior vertices are flagged") {
    // cone over a hexagon: the apex is inside
    auto c = build_complex({{0, 1, 6}, {1, 2, 6}, {2, 3, 6}, {3, 4, 6}, {4, 5, 6}, {0, 5, 6}}, 7);
    auto order = identity_order(c);
    std::sort(order.begin(), order.end(), [&](auto x, auto y) {
      return c.facet(x).min_vertex() < c.facet(y).min_vertex();
    });
    auto rep = check_conjecture(c, order);
    CHECK(rep.ball_pass);
    CHECK_FALSE(rep.all_vertices_on_boundary);
    CHECK(rep.inside_face_sizes == std::vector<int>{1});
    CHECK_FALSE(rep.a1);
    CHECK(rep.verdict == Verdict::Inapplicable);
  }

  TEST_CASE("property: stacked balls against brute force, Betti bounds always hold") {
    std::mt19937_64 rng(1729);
    for (int trial = 0; trial < 40; ++trial) {
      const int d = 3 + static_cast<int>(rng() % 3);
      auto sets = oracle::random_stacked_ball(rng, d, 1 + static_cast<int>(rng() % 5));
      const int n = static_cast<int>(oracle::vertices_of(sets).size());
      auto c = support::complex_of(sets, n);
      std::vector<std::size_t> order;
      for (const auto& s : sets) order.push_back(*c.facet_index(Face::from(s)));
      auto rep = check_conjecture(c, order);
      CHECK(rep.ball_pass);
      CHECK(rep.boundary_h_consistent);
      CHECK(rep.boundary_symmetric);
      CHECK(rep.e == static_cast<long long>(oracle::boundary_facets(sets).size()));
      CHECK(support::to_ll(rep.h) == oracle::h_vector(oracle::f_vector(sets)));
      REQUIRE(rep.betti_bounds_hold);
      CHECK(*rep.betti_bounds_hold);
      if (rep.below_cyclic) CHECK(*rep.below_cyclic);
      if (rep.verdict == Verdict::Pass) {
        CHECK(rep.closed->lower <= Rational(rep.e));
        CHECK(Rational(rep.e) <= rep.closed->upper);
      }
      if (rep.verdict == Verdict::Inapplicable) CHECK_FALSE(rep.reasons.empty());
    }
  }
}
