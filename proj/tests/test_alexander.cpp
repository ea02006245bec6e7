#include <random>
#include <set>

#include "doctest.h"
#include "srball/alexander.hpp"
#include "support.hpp"

using namespace srball;

namespace {

/// Dual by definition: complements (in the ground set) of nonfaces.
std::vector<oracle::Set> dual_by_definition(const std::vector<oracle::Set>& facets, const oracle::Set& ground) {
  const auto faces = oracle::all_faces(facets);
  std::vector<oracle::Set> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ground.size()); ++mask) {
    oracle::Set s, rest;
    for (std::size_t i = 0; i < ground.size(); ++i) ((mask >> i) & 1 ? s : rest).push_back(ground[i]);
    if (!faces.count(s)) out.push_back(rest);
  }
  return oracle::maximal(out);
}

}  // namespace

TEST_SUITE("alexander") {
  TEST_CASE("duals of small complexes") {
    // a 4-cycle: nonfaces {0,2} and {1,3}
    auto cycle = build_complex({{0, 1}, {1, 2}, {2, 3}, {0, 3}}, 4);
    auto dual = alexander_dual(cycle);
    CHECK(support::facets_of(dual) == std::vector<oracle::Set>{{0, 2}, {1, 3}});
    CHECK(alexander_dual(dual) == cycle);
    CHECK_THROWS_WITH(alexander_dual(build_complex({{0, 1, 2}}, 3)), "dual undefined (zero ideal)");
    // with a larger ground set the extra vertex is a nonface
    auto grown = alexander_dual(build_complex({{0, 1, 2}}, 4), Face{0, 1, 2, 3});
    CHECK(support::facets_of(grown) == std::vector<oracle::Set>{{0, 1, 2}});
    CHECK_THROWS(alexander_dual(cycle, Face{0, 1}));
  }

  TEST_CASE("vertex covers") {
    CHECK(support::to_sets(minimal_vertex_covers({Face{0, 1}, Face{1, 2}})) ==
          std::vector<oracle::Set>{{0, 2}, {1}});
    CHECK_THROWS(minimal_vertex_covers({Face{}}));
    CHECK(minimal_vertex_covers({}).size() == 1);
  }

  TEST_CASE("property: duals, involution and cover duality on random complexes") {
    std::mt19937_64 rng(65537);
    for (int trial = 0; trial < 150; ++trial) {
      const int n = 3 + static_cast<int>(rng() % 6);
      auto sets = oracle::random_complex(rng, n, 1 + static_cast<int>(rng() % 5), n - 1);
      auto c = support::complex_of(sets, n);
      const oracle::Set ground = oracle::vertices_of(sets);
      auto nonfaces = minimal_nonfaces(c).faces;
      if (nonfaces.empty()) continue;
      auto dual = alexander_dual(c);
      CHECK(support::facets_of(dual) == dual_by_definition(sets, ground));
      CHECK(alexander_dual(dual, c.used_vertices()) == c);
      // generators of the dual ideal = minimal covers of the original generators
      // generators of the dual ideal over the same ground set are the minimal
      // covers of the original generators; vertices lying in every nonface
      // vanish from the dual and come back as singleton generators
      auto dual_gens = support::to_sets(minimal_nonfaces(dual).faces);
      for (int v : ground)
        if (!dual.used_vertices().contains(v)) dual_gens.push_back({v});
      std::sort(dual_gens.begin(), dual_gens.end());
      CHECK(dual_gens == oracle::minimal_vertex_covers(support::to_sets(nonfaces)));
      CHECK(support::to_sets(minimal_vertex_covers(nonfaces)) ==
            oracle::minimal_vertex_covers(support::to_sets(nonfaces)));
    }
  }

  TEST_CASE("dual matrix") {
    auto y = dual_matrix(3, 4);
    CHECK(y.rows() == 2);
    auto shown = y.display();
    CHECK(shown[0] == std::vector<std::string>{"X11", "X22", "X33", "Y14"});
    CHECK(shown[1] == std::vector<std::string>{"Y21", "X12", "X23", "X34"});
    CHECK(y.x_entry(2, 3) == GridPoint{2, 3});
    CHECK_FALSE(y.x_entry(2, 1).has_value());
    CHECK_THROWS(dual_matrix(4, 3));
  }

  TEST_CASE("property: the identification is injective") {
    for (int m = 1; m <= 5; ++m)
      for (int n = m; n <= 7; ++n) {
        auto y = dual_matrix(m, n);
        std::set<GridPoint> seen;
        int count = 0;
        for (int k = 1; k <= y.rows(); ++k)
          for (int c = 1; c <= n; ++c)
            if (auto x = y.x_entry(k, c)) {
              CHECK(y.identified(k, c));
              // only entries that lie on some maximal-minor diagonal are identified
              CHECK(x->i <= x->j);
              CHECK(x->j <= x->i + n - m);
              seen.insert(*x);
              ++count;
            }
        CHECK(static_cast<int>(seen.size()) == count);
        CHECK(count == m * (n - m + 1));
      }
  }

  TEST_CASE("dual theorem") {
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}) {
      CAPTURE(m);
      CAPTURE(n);
      auto rep = verify_dual_theorem(m, n);
      CHECK_MESSAGE(rep.pass, rep.witness);
      CHECK(rep.sets_equal);
      CHECK(rep.involution);
      CHECK(rep.covers == rep.y_diagonals);
      if (n > m) {
        REQUIRE(rep.y_complex_matches);
        CHECK(*rep.y_complex_matches);
      }
    }
  }
}
