#pragma once

// Complexes of non-intersecting lattice paths attached to determinantal
// initial ideals: facet enumeration, the facet order and its shellings,
// corners and flips, and the invariants read off from corners.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "srball/complex.hpp"

namespace srball {

/// Matrix position (row i, column j), both 1-based.
struct GridPoint {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// The m x n grid with (i,j) <= (i',j') iff i >= i' and j <= j'.
struct GridPoset {
  int m = 0;
  int n = 0;

  [[nodiscard]] int index(GridPoint p) const { return (p.i - 1) * n + (p.j - 1); }
  [[nodiscard]] GridPoint point(int v) const { return {v / n + 1, v % n + 1}; }
  [[nodiscard]] bool contains(GridPoint p) const { return p.i >= 1 && p.i <= m && p.j >= 1 && p.j <= n; }
  [[nodiscard]] static bool leq(GridPoint a, GridPoint b) { return a.i >= b.i && a.j <= b.j; }
  /// Labels "X<i>_<j>".
  [[nodiscard]] VertexUniverse universe() const;
};

/// sigma = [a_1..a_r | b_1..b_r] on an m x n matrix.
struct MinorSpec {
  int m = 0;
  int n = 0;
  std::vector<int> a;
  std::vector<int> b;

  /// [1..r | 1..r], whose complex has the ideal of (r+1)-minors.
  static MinorSpec leading(int m, int n, int r);

  [[nodiscard]] int r() const { return static_cast<int>(a.size()); }
  [[nodiscard]] GridPoset grid() const { return {m, n}; }
  /// Throws on malformed input.
  void validate() const;
  /// r(m+n+1) - sum(a_i + b_i).
  [[nodiscard]] int facet_size() const;
  [[nodiscard]] std::string describe() const;
  friend bool operator==(const MinorSpec&, const MinorSpec&) = default;
};

/// Maximal chain from (a, n) down to (m, b); each step is (+1,0) or (0,-1).
struct LatticePath {
  std::vector<GridPoint> points;

  [[nodiscard]] bool contains(GridPoint p) const;
  /// Points (i,j) on the path with (i-1,j) and (i,j-1) also on it.
  [[nodiscard]] std::vector<GridPoint> corners() const;
  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

/// A facet of the complex: r disjoint paths, C_k from P_k to Q_k.
struct PathFamily {
  std::vector<LatticePath> paths;
  Face face;
  Face corner_set;

  [[nodiscard]] int corner_count() const { return corner_set.size(); }
  friend bool operator==(const PathFamily& x, const PathFamily& y) { return x.paths == y.paths; }
};

/// Builds the family and its masks from explicit paths; checks disjointness.
PathFamily make_family(const GridPoset& grid, std::vector<LatticePath> paths);

/// The unique path from `start` to `end` whose corners are exactly `corners`.
/// Throws when the corners do not describe such a path.
LatticePath path_from_corners(GridPoint start, GridPoint end, std::vector<GridPoint> corners);

struct EnumerationOptions {
  std::size_t max_facets = 200000;
};

/// All facets in lexicographic order of their vertex-index sets.
/// Throws with the partial count when the cap is exceeded.
std::vector<PathFamily> enumerate_facets(const MinorSpec& spec, const EnumerationOptions& options = {});

/// Corner points of a family.
std::vector<GridPoint> corners(const PathFamily& family);

/// Flips v to v + (1,1). Throws "not flippable at v" when the move is illegal.
LatticePath flip(const LatticePath& path, GridPoint v);

/// Points of the path where a flip is legal (ignoring other paths).
std::vector<GridPoint> flip_points(const LatticePath& path);

/// No path admits a flip.
bool path_is_non_flippable(const LatticePath& path);

/// No path of the family admits a flip whose new point is free in the family.
bool is_non_flippable(const GridPoset& grid, const PathFamily& family);

/// f1 <= f2: every point of each path of f2 has a point of the matching path
/// of f1 weakly above and to the left.
bool facet_leq(const PathFamily& f1, const PathFamily& f2);

/// The strict facet order as a dense bit matrix, for repeated extension sampling.
class FacetOrder {
 public:
  explicit FacetOrder(const std::vector<PathFamily>& facets);

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] bool less(std::size_t a, std::size_t b) const {
    return (bits_[a * words_ + b / 64] >> (b % 64)) & 1;
  }
  /// Kahn's algorithm, smallest facet (lexicographically) first.
  [[nodiscard]] std::vector<std::size_t> lex_extension() const;
  /// Kahn's algorithm with a uniformly random choice among ready facets.
  [[nodiscard]] std::vector<std::size_t> random_extension(std::uint64_t seed) const;
  /// True iff `order` is a permutation that never puts a larger facet first.
  [[nodiscard]] bool respects(const std::vector<std::size_t>& order) const;

 private:
  std::vector<std::size_t> extension(const std::function<std::size_t(const std::vector<std::size_t>&)>& pick) const;

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::size_t> rank_;
};

/// Positions into `facets` forming a linear extension of facet_leq; ties go to
/// the lexicographically smaller facet.
std::vector<std::size_t> shelling_order(const std::vector<PathFamily>& facets);

/// A uniformly seeded random linear extension of facet_leq.
std::vector<std::size_t> random_linear_extension(const std::vector<PathFamily>& facets, std::uint64_t seed);

/// The complex generated by the facets, over the full grid universe.
SimplicialComplex build_path_complex(const GridPoset& grid, const std::vector<PathFamily>& facets);

struct CanonicalGenerator {
  Face face;
  int degree = 0;
};

/// F \ C(F) for every non-flippable facet, sorted canonically.
std::vector<CanonicalGenerator> canonical_generators(const GridPoset& grid, const std::vector<PathFamily>& facets);

/// Corner counts of the non-flippable facets.
std::vector<int> corner_spectrum(const GridPoset& grid, const std::vector<PathFamily>& facets);

/// A non-flippable facet of the [1..r|1..r] complex with t corners, for r <= t <= r(m-r).
PathFamily construct_nonflippable(int m, int n, int r, int t);

/// h_i = number of facets with i corners, padded to length d + 1.
HVector h_via_corners(const std::vector<PathFamily>& facets, int d);

/// Inclusion-minimal main diagonals of the minors not above sigma.
std::vector<Face> sr_generators(const MinorSpec& spec);

/// Boundary membership in the prefix <F_1..F_i> of an ordered facet list,
/// read off from corners.
bool boundary_via_corners(const std::vector<PathFamily>& ordered, std::size_t i, Face g);

struct LemmaCheck {
  bool holds = true;
  std::size_t cases = 0;
  std::string witness;
};

/// For every step k and v in F_k: F_k \ {v} lies in an earlier facet iff v is a
/// corner, and then that earlier facet is unique.
LemmaCheck check_late(const std::vector<PathFamily>& ordered);

/// Families reached from `family` by one flip whose new point is free.
std::vector<PathFamily> facet_flips(const GridPoset& grid, const PathFamily& family);

struct FunCheck {
  /// (a) C(F) <= C(F') iff (b) F' \ C(F') <= F \ C(F), over all ordered pairs.
  LemmaCheck biconditional;
  std::size_t a_without_b = 0;
  std::size_t b_without_a = 0;
  /// (b) iff F' arises from F by a sequence of flips (zero flips allowed).
  LemmaCheck flip_reachability;
};

/// Both readings of the corner/complement lemma over all ordered facet pairs.
FunCheck check_fun(const GridPoset& grid, const std::vector<PathFamily>& facets);

/// Facet-level non-flippability agrees with maximality of the corner set.
LemmaCheck check_nonflippable_maximality(const GridPoset& grid, const std::vector<PathFamily>& facets);

/// Renders the family on the grid: '*' for path points, 'c' for corners, '.' otherwise.
std::string render_family(const GridPoset& grid, const PathFamily& family);

}  // namespace srball
