#pragma once

// Alexander duality, minimal vertex covers, and the dual-matrix description of
// the dual of the maximal-minor complex.

#include <optional>
#include <string>
#include <vector>

#include "srball/complex.hpp"
#include "srball/path_complex.hpp"

namespace srball {

/// Facets are ground \ N over the minimal nonfaces N of the complex inside `ground`
/// (default: the used vertices). Throws "dual undefined (zero ideal)" when the
/// complex is the full simplex on the ground set.
SimplicialComplex alexander_dual(const SimplicialComplex& complex, std::optional<Face> ground = std::nullopt);

/// Inclusion-minimal vertex sets meeting every edge, sorted canonically.
std::vector<Face> minimal_vertex_covers(const std::vector<Face>& edges);

/// Dual of an m x n matrix: the (n-m+1) x n matrix Y with Y_{k,c} = X_{c-k+1,c}
/// whenever k <= c <= k+m-1; the other entries are free variables.
struct DualMatrixMap {
  int m = 0;
  int n = 0;

  [[nodiscard]] int rows() const { return n - m + 1; }
  [[nodiscard]] bool identified(int k, int c) const { return k <= c && c <= k + m - 1; }
  /// The X entry behind Y_{k,c}; nullopt for a free entry.
  [[nodiscard]] std::optional<GridPoint> x_entry(int k, int c) const;
  /// Row-major display, e.g. "X11 X22 X33 Y14".
  [[nodiscard]] std::vector<std::vector<std::string>> display() const;
};

DualMatrixMap dual_matrix(int m, int n);

struct DualTheoremReport {
  int m = 0;
  int n = 0;
  std::size_t generators = 0;  ///< diagonals of maximal minors of X
  std::size_t covers = 0;      ///< minimal vertex covers of those diagonals
  std::size_t y_diagonals = 0; ///< diagonals of maximal minors of Y
  bool all_entries_identified = true;
  bool diagonals_are_covers = true;   ///< J* inside the dual
  bool covers_contain_diagonal = true; ///< dual inside J*
  bool sets_equal = true;
  bool involution = true;  ///< dual of the dual is the original complex
  /// Minimal nonfaces of the Y path complex, mapped to X, are the minimal
  /// nonfaces of the dual; only run when the Y grid is small enough.
  std::optional<bool> y_complex_matches;
  std::optional<bool> y_complex_ball;
  bool pass = false;
  std::string witness;
};

/// Checks the dual theorem for the maximal-minor complex of an m x n matrix.
DualTheoremReport verify_dual_theorem(int m, int n, int y_complex_max_facets = 20000);

}  // namespace srball
