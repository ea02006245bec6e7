#pragma once

// Multiplicity bounds for boundary spheres of balls: closed forms in (n, d, m),
// products of Betti shifts, cyclic-polytope comparators, and the per-instance
// check that ties them together.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srball/complex.hpp"
#include "srball/homology.hpp"
#include "srball/shelling.hpp"

namespace srball {

/// n vertices, Krull dimension d of the ball's ring, smallest nonface size m.
struct BoundParams {
  int n = 0;
  int d = 0;
  int m = 0;
};

struct ClosedFormBounds {
  Rational lower;
  Rational upper;
  /// 2 <= m <= floor((d + 1) / 2) and n > d.
  bool in_range = false;
};

/// L = n prod_{i=1}^{n-d} (m+i-1) / (n-d+1)!,  U = n prod_{i=1}^{n-d} (d-m+i) / (n-d+1)!.
ClosedFormBounds closed_form_bounds(const BoundParams& params);

struct BettiBounds {
  int p = 0;
  Rational lower;  ///< prod m_i / p!
  Rational upper;  ///< prod M_i / p!
};

/// Throws "gap in resolution" when some index in 1..p has no entry.
BettiBounds betti_bounds(const BettiTable& table);

/// 2 sum_{i<m} C(n-d+i, i) + (d - 2m) C(n-d+m-1, m-1).
Rational lower_bound_estimate(const BoundParams& params);

/// h-vector of the boundary of the cyclic polytope C(n, d-1): length d,
/// h_i = C(n-d+i, i) for i <= (d-1)/2, mirrored.
HVector cyclic_h(int n, int d);

/// M*_1 .. M*_{n-d+1} for the boundary of C(n, d-1).
std::vector<int> cyclic_max_shifts(int n, int d);

/// prod M*_i / (n-d+1)!.
Rational cyclic_upper_product(int n, int d);

enum class Verdict { Pass, Fail, Inapplicable };

std::string to_string(Verdict v);

struct ConjectureReport {
  int n = 0;
  int d = 0;
  std::optional<int> m;
  FVector f;
  HVector h;
  FVector boundary_f;
  HVector boundary_h;
  /// boundary_h_from_h(h) agrees with the h-vector of the computed boundary.
  bool boundary_h_consistent = false;
  BigInt e = 0;

  bool shelling_pass = false;
  bool ball_pass = false;
  std::string ball_reason;

  std::vector<int> inside_face_sizes;  ///< cardinalities of minimal inside faces, sorted
  bool a1 = false;
  bool a2 = false;
  bool boundary_symmetric = false;
  bool all_vertices_on_boundary = false;

  std::optional<ClosedFormBounds> closed;
  std::optional<Rational> estimate;

  std::optional<BettiTable> betti;  ///< of the boundary sphere
  std::optional<BettiBounds> betti_bounds;
  std::optional<bool> betti_bounds_hold;
  /// Shifts of the boundary equal m+i-1 / d-m+i (and n at the last index).
  std::optional<bool> shifts_match_closed_form;
  std::string betti_note;

  /// h' <= h* entrywise against the cyclic polytope with the same n and d.
  std::optional<bool> below_cyclic;

  Verdict verdict = Verdict::Inapplicable;
  std::vector<std::string> reasons;
};

struct CheckOptions {
  FieldSpec field;
  HochsterOptions hochster;
};

/// Runs the full pipeline on a ball given with a shelling order.
ConjectureReport check_conjecture(const SimplicialComplex& ball, std::span<const std::size_t> order,
                                  const CheckOptions& options = {});

}  // namespace srball
