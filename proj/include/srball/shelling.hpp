#pragma once

// Verification of shelling orders, and of the stronger step-by-step gluing
// conditions under which every prefix of the shelling stays a ball.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srball/complex.hpp"

namespace srball {

struct GluedRidge {
  Face ridge;
  /// Positions (in the order) of earlier facets containing the ridge.
  std::vector<std::size_t> earlier;
};

struct ShellingStep {
  std::size_t facet = 0;  ///< facet index in the complex
  std::vector<GluedRidge> glued;
  bool ok = true;
  /// Set when the step fails: a maximal intersection that is not a ridge.
  std::optional<Face> bad_intersection;
};

struct ShellingCertificate {
  std::vector<std::size_t> order;
  std::vector<ShellingStep> steps;
  bool pass = false;
  std::optional<std::size_t> failing_step;
  std::optional<std::uint64_t> seed;
  std::string reason;
};

struct BallStepFlags {
  bool unique_gluing = true;  ///< every glued ridge lies in exactly one earlier facet
  bool proper = true;         ///< some ridge of the new facet stays unglued
  bool nonempty = true;
};

struct BallCertificate {
  ShellingCertificate shelling;
  std::vector<BallStepFlags> flags;
  bool pass = false;
  std::optional<std::size_t> failing_step;
  std::string reason;
};

/// Checks that each facet meets the union of its predecessors in a nonempty
/// union of its own ridges. Throws on a non-permutation or impure input.
ShellingCertificate verify_shelling(const SimplicialComplex& complex,
                                    std::span<const std::size_t> order,
                                    std::optional<std::uint64_t> seed = std::nullopt);

/// verify_shelling plus, at every step, uniqueness of the earlier facet for each
/// glued ridge and at least one unglued ridge. For a pure prefix a ridge lies in
/// exactly one earlier facet iff it is a boundary ridge of the prefix, so the
/// uniqueness flag also certifies that the gluing happens along the prefix boundary.
BallCertificate verify_ball(const SimplicialComplex& complex, std::span<const std::size_t> order);

/// 0, 1, ..., facet_count - 1.
std::vector<std::size_t> identity_order(const SimplicialComplex& complex);

}  // namespace srball
