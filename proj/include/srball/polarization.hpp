#pragma once

// Polarization of powers of the graded maximal ideal and the ball whose
// Stanley-Reisner ideal is that polarization.

#include <string>
#include <vector>

#include "srball/complex.hpp"
#include "srball/shelling.hpp"

namespace srball {

/// x^a for an exponent vector a.
struct Monomial {
  std::vector<int> exponents;
  [[nodiscard]] int degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Vertex index of x_{ij} on the n x t grid: (i-1) t + (j-1).
inline int polar_index(int i, int j, int t) { return (i - 1) * t + (j - 1); }

/// Labels "x<i>_<j>" for the n x t grid.
VertexUniverse polar_universe(int n, int t);

/// Support {x_ij : j <= a_i}. Throws "grid too small" if some a_i > t.
Face polarize(const Monomial& u, int t);

/// All a with sum a <= t - 1, by total degree and then lexicographically descending.
std::vector<Monomial> multicomplex_facets(int n, int t);

/// {x_ij : j != a_i + 1}.
Face theta(const Monomial& a, int t);

/// The monomials of degree t in n variables.
std::vector<Monomial> power_monomials(int n, int t);

struct PolarComplex {
  int n = 0;
  int t = 0;
  SimplicialComplex complex;
  std::vector<Monomial> gamma;     ///< multicomplex facets in shelling order
  std::vector<std::size_t> order;  ///< complex facet index of theta(gamma[k])
};

PolarComplex power_ideal_complex(int n, int t);

struct PolarCertificate {
  bool theta_injective = false;
  bool facet_count_ok = false;    ///< C(n+t-1, n) facets
  bool nonfaces_match = false;    ///< minimal nonfaces = polarized generators of m^t
  BallCertificate ball;
  /// Each glued ridge F \ {x_ij} lies in theta(a with a_i replaced by j-1) only.
  bool glued_ridges_are_neighbors = true;
  /// F \ {x_qt} with q the first index having a_q < t-1 stays unglued.
  bool free_ridge_found = true;
  std::string witness;
};

PolarCertificate certify_polar(const PolarComplex& pc);

}  // namespace srball
