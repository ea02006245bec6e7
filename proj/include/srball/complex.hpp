#pragma once

// Abstract simplicial complexes given by their facets, together with the
// face-counting and boundary machinery the rest of the library builds on.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srball/error.hpp"
#include "srball/exact.hpp"
#include "srball/face.hpp"

namespace srball {

struct VertexUniverse {
  int size = 0;
  /// Empty, or exactly `size` distinct display labels.
  std::vector<std::string> labels;

  [[nodiscard]] std::string label(int v) const;
};

/// A simplicial complex stored as its inclusion-maximal faces.
///
/// Facets are kept in canonical order (size, then lexicographic). A complex
/// with no facets at all is the void complex; it only arises internally, for
/// example as the boundary of a sphere.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  [[nodiscard]] const VertexUniverse& universe() const { return universe_; }
  [[nodiscard]] int vertex_count() const { return universe_.size; }
  [[nodiscard]] std::span<const Face> facets() const { return facets_; }
  [[nodiscard]] std::size_t facet_count() const { return facets_.size(); }
  [[nodiscard]] const Face& facet(std::size_t i) const { return facets_.at(i); }

  [[nodiscard]] bool is_void() const { return facets_.empty(); }
  [[nodiscard]] Face used_vertices() const { return used_; }
  [[nodiscard]] std::vector<int> unused_vertices() const;

  /// d = largest facet cardinality (so dim = d - 1).
  [[nodiscard]] int max_facet_size() const;
  [[nodiscard]] int dimension() const { return max_facet_size() - 1; }
  [[nodiscard]] bool is_pure() const;

  /// Membership test: g lies in some facet.
  [[nodiscard]] bool contains(Face g) const;
  /// Index of `f` among the facets, if it is one.
  [[nodiscard]] std::optional<std::size_t> facet_index(Face f) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.universe_.size == b.universe_.size && a.facets_ == b.facets_;
  }

  /// Keeps the inclusion-maximal members of `faces`; no validation beyond that.
  static SimplicialComplex from_faces(VertexUniverse universe, std::vector<Face> faces);

 private:
  VertexUniverse universe_;
  std::vector<Face> facets_;
  Face used_;
};

/// Builds a complex on {0..n-1} from arbitrary generating sets.
/// Throws "empty complex" or "vertex out of range".
SimplicialComplex build_complex(const std::vector<std::vector<int>>& facet_sets, int n,
                                std::vector<std::string> labels = {});

/// Same, from faces over an explicit universe.
SimplicialComplex build_complex(std::vector<Face> faces, VertexUniverse universe);

struct FVector {
  /// entries[i] = f_i, the number of i-dimensional faces; f_{-1} = 1 is implicit.
  std::vector<BigInt> entries;
  friend bool operator==(const FVector&, const FVector&) = default;
};

struct HVector {
  std::vector<BigInt> entries;
  [[nodiscard]] BigInt sum() const;
  friend bool operator==(const HVector&, const HVector&) = default;
};

HVector make_h(std::initializer_list<long long> values);

/// All faces grouped by cardinality: result[k] holds the faces with k vertices,
/// each level sorted canonically. Memory is one mask per face.
std::vector<std::vector<Face>> faces_by_size(const SimplicialComplex& complex);

FVector f_vector(const SimplicialComplex& complex);

/// h_k = sum_{i<=k} (-1)^{k-i} C(d-i, k-i) f_{i-1}; requires f to have d entries.
HVector h_vector(const FVector& f, int d);

/// f_{k-1} = sum_{i<=k} C(d-i, k-i) h_i, the inverse transform.
FVector f_from_h(const HVector& h);

struct MinimalNonfaces {
  std::vector<Face> faces;
  /// Smallest nonface cardinality m; empty when the complex is a full simplex.
  std::optional<int> min_size;
};

/// Inclusion-minimal subsets of the used vertices that are not faces
/// (the minimal generators of the Stanley-Reisner ideal).
MinimalNonfaces minimal_nonfaces(const SimplicialComplex& complex);

/// Boundary of a pure pseudomanifold with boundary: the complex generated by
/// ridges lying in exactly one facet. Returns the void complex for closed
/// pseudomanifolds. Throws "not pure" / "not a pseudomanifold".
SimplicialComplex boundary_complex(const SimplicialComplex& complex);

/// Inclusion-minimal faces not on the boundary. Throws when the boundary is void.
std::vector<Face> minimal_inside_faces(const SimplicialComplex& complex);

/// Number of facets of a pure complex, cross-checked against sum(h).
BigInt multiplicity(const SimplicialComplex& complex);

/// h-vector of the boundary sphere of a ball with h-vector h (d+1 entries).
HVector boundary_h_from_h(const HVector& h, int d);

struct VectorProfile {
  bool symmetric = false;
  bool unimodal = false;
};

VectorProfile vector_profile(const HVector& h);

}  // namespace srball
