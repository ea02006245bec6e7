#pragma once

// Reduced simplicial homology over a field and graded Betti numbers of
// Stanley-Reisner rings via Hochster's formula.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "srball/complex.hpp"

namespace srball {

/// Characteristic 0 (exact rationals) or a prime p.
struct FieldSpec {
  int characteristic = 0;

  static FieldSpec rationals() { return {0}; }
  static FieldSpec prime(int p);
  [[nodiscard]] std::string name() const;
};

bool is_prime(int p);

/// Sparse integer matrix given column-wise as (row, value) pairs.
struct SparseColumns {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> columns;
};

/// Exact rank over the field. Characteristic 0 uses fraction-free elimination
/// with content reduction in 64-bit arithmetic, redone with big integers if an
/// intermediate would overflow.
std::size_t matrix_rank(const SparseColumns& matrix, FieldSpec field);

/// Reduced Betti numbers of the complex; result[k] is the rank of the reduced
/// homology in dimension k - 1, for k = 0 .. dim + 1. The complex {empty face}
/// has rank 1 in dimension -1; the void complex has all ranks zero.
std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& complex, FieldSpec field);

/// Same, from faces grouped by cardinality (as produced by faces_by_size).
std::vector<std::size_t> reduced_homology_ranks(const std::vector<std::vector<Face>>& levels,
                                                FieldSpec field);

/// Graded Betti numbers beta_{i,j} of S/I over the quotient ring.
class BettiTable {
 public:
  BettiTable() = default;

  void add(int i, int j, std::uint64_t value);
  [[nodiscard]] std::uint64_t get(int i, int j) const;
  /// Largest homological index with a nonzero entry.
  [[nodiscard]] int projective_dimension() const;
  [[nodiscard]] const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return entries_; }
  [[nodiscard]] std::optional<int> min_shift(int i) const;
  [[nodiscard]] std::optional<int> max_shift(int i) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, int>, std::uint64_t> entries_;
};

struct HochsterOptions {
  int max_vertices = 16;
  /// Worker threads for the subset sweep; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// beta_{i,j}(S/I_complex) = sum over |W| = j of dim H~_{j-i-1}(complex restricted to W),
/// over the polynomial ring on every vertex of the universe. Unused vertices enter
/// as linear generators. Throws when the used-vertex count exceeds the cap.
BettiTable hochster_betti_table(const SimplicialComplex& complex, FieldSpec field,
                                const HochsterOptions& options = {});

struct Shifts {
  std::vector<int> min;  ///< m_1 .. m_p
  std::vector<int> max;  ///< M_1 .. M_p
};

/// Per-index minimal and maximal shifts for i = 1..p. Throws "gap in resolution"
/// when some index in that range has no entry.
Shifts shifts(const BettiTable& table);

struct LinearityVerdict {
  bool linear = false;
  std::string reason;
};

/// True iff the ideal is generated in degree m and M_i = m + i - 1 for i = 1..p.
LinearityVerdict has_linear_resolution(const BettiTable& table, int m);

/// Degrees n - j, repeated beta_{n-d, j} times, of the canonical module
/// generators of a Cohen-Macaulay quotient of Krull dimension d on n variables.
std::vector<int> canonical_generator_degrees(const BettiTable& table, int n, int d);

}  // namespace srball
