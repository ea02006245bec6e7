#pragma once

// Plain-text complex files:
//
//   n=<int>
//   labels=<comma-separated>      (optional)
//   order=<comma-separated>       (optional; indices into the facet lines below)
//   <facet as space-separated vertex indices>
//   ...
//
// Lines starting with '#' are comments. The empty facet is written as "{}".

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "srball/complex.hpp"

namespace srball {

struct ComplexFile {
  SimplicialComplex complex;
  /// Facet order in terms of `complex.facets()` indices, when the file has one.
  std::optional<std::vector<std::size_t>> order;
  /// Facets in the order their lines appear (duplicates and absorbed faces skipped).
  std::vector<std::size_t> listing;
  std::vector<std::string> comments;
};

/// Canonical writer: facets in canonical order, `order` (if given) refers to them.
void write_complex(std::ostream& out, const SimplicialComplex& complex,
                   const std::vector<std::size_t>* order = nullptr,
                   const std::vector<std::string>& comments = {});

std::string complex_to_string(const SimplicialComplex& complex,
                              const std::vector<std::size_t>* order = nullptr);

/// Reader; facets may appear in any order.
ComplexFile read_complex(std::istream& in);
ComplexFile read_complex_file(const std::string& path);

}  // namespace srball
