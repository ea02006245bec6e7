#pragma once

// Conversions between library types and the oracle's plain vertex lists.

#include <map>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "srball/complex.hpp"
#include "srball/homology.hpp"

namespace support {

inline oracle::Set to_set(srball::Face f) { return f.vertices(); }

inline std::vector<oracle::Set> to_sets(const std::vector<srball::Face>& faces) {
  std::vector<oracle::Set> out;
  for (auto f : faces) out.push_back(f.vertices());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<oracle::Set> facets_of(const srball::SimplicialComplex& c) {
  return to_sets({c.facets().begin(), c.facets().end()});
}

inline srball::SimplicialComplex complex_of(const std::vector<oracle::Set>& facets, int n) {
  return srball::build_complex(facets, n);
}

inline std::vector<long long> to_ll(const srball::FVector& f) {
  std::vector<long long> out;
  for (const auto& x : f.entries) out.push_back(static_cast<long long>(x));
  return out;
}

inline std::vector<long long> to_ll(const srball::HVector& h) {
  std::vector<long long> out;
  for (const auto& x : h.entries) out.push_back(static_cast<long long>(x));
  return out;
}

inline std::map<std::pair<int, int>, long long> to_map(const srball::BettiTable& t) {
  std::map<std::pair<int, int>, long long> out;
  for (const auto& [k, v] : t.entries()) out[k] = static_cast<long long>(v);
  return out;
}

/// Face indices of `order` applied to the complex's facets.
inline std::vector<oracle::Set> ordered_sets(const srball::SimplicialComplex& c, const std::vector<std::size_t>& order) {
  std::vector<oracle::Set> out;
  for (auto i : order) out.push_back(c.facet(i).vertices());
  return out;
}

}  // namespace support
