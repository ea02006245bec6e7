#include "srball/complex.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace srball {

std::string VertexUniverse::label(int v) const {
  if (!labels.empty() && v >= 0 && v < static_cast<int>(labels.size())) return labels[v];
  return std::to_string(v);
}

std::vector<int> SimplicialComplex::unused_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < universe_.size; ++v)
    if (!used_.contains(v)) out.push_back(v);
  return out;
}

int SimplicialComplex::max_facet_size() const {
  int d = 0;
  for (Face f : facets_) d = std::max(d, f.size());
  return d;
}

bool SimplicialComplex::is_pure() const {
  if (facets_.empty()) return true;
  const int s = facets_.front().size();
  return std::all_of(facets_.begin(), facets_.end(), [s](Face f) { return f.size() == s; });
}

bool SimplicialComplex::contains(Face g) const {
  return std::any_of(facets_.begin(), facets_.end(), [g](Face f) { return g.subset_of(f); });
}

std::optional<std::size_t> SimplicialComplex::facet_index(Face f) const {
  auto it = std::lower_bound(facets_.begin(), facets_.end(), f, canonical_less);
  if (it != facets_.end() && *it == f) return static_cast<std::size_t>(it - facets_.begin());
  return std::nullopt;
}

SimplicialComplex SimplicialComplex::from_faces(VertexUniverse universe, std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), [](Face a, Face b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return lex_less(a, b);
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  std::vector<Face> kept;
  for (Face f : faces) {
    const bool absorbed =
        std::any_of(kept.begin(), kept.end(), [f](Face k) { return f.subset_of(k); });
    if (!absorbed) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end(), canonical_less);

  SimplicialComplex c;
  c.universe_ = std::move(universe);
  c.facets_ = std::move(kept);
  for (Face f : c.facets_) c.used_ |= f;
  return c;
}

SimplicialComplex build_complex(std::vector<Face> faces, VertexUniverse universe) {
  if (faces.empty()) throw Error("empty complex");
  if (universe.size < 0 || universe.size > kMaxVertices)
    throw Error("vertex universe must hold at most " + std::to_string(kMaxVertices) + " vertices");
  if (!universe.labels.empty()) {
    if (static_cast<int>(universe.labels.size()) != universe.size)
      throw Error("label count does not match vertex count");
    std::unordered_set<std::string> seen(universe.labels.begin(), universe.labels.end());
    if (seen.size() != universe.labels.size()) throw Error("vertex labels must be distinct");
  }
  const Face all = Face::prefix(universe.size);
  for (Face f : faces)
    if (!f.subset_of(all)) throw Error("vertex out of range");
  return SimplicialComplex::from_faces(std::move(universe), std::move(faces));
}

SimplicialComplex build_complex(const std::vector<std::vector<int>>& facet_sets, int n,
                                std::vector<std::string> labels) {
  if (facet_sets.empty()) throw Error("empty complex");
  if (n < 0 || n > kMaxVertices)
    throw Error("vertex universe must hold at most " + std::to_string(kMaxVertices) + " vertices");
  std::vector<Face> faces;
  faces.reserve(facet_sets.size());
  for (const auto& s : facet_sets) {
    Face f;
    for (int v : s) {
      if (v < 0 || v >= n) throw Error("vertex out of range");
      f.insert(v);
    }
    faces.push_back(f);
  }
  return build_complex(std::move(faces), VertexUniverse{n, std::move(labels)});
}

BigInt HVector::sum() const {
  BigInt s = 0;
  for (const auto& x : entries) s += x;
  return s;
}

HVector make_h(std::initializer_list<long long> values) {
  HVector h;
  for (long long v : values) h.entries.emplace_back(v);
  return h;
}

std::vector<std::vector<Face>> faces_by_size(const SimplicialComplex& complex) {
  if (complex.is_void()) return {};
  const int d = complex.max_facet_size();
  std::vector<std::unordered_set<Face, FaceHash>> levels(static_cast<std::size_t>(d) + 1);
  for (Face f : complex.facets()) levels[f.size()].insert(f);
  for (int k = d; k >= 1; --k) {
    auto& below = levels[k - 1];
    for (Face g : levels[k]) g.for_each([&](int v) { below.insert(g.without(v)); });
  }
  std::vector<std::vector<Face>> out(levels.size());
  for (std::size_t k = 0; k < levels.size(); ++k) {
    out[k].assign(levels[k].begin(), levels[k].end());
    std::sort(out[k].begin(), out[k].end(), lex_less);
  }
  return out;
}

FVector f_vector(const SimplicialComplex& complex) {
  const auto levels = faces_by_size(complex);
  FVector f;
  for (std::size_t k = 1; k < levels.size(); ++k) f.entries.emplace_back(levels[k].size());
  return f;
}

HVector h_vector(const FVector& f, int d) {
  if (d < 0 || static_cast<int>(f.entries.size()) != d)
    throw Error("f-vector length " + std::to_string(f.entries.size()) +
                " does not match d = " + std::to_string(d));
  auto f_shift = [&](int i) -> BigInt { return i == 0 ? BigInt(1) : f.entries[i - 1]; };
  HVector h;
  h.entries.resize(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    BigInt acc = 0;
    for (int i = 0; i <= k; ++i) {
      BigInt term = binomial(d - i, k - i) * f_shift(i);
      if ((k - i) % 2) acc -= term;
      else acc += term;
    }
    h.entries[k] = acc;
  }
  return h;
}

FVector f_from_h(const HVector& h) {
  const int d = static_cast<int>(h.entries.size()) - 1;
  FVector f;
  for (int k = 1; k <= d; ++k) {
    BigInt acc = 0;
    for (int i = 0; i <= k; ++i) acc += binomial(d - i, k - i) * h.entries[i];
    f.entries.push_back(acc);
  }
  return f;
}

MinimalNonfaces minimal_nonfaces(const SimplicialComplex& complex) {
  MinimalNonfaces out;
  if (complex.is_void()) return out;
  const Face used = complex.used_vertices();
  if (complex.facet_count() == 1 && complex.facet(0) == used) return out;

  const auto levels = faces_by_size(complex);
  const int d = static_cast<int>(levels.size()) - 1;
  std::vector<std::unordered_set<Face, FaceHash>> sets(levels.size());
  for (std::size_t k = 0; k < levels.size(); ++k) sets[k].insert(levels[k].begin(), levels[k].end());
  const std::vector<int> verts = used.vertices();

  // A minimal nonface N of size k+1 has every k-subset a face, in particular
  // N minus its largest vertex; so extend each k-face by larger vertices.
  for (int k = 1; k <= d; ++k) {
    for (Face g : levels[k]) {
      const int top = g.max_vertex();
      for (int v : verts) {
        if (v <= top) continue;
        const Face cand = g.with(v);
        if (k + 1 <= d && sets[k + 1].count(cand)) continue;
        bool all_faces = true;
        g.for_each([&](int u) {
          if (all_faces && !sets[k].count(cand.without(u))) all_faces = false;
        });
        if (all_faces) out.faces.push_back(cand);
      }
    }
  }
  std::sort(out.faces.begin(), out.faces.end(), canonical_less);
  if (!out.faces.empty()) out.min_size = out.faces.front().size();
  return out;
}

SimplicialComplex boundary_complex(const SimplicialComplex& complex) {
  if (!complex.is_pure()) throw Error("not pure");
  std::unordered_map<Face, int, FaceHash> ridge_count;
  for (Face f : complex.facets()) {
    f.for_each([&](int v) {
      if (++ridge_count[f.without(v)] >= 3) throw Error("not a pseudomanifold");
    });
  }
  std::vector<Face> ridges;
  for (const auto& [r, c] : ridge_count)
    if (c == 1) ridges.push_back(r);
  return SimplicialComplex::from_faces(complex.universe(), std::move(ridges));
}

std::vector<Face> minimal_inside_faces(const SimplicialComplex& complex) {
  const SimplicialComplex boundary = boundary_complex(complex);
  if (boundary.is_void()) throw Error("no boundary (sphere input?)");

  const auto levels = faces_by_size(complex);
  std::vector<Face> minimal;
  std::unordered_set<Face, FaceHash> inside_prev;
  for (const auto& level : levels) {
    std::unordered_set<Face, FaceHash> inside_here;
    for (Face g : level) {
      if (boundary.contains(g)) continue;
      inside_here.insert(g);
      bool minimal_here = true;
      g.for_each([&](int v) {
        if (minimal_here && inside_prev.count(g.without(v))) minimal_here = false;
      });
      if (minimal_here) minimal.push_back(g);
    }
    inside_prev = std::move(inside_here);
  }
  std::sort(minimal.begin(), minimal.end(), canonical_less);
  return minimal;
}

BigInt multiplicity(const SimplicialComplex& complex) {
  if (complex.is_void()) throw Error("multiplicity of the void complex is undefined");
  if (!complex.is_pure()) throw Error("not pure");
  const BigInt e = complex.facet_count();
  const HVector h = h_vector(f_vector(complex), complex.max_facet_size());
  if (h.sum() != e) throw Error("sum of h-vector differs from facet count");
  return e;
}

HVector boundary_h_from_h(const HVector& h, int d) {
  if (static_cast<int>(h.entries.size()) != d + 1)
    throw Error("h-vector length does not match d + 1");
  HVector out;
  BigInt head = 0;
  BigInt tail = 0;
  for (int j = 0; j < d; ++j) {
    head += h.entries[j];
    tail += h.entries[d - j];
    out.entries.push_back(head - tail);
  }
  return out;
}

VectorProfile vector_profile(const HVector& h) {
  const auto& a = h.entries;
  const std::size_t n = a.size();
  VectorProfile p;
  p.symmetric = true;
  for (std::size_t i = 0; i < n / 2; ++i)
    if (a[i] != a[n - 1 - i]) p.symmetric = false;
  std::size_t i = 0;
  while (i + 1 < n && a[i] <= a[i + 1]) ++i;
  while (i + 1 < n && a[i] >= a[i + 1]) ++i;
  p.unimodal = n == 0 || i == n - 1;
  return p;
}

}  // namespace srball
