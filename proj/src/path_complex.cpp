#include "srball/path_complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>
#include <unordered_map>

namespace srball {

VertexUniverse GridPoset::universe() const {
  VertexUniverse u{m * n, {}};
  u.labels.reserve(static_cast<std::size_t>(m * n));
  for (int v = 0; v < m * n; ++v) {
    const GridPoint p = point(v);
    u.labels.push_back("X" + std::to_string(p.i) + "_" + std::to_string(p.j));
  }
  return u;
}

MinorSpec MinorSpec::leading(int m, int n, int r) {
  MinorSpec s{m, n, {}, {}};
  for (int k = 1; k <= r; ++k) {
    s.a.push_back(k);
    s.b.push_back(k);
  }
  return s;
}

void MinorSpec::validate() const {
  if (m < 1 || n < 1) throw Error("matrix shape must be positive");
  if (m > n) throw Error("need m <= n");
  if (m * n > kMaxVertices) throw Error("grid has more than 128 points");
  if (a.size() != b.size()) throw Error("sigma needs as many rows as columns");
  if (a.empty()) throw Error("sigma must be nonempty");
  if (r() > m) throw Error("r exceeds m");
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] < 1 || a[k] > m) throw Error("row index of sigma out of range");
    if (b[k] < 1 || b[k] > n) throw Error("column index of sigma out of range");
    if (k > 0 && (a[k] <= a[k - 1] || b[k] <= b[k - 1])) throw Error("sigma indices must increase");
  }
}

int MinorSpec::facet_size() const {
  int s = r() * (m + n + 1);
  for (std::size_t k = 0; k < a.size(); ++k) s -= a[k] + b[k];
  return s;
}

std::string MinorSpec::describe() const {
  std::ostringstream os;
  os << "m=" << m << " n=" << n << " sigma=";
  for (std::size_t k = 0; k < a.size(); ++k) os << (k ? "," : "") << a[k];
  os << '|';
  for (std::size_t k = 0; k < b.size(); ++k) os << (k ? "," : "") << b[k];
  return os.str();
}

bool LatticePath::contains(GridPoint p) const {
  return std::find(points.begin(), points.end(), p) != points.end();
}

std::vector<GridPoint> LatticePath::corners() const {
  std::vector<GridPoint> out;
  for (std::size_t s = 1; s + 1 < points.size(); ++s) {
    const GridPoint p = points[s];
    if (points[s - 1] == GridPoint{p.i - 1, p.j} && points[s + 1] == GridPoint{p.i, p.j - 1}) out.push_back(p);
  }
  return out;
}

PathFamily make_family(const GridPoset& grid, std::vector<LatticePath> paths) {
  PathFamily f;
  f.paths = std::move(paths);
  std::size_t total = 0;
  for (const auto& path : f.paths) {
    for (GridPoint p : path.points) {
      if (!grid.contains(p)) throw Error("path leaves the grid");
      f.face.insert(grid.index(p));
    }
    total += path.points.size();
    for (GridPoint c : path.corners()) f.corner_set.insert(grid.index(c));
  }
  if (static_cast<std::size_t>(f.face.size()) != total) throw Error("paths intersect");
  return f;
}

LatticePath path_from_corners(GridPoint start, GridPoint end, std::vector<GridPoint> corners) {
  std::sort(corners.begin(), corners.end());
  LatticePath path;
  GridPoint cur = start;
  path.points.push_back(cur);
  auto walk_left = [&](int column) {
    if (column > cur.j) throw Error("corners do not describe a path");
    while (cur.j > column) {
      --cur.j;
      path.points.push_back(cur);
    }
  };
  auto walk_down = [&](int row) {
    if (row < cur.i) throw Error("corners do not describe a path");
    while (cur.i < row) {
      ++cur.i;
      path.points.push_back(cur);
    }
  };
  for (GridPoint c : corners) {
    // A corner is entered from above and left to the left.
    walk_left(c.j);
    if (c.i <= cur.i) throw Error("corners do not describe a path");
    walk_down(c.i);
    if (cur.j <= end.j) throw Error("corners do not describe a path");
    --cur.j;
    path.points.push_back(cur);
  }
  walk_left(end.j);
  walk_down(end.i);
  auto got = path.corners();
  if (got != corners) throw Error("corners do not describe a path");
  return path;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct Enumerator {
  const MinorSpec& spec;
  GridPoset grid;
  std::size_t cap;
  std::vector<LatticePath> current;
  Face occupied;
  std::vector<PathFamily> out;

  void path(std::size_t k) {
    if (k == current.size()) {
      if (out.size() >= cap)
        throw Error("facet cap of " + std::to_string(cap) + " exceeded after " + std::to_string(out.size()) +
                    " facets");
      out.push_back(make_family(grid, current));
      return;
    }
    const GridPoint start{spec.a[k], spec.n};
    if (occupied.contains(grid.index(start))) return;
    current[k].points.assign(1, start);
    occupied.insert(grid.index(start));
    step(k, start);
    occupied.erase(grid.index(start));
  }

  void step(std::size_t k, GridPoint cur) {
    const GridPoint end{spec.m, spec.b[k]};
    if (cur == end) {
      path(k + 1);
      return;
    }
    const GridPoint next[2] = {{cur.i, cur.j - 1}, {cur.i + 1, cur.j}};
    for (GridPoint p : next) {
      if (p.i > end.i || p.j < end.j) continue;
      const int v = grid.index(p);
      if (occupied.contains(v)) continue;
      occupied.insert(v);
      current[k].points.push_back(p);
      step(k, p);
      current[k].points.pop_back();
      occupied.erase(v);
    }
  }
};

}  // namespace

std::vector<PathFamily> enumerate_facets(const MinorSpec& spec, const EnumerationOptions& options) {
  spec.validate();
  Enumerator e{spec, spec.grid(), options.max_facets, std::vector<LatticePath>(spec.a.size()), Face{}, {}};
  e.path(0);
  std::sort(e.out.begin(), e.out.end(), [](const PathFamily& x, const PathFamily& y) { return lex_less(x.face, y.face); });
  const int size = spec.facet_size();
  for (std::size_t i = 0; i < e.out.size(); ++i) {
    if (e.out[i].face.size() != size) throw Error("facet cardinality differs from r(m+n+1) - sum(a+b)");
    if (i > 0 && e.out[i].face == e.out[i - 1].face) throw Error("two path families share a vertex set");
  }
  return std::move(e.out);
}

std::vector<GridPoint> corners(const PathFamily& family) {
  std::vector<GridPoint> out;
  for (const auto& p : family.paths)
    for (GridPoint c : p.corners()) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Flips

namespace {

bool flippable_at(const LatticePath& path, std::size_t s, const std::vector<GridPoint>& path_corners) {
  if (s == 0 || s + 1 >= path.points.size()) return false;
  const GridPoint v = path.points[s];
  const GridPoint right{v.i, v.j + 1};
  const GridPoint below{v.i + 1, v.j};
  if (path.points[s - 1] != right || path.points[s + 1] != below) return false;
  auto is_corner = [&](GridPoint p) {
    return std::find(path_corners.begin(), path_corners.end(), p) != path_corners.end();
  };
  return !is_corner(right) && !is_corner(below);
}

}  // namespace

LatticePath flip(const LatticePath& path, GridPoint v) {
  const auto cs = path.corners();
  auto it = std::find(path.points.begin(), path.points.end(), v);
  const auto s = static_cast<std::size_t>(it - path.points.begin());
  if (it == path.points.end() || !flippable_at(path, s, cs))
    throw Error("not flippable at (" + std::to_string(v.i) + "," + std::to_string(v.j) + ")");
  LatticePath out = path;
  out.points[s] = {v.i + 1, v.j + 1};
  const auto after = out.corners();
  const bool grows = after.size() > cs.size() &&
                     std::all_of(cs.begin(), cs.end(), [&](GridPoint c) {
                       return std::find(after.begin(), after.end(), c) != after.end();
                     });
  if (!grows) throw Error("flip did not enlarge the corner set");
  return out;
}

std::vector<GridPoint> flip_points(const LatticePath& path) {
  const auto cs = path.corners();
  std::vector<GridPoint> out;
  for (std::size_t s = 1; s + 1 < path.points.size(); ++s)
    if (flippable_at(path, s, cs)) out.push_back(path.points[s]);
  return out;
}

bool path_is_non_flippable(const LatticePath& path) { return flip_points(path).empty(); }

bool is_non_flippable(const GridPoset& grid, const PathFamily& family) {
  for (const auto& path : family.paths)
    for (GridPoint v : flip_points(path))
      if (!family.face.contains(grid.index({v.i + 1, v.j + 1}))) return false;
  return true;
}

std::vector<PathFamily> facet_flips(const GridPoset& grid, const PathFamily& family) {
  std::vector<PathFamily> out;
  for (std::size_t k = 0; k < family.paths.size(); ++k)
    for (GridPoint v : flip_points(family.paths[k])) {
      if (family.face.contains(grid.index({v.i + 1, v.j + 1}))) continue;
      std::vector<LatticePath> paths = family.paths;
      paths[k] = flip(paths[k], v);
      out.push_back(make_family(grid, std::move(paths)));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Facet order

namespace {

/// Per path, reach[x] = smallest column among points in rows <= x.
using Reach = std::vector<std::vector<int>>;

Reach reach_of(const PathFamily& f) {
  Reach out;
  for (const auto& path : f.paths) {
    int rows = 0;
    for (GridPoint p : path.points) rows = std::max(rows, p.i);
    std::vector<int> best(static_cast<std::size_t>(rows) + 2, std::numeric_limits<int>::max());
    for (GridPoint p : path.points) best[static_cast<std::size_t>(p.i)] = std::min(best[static_cast<std::size_t>(p.i)], p.j);
    for (std::size_t x = 1; x < best.size(); ++x) best[x] = std::min(best[x], best[x - 1]);
    out.push_back(std::move(best));
  }
  return out;
}

bool leq_with(const Reach& lower, const PathFamily& upper) {
  for (std::size_t k = 0; k < upper.paths.size(); ++k) {
    const auto& best = lower[k];
    for (GridPoint p : upper.paths[k].points) {
      const auto x = std::min(static_cast<std::size_t>(p.i), best.size() - 1);
      if (best[x] > p.j) return false;
    }
  }
  return true;
}

}  // namespace

FacetOrder::FacetOrder(const std::vector<PathFamily>& facets) : n_(facets.size()), words_((n_ + 63) / 64) {
  bits_.assign(n_ * words_, 0);
  std::vector<Reach> reach;
  reach.reserve(n_);
  for (const auto& f : facets) {
    if (f.paths.size() != facets.front().paths.size()) throw Error("facets come from different specs");
    reach.push_back(reach_of(f));
  }
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b) {
      const bool ab = leq_with(reach[a], facets[b]);
      const bool ba = leq_with(reach[b], facets[a]);
      if (ab && ba) throw Error("facet order is not antisymmetric");
      if (ab) bits_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
      if (ba) bits_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
    }
  rank_.resize(n_);
  std::vector<std::size_t> idx(n_);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return lex_less(facets[x].face, facets[y].face); });
  for (std::size_t i = 0; i < n_; ++i) rank_[idx[i]] = i;
}

std::vector<std::size_t> FacetOrder::extension(const std::function<std::size_t(const std::vector<std::size_t>&)>& pick) const {
  std::vector<std::size_t> indegree(n_, 0);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t w = 0; w < words_; ++w)
      for (std::uint64_t bits = bits_[a * words_ + w]; bits; bits &= bits - 1)
        ++indegree[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
  std::vector<std::size_t> ready;
  for (std::size_t b = 0; b < n_; ++b)
    if (indegree[b] == 0) ready.push_back(b);
  std::vector<std::size_t> order;
  order.reserve(n_);
  while (!ready.empty()) {
    const std::size_t pos = pick(ready);
    const std::size_t a = ready[pos];
    ready[pos] = ready.back();
    ready.pop_back();
    order.push_back(a);
    for (std::size_t w = 0; w < words_; ++w)
      for (std::uint64_t bits = bits_[a * words_ + w]; bits; bits &= bits - 1) {
        const std::size_t b = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        if (--indegree[b] == 0) ready.push_back(b);
      }
  }
  if (order.size() != n_) throw Error("facet order has a cycle");
  return order;
}

std::vector<std::size_t> FacetOrder::lex_extension() const {
  return extension([&](const std::vector<std::size_t>& ready) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < ready.size(); ++i)
      if (rank_[ready[i]] < rank_[ready[best]]) best = i;
    return best;
  });
}

std::vector<std::size_t> FacetOrder::random_extension(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  return extension([&](const std::vector<std::size_t>& ready) {
    return std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng);
  });
}

bool FacetOrder::respects(const std::vector<std::size_t>& order) const {
  if (order.size() != n_) return false;
  std::vector<std::size_t> pos(n_, n_);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= n_ || pos[order[i]] != n_) return false;
    pos[order[i]] = i;
  }
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (less(a, b) && pos[a] > pos[b]) return false;
  return true;
}

bool facet_leq(const PathFamily& f1, const PathFamily& f2) {
  if (f1.paths.size() != f2.paths.size()) throw Error("facets come from different specs");
  for (std::size_t k = 0; k < f1.paths.size(); ++k)
    if (f1.paths[k].points.front() != f2.paths[k].points.front() ||
        f1.paths[k].points.back() != f2.paths[k].points.back())
      throw Error("facets come from different specs");
  return leq_with(reach_of(f1), f2);
}

std::vector<std::size_t> shelling_order(const std::vector<PathFamily>& facets) {
  return FacetOrder(facets).lex_extension();
}

std::vector<std::size_t> random_linear_extension(const std::vector<PathFamily>& facets, std::uint64_t seed) {
  return FacetOrder(facets).random_extension(seed);
}

SimplicialComplex build_path_complex(const GridPoset& grid, const std::vector<PathFamily>& facets) {
  std::vector<Face> faces;
  faces.reserve(facets.size());
  for (const auto& f : facets) faces.push_back(f.face);
  return build_complex(std::move(faces), grid.universe());
}

// ---------------------------------------------------------------------------
// Corner invariants

std::vector<CanonicalGenerator> canonical_generators(const GridPoset& grid, const std::vector<PathFamily>& facets) {
  std::vector<CanonicalGenerator> out;
  for (const auto& f : facets)
    if (is_non_flippable(grid, f)) {
      const Face g = f.face - f.corner_set;
      out.push_back({g, g.size()});
    }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return canonical_less(x.face, y.face); });
  out.erase(std::unique(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.face == y.face; }),
            out.end());
  return out;
}

std::vector<int> corner_spectrum(const GridPoset& grid, const std::vector<PathFamily>& facets) {
  std::vector<int> out;
  for (const auto& f : facets)
    if (is_non_flippable(grid, f)) out.push_back(f.corner_count());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PathFamily construct_nonflippable(int m, int n, int r, int t) {
  if (r < 1 || r > m - 1 || m > n) throw Error("need 1 <= r <= m - 1 <= n - 1");
  if (t < r || t > r * (m - r))
    throw Error("t = " + std::to_string(t) + " outside [" + std::to_string(r) + ", " + std::to_string(r * (m - r)) + "]");
  const int step = m - r - 1;
  const int p = step == 0 ? 0 : (t - r) / step;
  const int q = step == 0 ? 0 : (t - r) % step;

  std::vector<std::vector<GridPoint>> corner_lists(static_cast<std::size_t>(r) + 1);
  // The last p paths carry m - r corners each, running down an anti-diagonal.
  for (int k = 0; k < p; ++k)
    for (int s = 0; s <= m - r - 1; ++s) corner_lists[static_cast<std::size_t>(r - k)].push_back({r - k + 1 + s, n - k - 1 - s});
  if (p < r)
    for (int s = 0; s <= q; ++s) corner_lists[static_cast<std::size_t>(r - p)].push_back({r - p + 1 + s, r - p + 1 + q - s});
  for (int i = 1; i <= r - p - 1; ++i) corner_lists[static_cast<std::size_t>(i)].push_back({i + 1, i + 1});

  const GridPoset grid{m, n};
  std::vector<LatticePath> paths;
  for (int i = 1; i <= r; ++i)
    paths.push_back(path_from_corners({i, n}, {m, i}, corner_lists[static_cast<std::size_t>(i)]));
  PathFamily f = make_family(grid, std::move(paths));
  if (f.corner_count() != t) throw Error("construction produced the wrong corner count");
  if (!is_non_flippable(grid, f)) throw Error("construction produced a flippable facet");
  return f;
}

HVector h_via_corners(const std::vector<PathFamily>& facets, int d) {
  HVector h;
  h.entries.assign(static_cast<std::size_t>(d) + 1, 0);
  for (const auto& f : facets) {
    const auto c = static_cast<std::size_t>(f.corner_count());
    if (c >= h.entries.size()) throw Error("corner count exceeds d");
    h.entries[c] += 1;
  }
  return h;
}

std::vector<Face> sr_generators(const MinorSpec& spec) {
  spec.validate();
  const GridPoset grid = spec.grid();
  std::vector<Face> diagonals;
  // Minors [c|e] of size s; [c|e] >= sigma iff s <= r and c_k >= a_k, e_k >= b_k for k <= s.
  for (int s = 1; s <= spec.m; ++s) {
    std::vector<int> rows(static_cast<std::size_t>(s));
    std::vector<int> cols(static_cast<std::size_t>(s));
    std::vector<bool> row_pick(static_cast<std::size_t>(spec.m), false);
    std::fill(row_pick.begin(), row_pick.begin() + s, true);
    do {
      for (int i = 0, k = 0; i < spec.m; ++i)
        if (row_pick[static_cast<std::size_t>(i)]) rows[static_cast<std::size_t>(k++)] = i + 1;
      std::vector<bool> col_pick(static_cast<std::size_t>(spec.n), false);
      std::fill(col_pick.begin(), col_pick.begin() + s, true);
      do {
        for (int j = 0, k = 0; j < spec.n; ++j)
          if (col_pick[static_cast<std::size_t>(j)]) cols[static_cast<std::size_t>(k++)] = j + 1;
        bool above = s <= spec.r();
        for (int k = 0; above && k < s; ++k)
          above = rows[static_cast<std::size_t>(k)] >= spec.a[static_cast<std::size_t>(k)] &&
                  cols[static_cast<std::size_t>(k)] >= spec.b[static_cast<std::size_t>(k)];
        if (!above) {
          Face d;
          for (int k = 0; k < s; ++k) d.insert(grid.index({rows[static_cast<std::size_t>(k)], cols[static_cast<std::size_t>(k)]}));
          diagonals.push_back(d);
        }
      } while (std::prev_permutation(col_pick.begin(), col_pick.end()));
    } while (std::prev_permutation(row_pick.begin(), row_pick.end()));
  }
  std::sort(diagonals.begin(), diagonals.end(), canonical_less);
  diagonals.erase(std::unique(diagonals.begin(), diagonals.end()), diagonals.end());
  std::vector<Face> minimal;
  for (Face d : diagonals)
    if (std::none_of(minimal.begin(), minimal.end(), [&](Face g) { return g.subset_of(d); })) minimal.push_back(d);
  return minimal;
}

bool boundary_via_corners(const std::vector<PathFamily>& ordered, std::size_t i, Face g) {
  if (i > ordered.size()) throw Error("prefix longer than the facet list");
  bool member = false;
  for (std::size_t k = 0; k < i; ++k) {
    const PathFamily& f = ordered[k];
    if (!g.subset_of(f.face)) continue;
    member = true;
    if ((f.face - g).subset_of(f.corner_set)) return false;
  }
  return member;
}

// ---------------------------------------------------------------------------
// Lemma checks

LemmaCheck check_late(const std::vector<PathFamily>& ordered) {
  LemmaCheck out;
  std::vector<int> hits(kMaxVertices);
  for (std::size_t k = 0; k < ordered.size(); ++k) {
    const PathFamily& f = ordered[k];
    std::fill(hits.begin(), hits.end(), 0);
    for (std::size_t l = 0; l < k; ++l) {
      const Face diff = f.face - ordered[l].face;
      if (diff.size() == 1) ++hits[static_cast<std::size_t>(diff.min_vertex())];
    }
    f.face.for_each([&](int v) {
      ++out.cases;
      const int h = hits[static_cast<std::size_t>(v)];
      const bool ok = (h > 0) == f.corner_set.contains(v) && h <= 1;
      if (!ok && out.holds) {
        out.holds = false;
        out.witness = "step " + std::to_string(k + 1) + ", vertex " + std::to_string(v) + ": " +
                      std::to_string(h) + " earlier facets";
      }
    });
  }
  return out;
}

FunCheck check_fun(const GridPoset& grid, const std::vector<PathFamily>& facets) {
  const std::size_t n = facets.size();
  std::unordered_map<Face, std::size_t, FaceHash> index;
  for (std::size_t x = 0; x < n; ++x) index.emplace(facets[x].face, x);

  // Flips strictly enlarge the corner set, so reachability closes in order of
  // decreasing corner count.
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> reach(n * words, 0);
  std::vector<std::size_t> by_corners(n);
  std::iota(by_corners.begin(), by_corners.end(), std::size_t{0});
  std::sort(by_corners.begin(), by_corners.end(),
            [&](std::size_t x, std::size_t y) { return facets[x].corner_count() > facets[y].corner_count(); });
  for (std::size_t x : by_corners) {
    std::uint64_t* row = &reach[x * words];
    row[x / 64] |= std::uint64_t{1} << (x % 64);
    for (const PathFamily& g : facet_flips(grid, facets[x])) {
      const auto it = index.find(g.face);
      if (it == index.end()) throw Error("a flip left the facet list");
      const std::uint64_t* other = &reach[it->second * words];
      for (std::size_t w = 0; w < words; ++w) row[w] |= other[w];
    }
  }

  FunCheck out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const PathFamily& f = facets[x];
      const PathFamily& g = facets[y];
      const bool a = f.corner_set.subset_of(g.corner_set);
      const bool b = (g.face - g.corner_set).subset_of(f.face - f.corner_set);
      const bool reachable = (reach[x * words + y / 64] >> (y % 64)) & 1;
      ++out.biconditional.cases;
      ++out.flip_reachability.cases;
      out.a_without_b += a && !b;
      out.b_without_a += b && !a;
      const std::string pair = "facets " + std::to_string(x) + " and " + std::to_string(y);
      if (a != b && out.biconditional.holds) {
        out.biconditional.holds = false;
        out.biconditional.witness = pair;
      }
      if (b != reachable && out.flip_reachability.holds) {
        out.flip_reachability.holds = false;
        out.flip_reachability.witness = pair;
      }
    }
  return out;
}

LemmaCheck check_nonflippable_maximality(const GridPoset& grid, const std::vector<PathFamily>& facets) {
  LemmaCheck out;
  for (std::size_t x = 0; x < facets.size(); ++x) {
    ++out.cases;
    const bool maximal = std::none_of(facets.begin(), facets.end(), [&](const PathFamily& g) {
      return !(g == facets[x]) && facets[x].corner_set.subset_of(g.corner_set);
    });
    if (maximal != is_non_flippable(grid, facets[x]) && out.holds) {
      out.holds = false;
      out.witness = "facet " + std::to_string(x) + (maximal ? " has maximal corners but flips"
                                                             : " is non-flippable but its corners are not maximal");
    }
  }
  return out;
}

std::string render_family(const GridPoset& grid, const PathFamily& family) {
  std::string out;
  for (int i = 1; i <= grid.m; ++i) {
    for (int j = 1; j <= grid.n; ++j) {
      const int v = grid.index({i, j});
      out += family.corner_set.contains(v) ? 'c' : family.face.contains(v) ? '*' : '.';
    }
    out += '\n';
  }
  return out;
}

}  // namespace srball
