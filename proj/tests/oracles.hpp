#pragma once

// Brute-force reference implementations. They share no code with the library:
// sets are sorted std::vector<int>, everything is enumerated literally, and
// linear algebra is dense Gaussian elimination over exact rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Set = std::vector<int>;
using Big = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;

inline bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline Set bits_to_set(std::uint64_t bits) {
  Set s;
  for (int v = 0; v < 64; ++v)
    if ((bits >> v) & 1) s.push_back(v);
  return s;
}

/// Every face, including the empty one, by expanding each facet's power set.
inline std::set<Set> all_faces(const std::vector<Set>& facets) {
  std::set<Set> faces;
  for (const auto& f : facets) {
    const std::size_t k = f.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      Set s;
      for (std::size_t i = 0; i < k; ++i)
        if ((mask >> i) & 1) s.push_back(f[i]);
      faces.insert(s);
    }
  }
  return faces;
}

inline std::vector<Set> maximal(const std::vector<Set>& sets) {
  std::vector<Set> out;
  for (const auto& s : sets) {
    bool dominated = false;
    for (const auto& t : sets)
      if (t != s && subset(s, t)) dominated = true;
    if (!dominated && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Set> minimal(const std::vector<Set>& sets) {
  std::vector<Set> out;
  for (const auto& s : sets) {
    bool dominated = false;
    for (const auto& t : sets)
      if (t != s && subset(t, s)) dominated = true;
    if (!dominated && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// f[i] = number of faces with i + 1 vertices.
inline std::vector<long long> f_vector(const std::vector<Set>& facets) {
  std::size_t d = 0;
  for (const auto& f : facets) d = std::max(d, f.size());
  std::vector<long long> f(d, 0);
  for (const auto& s : all_faces(facets))
    if (!s.empty()) ++f[s.size() - 1];
  return f;
}

/// Coefficients of sum_i f_{i-1} (t - 1)^{d-i}, read from t^d down to t^0.
inline std::vector<long long> h_vector(const std::vector<long long>& f) {
  const int d = static_cast<int>(f.size());
  std::vector<long long> poly(d + 1, 0);  // poly[e] = coefficient of t^e
  for (int i = 0; i <= d; ++i) {
    const long long fi = i == 0 ? 1 : f[i - 1];
    std::vector<long long> p{1};
    for (int k = 0; k < d - i; ++k) {
      std::vector<long long> q(p.size() + 1, 0);
      for (std::size_t e = 0; e < p.size(); ++e) {
        q[e + 1] += p[e];
        q[e] -= p[e];
      }
      p = q;
    }
    for (std::size_t e = 0; e < p.size(); ++e) poly[e] += fi * p[e];
  }
  std::vector<long long> h(d + 1);
  for (int k = 0; k <= d; ++k) h[k] = poly[d - k];
  return h;
}

/// Minimal nonfaces among subsets of `ground` (at most 30 vertices).
inline std::vector<Set> minimal_nonfaces(const std::vector<Set>& facets, const Set& ground) {
  const auto faces = all_faces(facets);
  std::vector<Set> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ground.size()); ++mask) {
    Set s;
    for (std::size_t i = 0; i < ground.size(); ++i)
      if ((mask >> i) & 1) s.push_back(ground[i]);
    if (faces.count(s)) continue;
    bool minimal_nf = true;
    for (std::size_t drop = 0; drop < s.size() && minimal_nf; ++drop) {
      Set t = s;
      t.erase(t.begin() + static_cast<long>(drop));
      if (!faces.count(t)) minimal_nf = false;
    }
    if (minimal_nf) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Set vertices_of(const std::vector<Set>& facets) {
  std::set<int> vs;
  for (const auto& f : facets) vs.insert(f.begin(), f.end());
  return {vs.begin(), vs.end()};
}

/// Facets of the boundary: ridges counted over all facets, kept when seen once.
inline std::vector<Set> boundary_facets(const std::vector<Set>& facets) {
  std::map<Set, int> count;
  for (const auto& f : facets)
    for (std::size_t i = 0; i < f.size(); ++i) {
      Set r = f;
      r.erase(r.begin() + static_cast<long>(i));
      ++count[r];
    }
  std::vector<Set> out;
  for (const auto& [r, c] : count)
    if (c == 1) out.push_back(r);
  return out;
}

inline std::vector<Set> minimal_inside_faces(const std::vector<Set>& facets) {
  const auto bfaces = all_faces(boundary_facets(facets));
  std::vector<Set> inside;
  for (const auto& s : all_faces(facets))
    if (!bfaces.count(s)) inside.push_back(s);
  return minimal(inside);
}

inline std::size_t rank(std::vector<std::vector<Q>> a) {
  std::size_t r = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Q factor = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= factor * a[r][k];
    }
    ++r;
  }
  return r;
}

/// Rank mod p by dense elimination on residues.
inline std::size_t rank_mod(std::vector<std::vector<long long>> a, long long p) {
  auto inv = [p](long long x) {
    long long r = 1, e = p - 2;
    x %= p;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  for (auto& row : a)
    for (auto& x : row) x = ((x % p) + p) % p;
  std::size_t r = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const long long iv = inv(a[r][c]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const long long factor = a[i][c] * iv % p;
      for (std::size_t k = c; k < cols; ++k) a[i][k] = ((a[i][k] - factor * a[r][k]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

/// Reduced Betti numbers by dimension -1 .. top, over Q (p == 0) or GF(p).
/// Returns an empty vector for the void complex.
inline std::vector<long long> reduced_homology(const std::set<Set>& faces, long long p = 0) {
  if (faces.empty()) return {};
  std::size_t top = 0;
  for (const auto& s : faces) top = std::max(top, s.size());
  std::vector<std::vector<Set>> level(top + 2);
  for (const auto& s : faces) level[s.size()].push_back(s);
  // rank of the boundary map from level k to level k-1
  std::vector<std::size_t> rk(top + 2, 0);
  for (std::size_t k = 1; k <= top; ++k) {
    const auto& rows = level[k - 1];
    const auto& cols = level[k];
    std::map<Set, std::size_t> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
    if (p == 0) {
      std::vector<std::vector<Q>> m(rows.size(), std::vector<Q>(cols.size(), 0));
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t i = 0; i < cols[c].size(); ++i) {
          Set t = cols[c];
          t.erase(t.begin() + static_cast<long>(i));
          m[row_of.at(t)][c] = i % 2 == 0 ? 1 : -1;
        }
      rk[k] = rank(m);
    } else {
      std::vector<std::vector<long long>> m(rows.size(), std::vector<long long>(cols.size(), 0));
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t i = 0; i < cols[c].size(); ++i) {
          Set t = cols[c];
          t.erase(t.begin() + static_cast<long>(i));
          m[row_of.at(t)][c] = i % 2 == 0 ? 1 : -1;
        }
      rk[k] = rank_mod(m, p);
    }
  }
  std::vector<long long> out(top + 1);
  for (std::size_t k = 0; k <= top; ++k)
    out[k] = static_cast<long long>(level[k].size()) - static_cast<long long>(rk[k]) -
             static_cast<long long>(rk[k + 1]);
  return out;
}

/// beta_{i,j} by summing over every subset W of {0..n-1}, without shortcuts.
inline std::map<std::pair<int, int>, long long> betti(const std::vector<Set>& facets, int n, long long p = 0) {
  const auto faces = all_faces(facets);
  std::map<std::pair<int, int>, long long> table;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const Set w = bits_to_set(mask);
    std::set<Set> restricted;
    for (const auto& s : faces)
      if (subset(s, w)) restricted.insert(s);
    const auto h = reduced_homology(restricted, p);
    const int j = static_cast<int>(w.size());
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (h[k] == 0) continue;
      // dimension k - 1 contributes to beta_{i,j} with j - i - 1 = k - 1
      table[{j - static_cast<int>(k), j}] += h[k];
    }
  }
  return table;
}

/// Earliest failing step of a shelling, or -1. At step i the faces of F_i that
/// lie in an earlier facet must be the faces of a nonempty set of ridges of F_i.
inline int shelling_failure(const std::vector<Set>& ordered) {
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    const Set& f = ordered[i];
    std::vector<Set> meets;
    for (std::size_t k = 0; k < i; ++k) {
      Set m;
      std::set_intersection(f.begin(), f.end(), ordered[k].begin(), ordered[k].end(), std::back_inserter(m));
      meets.push_back(m);
    }
    const auto top = maximal(meets);
    for (const auto& m : top)
      if (m.size() + 1 != f.size()) return static_cast<int>(i);
  }
  return -1;
}

/// Minimal vertex covers by trying every subset of the vertices involved.
inline std::vector<Set> minimal_vertex_covers(const std::vector<Set>& edges) {
  const Set vs = vertices_of(edges);
  std::vector<Set> covers;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vs.size()); ++mask) {
    Set c;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if ((mask >> i) & 1) c.push_back(vs[i]);
    bool covers_all = true;
    for (const auto& e : edges) {
      Set m;
      std::set_intersection(e.begin(), e.end(), c.begin(), c.end(), std::back_inserter(m));
      if (m.empty()) covers_all = false;
    }
    if (covers_all) covers.push_back(c);
  }
  return minimal(covers);
}

using Point = std::pair<int, int>;

/// Every down/left path from `start` to `end`, choosing which steps go down.
inline std::vector<std::vector<Point>> lattice_paths(Point start, Point end) {
  const int downs = end.first - start.first;
  const int lefts = start.second - end.second;
  std::vector<std::vector<Point>> out;
  if (downs < 0 || lefts < 0) return out;
  const int steps = downs + lefts;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << steps); ++mask) {
    if (__builtin_popcountll(mask) != downs) continue;
    std::vector<Point> path{start};
    Point cur = start;
    for (int s = 0; s < steps; ++s) {
      if ((mask >> s) & 1) ++cur.first;
      else --cur.second;
      path.push_back(cur);
    }
    out.push_back(path);
  }
  return out;
}

/// Points (i,j) of the point set with (i-1,j) and (i,j-1) also in it.
inline std::set<Point> corners(const std::set<Point>& pts) {
  std::set<Point> out;
  for (auto [i, j] : pts)
    if (pts.count({i - 1, j}) && pts.count({i, j - 1})) out.insert({i, j});
  return out;
}

struct Family {
  std::vector<std::set<Point>> paths;
  std::set<Point> points;
  std::set<Point> corner_points;
};

/// Families of pairwise disjoint paths from (a_k, n) to (m, b_k).
inline std::vector<Family> path_families(int m, int n, const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<std::vector<std::vector<Point>>> choices;
  for (std::size_t k = 0; k < a.size(); ++k) choices.push_back(lattice_paths({a[k], n}, {m, b[k]}));
  std::vector<Family> out;
  std::vector<std::size_t> pick(a.size(), 0);
  std::function<void(std::size_t, Family&)> rec = [&](std::size_t k, Family& cur) {
    if (k == a.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& path : choices[k]) {
      std::set<Point> s(path.begin(), path.end());
      bool clash = false;
      for (const auto& q : s)
        if (cur.points.count(q)) clash = true;
      if (clash) continue;
      Family next = cur;
      next.paths.push_back(s);
      next.points.insert(s.begin(), s.end());
      for (const auto& c : corners(s)) next.corner_points.insert(c);
      rec(k + 1, next);
    }
  };
  Family empty;
  rec(0, empty);
  return out;
}

/// Grid vertex index (i-1) n + (j-1).
inline Set to_set(const std::set<Point>& pts, int n) {
  Set s;
  for (auto [i, j] : pts) s.push_back((i - 1) * n + (j - 1));
  std::sort(s.begin(), s.end());
  return s;
}

/// Binomial coefficient in 64 bits for small arguments.
inline long long choose(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Random complex on {0..n-1}: `count` random subsets of size in [1, max_size].
inline std::vector<Set> random_complex(std::mt19937_64& rng, int n, int count, int max_size) {
  std::vector<Set> facets;
  std::uniform_int_distribution<int> size_dist(1, max_size);
  for (int c = 0; c < count; ++c) {
    Set all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    std::shuffle(all.begin(), all.end(), rng);
    Set f(all.begin(), all.begin() + size_dist(rng));
    std::sort(f.begin(), f.end());
    facets.push_back(f);
  }
  return maximal(facets);
}

/// Stacked ball: a d-simplex grown by gluing new d-simplices along boundary ridges.
/// Returned in construction order, which is a shelling.
inline std::vector<Set> random_stacked_ball(std::mt19937_64& rng, int d, int extra) {
  std::vector<Set> facets;
  Set first(d);
  for (int v = 0; v < d; ++v) first[v] = v;
  facets.push_back(first);
  int next = d;
  for (int s = 0; s < extra; ++s) {
    const auto ridges = boundary_facets(facets);
    std::uniform_int_distribution<std::size_t> pick(0, ridges.size() - 1);
    Set f = ridges[pick(rng)];
    f.push_back(next++);
    std::sort(f.begin(), f.end());
    facets.push_back(f);
  }
  return facets;
}

}  // namespace oracle
