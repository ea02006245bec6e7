#include "srball/homology.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace srball {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(int p) {
  if (!is_prime(p)) throw Error("field characteristic must be 0 or a prime, got " + std::to_string(p));
  return {p};
}

std::string FieldSpec::name() const {
  return characteristic == 0 ? "QQ" : "GF(" + std::to_string(characteristic) + ")";
}

// ---------------------------------------------------------------------------
// Rank

namespace {

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }

std::int64_t abs_gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
BigInt abs_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

template <class Int>
using Column = std::vector<std::pair<std::size_t, Int>>;

template <class Int>
void reduce_content(Column<Int>& c) {
  Int g = 0;
  for (const auto& [r, v] : c) {
    g = abs_gcd(g, v);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [r, v] : c) v /= g;
}

// c <- (pv/g) c - (cv/g) p, dropping zeros; both columns sorted by row.
template <class Int>
Column<Int> eliminate(const Column<Int>& c, const Column<Int>& p, const Int& cv, const Int& pv) {
  const Int g = abs_gcd(cv, pv);
  const Int a = pv / g;
  const Int b = cv / g;
  Column<Int> out;
  out.reserve(c.size() + p.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < c.size() || j < p.size()) {
    if (j == p.size() || (i < c.size() && c[i].first < p[j].first)) {
      out.emplace_back(c[i].first, checked_mul(a, c[i].second));
      ++i;
    } else if (i == c.size() || p[j].first < c[i].first) {
      out.emplace_back(p[j].first, checked_sub(Int(0), checked_mul(b, p[j].second)));
      ++j;
    } else {
      Int v = checked_sub(checked_mul(a, c[i].second), checked_mul(b, p[j].second));
      if (v != 0) out.emplace_back(c[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class Int>
std::size_t rank_fraction_free(const SparseColumns& m) {
  std::vector<Column<Int>> pivot(m.rows);
  std::vector<bool> has_pivot(m.rows, false);
  std::size_t rank = 0;
  for (const auto& src : m.columns) {
    Column<Int> c;
    for (const auto& [r, v] : src)
      if (v != 0) c.emplace_back(r, Int(v));
    std::sort(c.begin(), c.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    while (!c.empty()) {
      const std::size_t r = c.back().first;
      if (!has_pivot[r]) {
        reduce_content(c);
        pivot[r] = std::move(c);
        has_pivot[r] = true;
        ++rank;
        break;
      }
      const Int cv = c.back().second;
      c = eliminate(c, pivot[r], cv, pivot[r].back().second);
      reduce_content(c);
    }
  }
  return rank;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1;
  std::int64_t base = ((a % p) + p) % p;
  for (std::int64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

std::size_t rank_mod_p(const SparseColumns& m, std::int64_t p) {
  using Col = Column<std::int64_t>;
  std::vector<Col> pivot(m.rows);
  std::vector<bool> has_pivot(m.rows, false);
  std::size_t rank = 0;
  for (const auto& src : m.columns) {
    Col c;
    for (const auto& [r, v] : src) {
      const std::int64_t x = ((v % p) + p) % p;
      if (x) c.emplace_back(r, x);
    }
    std::sort(c.begin(), c.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    while (!c.empty()) {
      const std::size_t r = c.back().first;
      if (!has_pivot[r]) {
        const std::int64_t inv = mod_inverse(c.back().second, p);
        for (auto& [row, v] : c) v = v * inv % p;
        pivot[r] = std::move(c);
        has_pivot[r] = true;
        ++rank;
        break;
      }
      const std::int64_t factor = c.back().second;
      const Col& q = pivot[r];
      Col out;
      out.reserve(c.size() + q.size());
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < c.size() || j < q.size()) {
        if (j == q.size() || (i < c.size() && c[i].first < q[j].first)) {
          out.push_back(c[i++]);
        } else if (i == c.size() || q[j].first < c[i].first) {
          out.emplace_back(q[j].first, (p - factor * q[j].second % p) % p);
          ++j;
        } else {
          const std::int64_t v = ((c[i].second - factor * q[j].second) % p + p) % p;
          if (v) out.emplace_back(c[i].first, v);
          ++i;
          ++j;
        }
      }
      c = std::move(out);
    }
  }
  return rank;
}

}  // namespace

std::size_t matrix_rank(const SparseColumns& matrix, FieldSpec field) {
  if (field.characteristic != 0) return rank_mod_p(matrix, field.characteristic);
  try {
    return rank_fraction_free<std::int64_t>(matrix);
  } catch (const Overflow&) {
    return rank_fraction_free<BigInt>(matrix);
  }
}

// ---------------------------------------------------------------------------
// Homology

std::vector<std::size_t> reduced_homology_ranks(const std::vector<std::vector<Face>>& levels,
                                                FieldSpec field) {
  const std::size_t top = levels.size();
  if (top == 0) return {};
  // rank_of_boundary[k] = rank of the map from faces of size k to faces of size k-1.
  std::vector<std::size_t> boundary_rank(top + 1, 0);
  for (std::size_t k = 1; k < top; ++k) {
    const auto& rows = levels[k - 1];
    SparseColumns m;
    m.rows = rows.size();
    m.columns.reserve(levels[k].size());
    for (Face g : levels[k]) {
      std::vector<std::pair<std::size_t, std::int64_t>> col;
      int idx = 0;
      g.for_each([&](int v) {
        const Face sub = g.without(v);
        auto it = std::lower_bound(rows.begin(), rows.end(), sub, lex_less);
        if (it == rows.end() || *it != sub) throw Error("face list is not downward closed");
        col.emplace_back(static_cast<std::size_t>(it - rows.begin()), idx % 2 ? -1 : 1);
        ++idx;
      });
      m.columns.push_back(std::move(col));
    }
    boundary_rank[k] = matrix_rank(m, field);
  }
  std::vector<std::size_t> ranks(top);
  for (std::size_t k = 0; k < top; ++k)
    ranks[k] = levels[k].size() - boundary_rank[k] - boundary_rank[k + 1];
  return ranks;
}

std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& complex, FieldSpec field) {
  return reduced_homology_ranks(faces_by_size(complex), field);
}

// ---------------------------------------------------------------------------
// Betti tables

void BettiTable::add(int i, int j, std::uint64_t value) {
  if (value == 0) return;
  entries_[{i, j}] += value;
}

std::uint64_t BettiTable::get(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::projective_dimension() const {
  int p = 0;
  for (const auto& [key, v] : entries_) p = std::max(p, key.first);
  return p;
}

std::optional<int> BettiTable::min_shift(int i) const {
  auto it = entries_.lower_bound({i, std::numeric_limits<int>::min()});
  if (it == entries_.end() || it->first.first != i) return std::nullopt;
  return it->first.second;
}

std::optional<int> BettiTable::max_shift(int i) const {
  auto it = entries_.upper_bound({i, std::numeric_limits<int>::max()});
  if (it == entries_.begin()) return std::nullopt;
  --it;
  if (it->first.first != i) return std::nullopt;
  return it->first.second;
}

namespace {

// Betti contributions of the induced subcomplexes on every W in [begin, end),
// where bit b of the subset index stands for vertex verts[b].
void sweep_subsets(const std::vector<Face>& facets, const std::vector<std::vector<Face>>& levels,
                   const std::vector<int>& verts, std::uint64_t begin, std::uint64_t end,
                   FieldSpec field, BettiTable& out) {
  std::vector<Face> induced;
  std::vector<std::vector<Face>> sub_levels(levels.size());
  for (std::uint64_t bits = begin; bits < end; ++bits) {
    Face w;
    for (std::uint64_t b = bits; b; b &= b - 1) w.insert(verts[std::countr_zero(b)]);
    const int j = std::popcount(bits);
    if (j == 0) {
      out.add(0, 0, 1);  // the complex {empty face}
      continue;
    }

    // Maximal faces of the restriction; a common vertex makes it a cone.
    induced.clear();
    for (Face f : facets) induced.push_back(f & w);
    std::sort(induced.begin(), induced.end(), [](Face a, Face b) { return a.size() > b.size(); });
    Face common = w;
    std::size_t kept = 0;
    for (std::size_t a = 0; a < induced.size(); ++a) {
      bool absorbed = false;
      for (std::size_t b = 0; b < kept && !absorbed; ++b) absorbed = induced[a].subset_of(induced[b]);
      if (!absorbed) {
        induced[kept++] = induced[a];
        common &= induced[a];
      }
    }
    if (!common.empty()) continue;

    std::size_t top = 0;
    for (std::size_t k = 0; k < levels.size(); ++k) {
      sub_levels[k].clear();
      for (Face g : levels[k])
        if (g.subset_of(w)) sub_levels[k].push_back(g);
      if (!sub_levels[k].empty()) top = k + 1;
    }
    std::vector<std::vector<Face>> trimmed(sub_levels.begin(),
                                           sub_levels.begin() + static_cast<std::ptrdiff_t>(top));
    const auto ranks = reduced_homology_ranks(trimmed, field);
    for (std::size_t k = 0; k < ranks.size(); ++k) {
      // ranks[k] is homology in dimension k-1, contributing to i = j - k.
      if (ranks[k]) out.add(j - static_cast<int>(k), j, ranks[k]);
    }
  }
}

}  // namespace

BettiTable hochster_betti_table(const SimplicialComplex& complex, FieldSpec field,
                                const HochsterOptions& options) {
  if (complex.is_void()) throw Error("Betti table of the void complex is undefined");
  const std::vector<int> verts = complex.used_vertices().vertices();
  const int nu = static_cast<int>(verts.size());
  if (nu > options.max_vertices)
    throw Error("Hochster enumeration over " + std::to_string(nu) +
                " vertices exceeds the vertex cap of " + std::to_string(options.max_vertices));
  if (nu > 40) throw Error("Hochster enumeration beyond 40 vertices is not supported");

  const auto levels = faces_by_size(complex);
  const std::vector<Face> facets(complex.facets().begin(), complex.facets().end());
  const std::uint64_t total = std::uint64_t{1} << nu;

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));

  std::vector<BettiTable> partial(threads);
  if (threads == 1) {
    sweep_subsets(facets, levels, verts, 0, total, field, partial[0]);
  } else {
    std::vector<std::jthread> workers;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = std::min(total, chunk * t);
      const std::uint64_t end = std::min(total, begin + chunk);
      workers.emplace_back([&, begin, end, t] {
        sweep_subsets(facets, levels, verts, begin, end, field, partial[t]);
      });
    }
  }
  BettiTable used_table;
  for (const auto& part : partial)
    for (const auto& [key, v] : part.entries()) used_table.add(key.first, key.second, v);

  // Each unused vertex is a linear generator: tensor with its Koszul complex.
  const int unused = complex.vertex_count() - nu;
  if (unused == 0) return used_table;
  BettiTable full;
  for (const auto& [key, v] : used_table.entries())
    for (int a = 0; a <= unused; ++a)
      full.add(key.first + a, key.second + a, v * binomial(unused, a).convert_to<std::uint64_t>());
  return full;
}

Shifts shifts(const BettiTable& table) {
  Shifts s;
  const int p = table.projective_dimension();
  for (int i = 1; i <= p; ++i) {
    auto lo = table.min_shift(i);
    auto hi = table.max_shift(i);
    if (!lo || !hi) throw Error("gap in resolution at homological index " + std::to_string(i));
    s.min.push_back(*lo);
    s.max.push_back(*hi);
  }
  return s;
}

LinearityVerdict has_linear_resolution(const BettiTable& table, int m) {
  if (table.projective_dimension() == 0) return {false, "zero ideal"};
  const Shifts s = shifts(table);
  if (s.min[0] != s.max[0]) return {false, "not equigenerated"};
  if (s.min[0] != m)
    return {false, "generated in degree " + std::to_string(s.min[0]) + ", not " + std::to_string(m)};
  for (std::size_t i = 0; i < s.max.size(); ++i) {
    const int want = m + static_cast<int>(i);
    if (s.max[i] != want)
      return {false, "M_" + std::to_string(i + 1) + " = " + std::to_string(s.max[i]) +
                         ", linear needs " + std::to_string(want)};
  }
  return {true, "linear"};
}

std::vector<int> canonical_generator_degrees(const BettiTable& table, int n, int d) {
  const int p = table.projective_dimension();
  if (p != n - d)
    throw Error("not Cohen-Macaulay at this vertex count: projective dimension " +
                std::to_string(p) + " differs from n - d = " + std::to_string(n - d));
  std::vector<int> degrees;
  for (const auto& [key, v] : table.entries())
    if (key.first == p)
      for (std::uint64_t c = 0; c < v; ++c) degrees.push_back(n - key.second);
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace srball
