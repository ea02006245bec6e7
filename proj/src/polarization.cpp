#include "srball/polarization.hpp"

#include <algorithm>
#include <numeric>

namespace srball {

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

VertexUniverse polar_universe(int n, int t) {
  VertexUniverse u{n * t, {}};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= t; ++j) u.labels.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
  return u;
}

Face polarize(const Monomial& u, int t) {
  Face f;
  for (std::size_t k = 0; k < u.exponents.size(); ++k) {
    const int a = u.exponents[k];
    if (a < 0) throw Error("negative exponent");
    if (a > t) throw Error("grid too small");
    for (int j = 1; j <= a; ++j) f.insert(polar_index(static_cast<int>(k) + 1, j, t));
  }
  return f;
}

namespace {

void compositions(int n, int total, std::vector<int>& cur, std::size_t k, std::vector<Monomial>& out) {
  if (k + 1 == static_cast<std::size_t>(n)) {
    cur[k] = total;
    out.push_back({cur});
    return;
  }
  for (int v = total; v >= 0; --v) {
    cur[k] = v;
    compositions(n, total - v, cur, k + 1, out);
  }
}

void check_shape(int n, int t) {
  if (n < 1 || t < 1) throw Error("need n >= 1 and t >= 1");
  if (n * t > kMaxVertices) throw Error("n * t exceeds 128 vertices");
}

}  // namespace

std::vector<Monomial> power_monomials(int n, int t) {
  check_shape(n, t);
  std::vector<Monomial> out;
  std::vector<int> cur(static_cast<std::size_t>(n));
  compositions(n, t, cur, 0, out);
  return out;
}

std::vector<Monomial> multicomplex_facets(int n, int t) {
  check_shape(n, t);
  std::vector<Monomial> out;
  std::vector<int> cur(static_cast<std::size_t>(n));
  // Compositions are produced lexicographically descending within each degree.
  for (int deg = 0; deg <= t - 1; ++deg) compositions(n, deg, cur, 0, out);
  return out;
}

Face theta(const Monomial& a, int t) {
  Face f;
  for (std::size_t k = 0; k < a.exponents.size(); ++k) {
    if (a.exponents[k] < 0 || a.exponents[k] > t - 1) throw Error("exponent outside [0, t-1]");
    for (int j = 1; j <= t; ++j)
      if (j != a.exponents[k] + 1) f.insert(polar_index(static_cast<int>(k) + 1, j, t));
  }
  return f;
}

PolarComplex power_ideal_complex(int n, int t) {
  check_shape(n, t);
  PolarComplex pc;
  pc.n = n;
  pc.t = t;
  pc.gamma = multicomplex_facets(n, t);
  std::vector<Face> faces;
  for (const auto& a : pc.gamma) faces.push_back(theta(a, t));
  pc.complex = build_complex(faces, polar_universe(n, t));
  for (Face f : faces) {
    const auto idx = pc.complex.facet_index(f);
    if (!idx) throw Error("theta image is not a facet");
    pc.order.push_back(*idx);
  }
  return pc;
}

PolarCertificate certify_polar(const PolarComplex& pc) {
  PolarCertificate cert;
  const int n = pc.n;
  const int t = pc.t;
  std::vector<Face> images;
  for (const auto& a : pc.gamma) images.push_back(theta(a, t));
  auto sorted = images;
  std::sort(sorted.begin(), sorted.end(), canonical_less);
  cert.theta_injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  cert.facet_count_ok = BigInt(pc.complex.facet_count()) == binomial(n + t - 1, n) &&
                        pc.complex.facet_count() == pc.gamma.size();

  std::vector<Face> generators;
  for (const auto& u : power_monomials(n, t)) generators.push_back(polarize(u, t));
  std::sort(generators.begin(), generators.end(), canonical_less);
  cert.nonfaces_match = minimal_nonfaces(pc.complex).faces == generators;

  cert.ball = verify_ball(pc.complex, pc.order);
  if (!cert.ball.shelling.pass) return cert;

  // Position in the shelling of each exponent vector.
  auto position_of = [&](const std::vector<int>& a) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < pc.gamma.size(); ++k)
      if (pc.gamma[k].exponents == a) return k;
    return std::nullopt;
  };
  for (std::size_t k = 1; k < pc.gamma.size(); ++k) {
    const auto& s = pc.gamma[k].exponents;
    const Face f = images[k];
    Face glued;
    for (const auto& g : cert.ball.shelling.steps[k].glued) {
      const int v = (f - g.ridge).min_vertex();
      glued.insert(v);
      const int i = v / t + 1;
      const int j = v % t + 1;
      auto neighbor = s;
      neighbor[static_cast<std::size_t>(i - 1)] = j - 1;
      const auto pos = position_of(neighbor);
      if (!pos || *pos >= k || g.earlier.size() != 1 || g.earlier[0] != *pos) {
        if (cert.glued_ridges_are_neighbors)
          cert.witness = "step " + std::to_string(k + 1) + ": ridge missing x" + std::to_string(i) + "_" +
                         std::to_string(j) + " is not glued to the expected neighbor";
        cert.glued_ridges_are_neighbors = false;
      }
    }
    const auto q = std::find_if(s.begin(), s.end(), [&](int x) { return x < t - 1; });
    if (q == s.end() || glued.contains(polar_index(static_cast<int>(q - s.begin()) + 1, t, t))) {
      if (cert.free_ridge_found) cert.witness = "step " + std::to_string(k + 1) + ": no free ridge at x_{q,t}";
      cert.free_ridge_found = false;
    }
  }
  return cert;
}

}  // namespace srball
