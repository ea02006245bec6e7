#include "srball/bounds.hpp"

#include <algorithm>

namespace srball {

ClosedFormBounds closed_form_bounds(const BoundParams& p) {
  if (p.n < p.d) throw Error("closed-form bounds need n >= d");
  ClosedFormBounds out;
  BigInt lo = p.n;
  BigInt hi = p.n;
  for (int i = 1; i <= p.n - p.d; ++i) {
    lo *= p.m + i - 1;
    hi *= p.d - p.m + i;
  }
  const BigInt denom = factorial(p.n - p.d + 1);
  out.lower = Rational(lo, denom);
  out.upper = Rational(hi, denom);
  out.in_range = p.m >= 2 && p.m <= (p.d + 1) / 2 && p.n > p.d;
  return out;
}

BettiBounds betti_bounds(const BettiTable& table) {
  const Shifts s = shifts(table);
  BettiBounds out;
  out.p = static_cast<int>(s.min.size());
  BigInt lo = 1;
  BigInt hi = 1;
  for (int v : s.min) lo *= v;
  for (int v : s.max) hi *= v;
  const BigInt denom = factorial(out.p);
  out.lower = Rational(lo, denom);
  out.upper = Rational(hi, denom);
  return out;
}

Rational lower_bound_estimate(const BoundParams& p) {
  BigInt sum = 0;
  for (int i = 0; i < p.m; ++i) sum += binomial(p.n - p.d + i, i);
  return Rational(2 * sum + BigInt(p.d - 2 * p.m) * binomial(p.n - p.d + p.m - 1, p.m - 1));
}

HVector cyclic_h(int n, int d) {
  if (d < 1 || n < d) throw Error("cyclic polytope needs n >= d >= 1");
  HVector h;
  h.entries.resize(static_cast<std::size_t>(d));
  for (int i = 0; i <= (d - 1) / 2; ++i) {
    h.entries[static_cast<std::size_t>(i)] = binomial(n - d + i, i);
    h.entries[static_cast<std::size_t>(d - 1 - i)] = binomial(n - d + i, i);
  }
  return h;
}

std::vector<int> cyclic_max_shifts(int n, int d) {
  if (n <= d) throw Error("cyclic shifts need n > d");
  std::vector<int> out;
  const int half = (d - 1) / 2;
  const bool even = (d - 1) % 2 == 0;
  for (int i = 1; i <= n - d; ++i) out.push_back(even ? half + i : half + i + 1);
  out.push_back(n);
  return out;
}

Rational cyclic_upper_product(int n, int d) {
  BigInt prod = 1;
  for (int v : cyclic_max_shifts(n, d)) prod *= v;
  return Rational(prod, factorial(n - d + 1));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inapplicable: return "INAPPLICABLE";
  }
  return "?";
}

ConjectureReport check_conjecture(const SimplicialComplex& ball, std::span<const std::size_t> order,
                                  const CheckOptions& options) {
  ConjectureReport rep;
  rep.n = ball.vertex_count();
  rep.d = ball.max_facet_size();
  rep.f = f_vector(ball);
  rep.h = h_vector(rep.f, rep.d);

  const SimplicialComplex boundary = boundary_complex(ball);
  if (boundary.is_void()) {
    rep.reasons.push_back("no boundary");
    return rep;
  }

  const BallCertificate cert = verify_ball(ball, order);
  rep.shelling_pass = cert.shelling.pass;
  rep.ball_pass = cert.pass;
  rep.ball_reason = cert.reason;

  rep.boundary_f = f_vector(boundary);
  rep.boundary_h = h_vector(rep.boundary_f, rep.d - 1);
  rep.boundary_h_consistent = boundary_h_from_h(rep.h, rep.d) == rep.boundary_h;
  rep.e = boundary.facet_count();
  if (rep.boundary_h.sum() != rep.e) throw Error("boundary h-vector does not sum to the facet count");
  const VectorProfile profile = vector_profile(rep.boundary_h);
  rep.a2 = profile.unimodal;
  rep.boundary_symmetric = profile.symmetric;
  rep.all_vertices_on_boundary = boundary.used_vertices() == Face::prefix(rep.n);
  if (!rep.all_vertices_on_boundary) rep.reasons.push_back("some vertex is not on the boundary");

  if (rep.n >= rep.d) {
    const HVector star = cyclic_h(rep.n, rep.d);
    bool below = true;
    for (std::size_t i = 0; i < star.entries.size(); ++i) below = below && rep.boundary_h.entries[i] <= star.entries[i];
    rep.below_cyclic = below;
  }

  for (Face g : minimal_inside_faces(ball)) rep.inside_face_sizes.push_back(g.size());
  std::sort(rep.inside_face_sizes.begin(), rep.inside_face_sizes.end());

  const MinimalNonfaces nonfaces = minimal_nonfaces(ball);
  rep.m = nonfaces.min_size;
  if (rep.m) {
    const int m = *rep.m;
    const auto& sizes = rep.inside_face_sizes;
    rep.a1 = std::find(sizes.begin(), sizes.end(), rep.d - m + 1) != sizes.end() &&
             (sizes.empty() || sizes.front() >= m);
    if (rep.n >= rep.d) {
      rep.closed = closed_form_bounds({rep.n, rep.d, m});
      rep.estimate = lower_bound_estimate({rep.n, rep.d, m});
    }
  }

  // Betti data of the boundary sphere.
  if (boundary.used_vertices().size() > options.hochster.max_vertices) {
    rep.betti_note = "skipped: boundary has more than " + std::to_string(options.hochster.max_vertices) +
                     " vertices";
  } else {
    rep.betti = hochster_betti_table(boundary, options.field, options.hochster);
    try {
      rep.betti_bounds = betti_bounds(*rep.betti);
      const Rational e(rep.e);
      rep.betti_bounds_hold = rep.betti_bounds->lower <= e && e <= rep.betti_bounds->upper;
    } catch (const Error& err) {
      rep.betti_note = err.what();
    }
    if (rep.m && rep.betti_bounds) {
      const Shifts s = shifts(*rep.betti);
      const int m = *rep.m;
      const int p = rep.n - rep.d + 1;
      bool match = static_cast<int>(s.min.size()) == p;
      for (int i = 1; match && i < p; ++i)
        match = s.min[static_cast<std::size_t>(i - 1)] == m + i - 1 &&
                s.max[static_cast<std::size_t>(i - 1)] == rep.d - m + i;
      if (match) match = s.min.back() == rep.n && s.max.back() == rep.n;
      rep.shifts_match_closed_form = match;
    }
  }

  if (!rep.ball_pass) {
    rep.reasons.push_back("not a certified ball: " + rep.ball_reason);
    return rep;
  }
  if (!rep.m) {
    rep.reasons.push_back("m undefined");
    return rep;
  }
  bool applicable = true;
  if (!rep.closed || !rep.closed->in_range) {
    rep.reasons.push_back("m = " + std::to_string(*rep.m) + " outside [2, " + std::to_string((rep.d + 1) / 2) + "]");
    applicable = false;
  }
  if (!rep.a1) {
    rep.reasons.push_back("A1 fails");
    applicable = false;
  }
  if (!rep.a2) {
    rep.reasons.push_back("A2 fails: boundary h-vector not unimodal");
    applicable = false;
  }
  if (!applicable) return rep;
  const Rational e(rep.e);
  rep.verdict = rep.closed->lower <= e && e <= rep.closed->upper ? Verdict::Pass : Verdict::Fail;
  if (rep.verdict == Verdict::Fail) rep.reasons.push_back("e outside [L, U]");
  return rep;
}

}  // namespace srball
