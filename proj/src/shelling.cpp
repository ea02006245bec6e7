#include "srball/shelling.hpp"

#include <numeric>

namespace srball {

namespace {

void check_permutation(std::span<const std::size_t> order, std::size_t n) {
  if (order.size() != n) throw Error("order is not a permutation of the facets");
  std::vector<bool> seen(n, false);
  for (std::size_t i : order) {
    if (i >= n || seen[i]) throw Error("order is not a permutation of the facets");
    seen[i] = true;
  }
}

}  // namespace

std::vector<std::size_t> identity_order(const SimplicialComplex& complex) {
  std::vector<std::size_t> order(complex.facet_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

ShellingCertificate verify_shelling(const SimplicialComplex& complex,
                                    std::span<const std::size_t> order,
                                    std::optional<std::uint64_t> seed) {
  if (!complex.is_pure()) throw Error("not pure");
  check_permutation(order, complex.facet_count());

  ShellingCertificate cert;
  cert.order.assign(order.begin(), order.end());
  cert.seed = seed;
  cert.steps.reserve(order.size());

  std::vector<std::vector<std::size_t>> by_missing(kMaxVertices);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Face f = complex.facet(order[i]);
    ShellingStep step;
    step.facet = order[i];
    if (i > 0) {
      // Intersections of codimension one, keyed by the vertex they miss.
      Face glued_missing;
      for (std::size_t k = 0; k < i; ++k) {
        const Face meet = f & complex.facet(order[k]);
        if (meet.size() + 1 == f.size()) {
          const int v = (f - meet).min_vertex();
          by_missing[v].push_back(k);
          glued_missing.insert(v);
        }
      }
      // Every other intersection must sit inside one of those ridges.
      for (std::size_t k = 0; k < i && step.ok; ++k) {
        const Face meet = f & complex.facet(order[k]);
        if (!(f - meet).intersects(glued_missing)) {
          step.ok = false;
          step.bad_intersection = meet;
        }
      }
      glued_missing.for_each([&](int v) {
        step.glued.push_back(GluedRidge{f.without(v), std::move(by_missing[v])});
        by_missing[v].clear();
      });
    }
    if (!step.ok && !cert.failing_step) {
      cert.failing_step = i;
      cert.reason = "step " + std::to_string(i + 1) +
                    ": intersection with earlier facets is not generated by ridges";
    }
    cert.steps.push_back(std::move(step));
  }
  cert.pass = !cert.failing_step.has_value();
  return cert;
}

BallCertificate verify_ball(const SimplicialComplex& complex, std::span<const std::size_t> order) {
  BallCertificate ball;
  ball.shelling = verify_shelling(complex, order);
  ball.flags.resize(ball.shelling.steps.size());
  if (!ball.shelling.pass) {
    ball.failing_step = ball.shelling.failing_step;
    ball.reason = "not a shelling: " + ball.shelling.reason;
    return ball;
  }
  for (std::size_t i = 1; i < ball.shelling.steps.size(); ++i) {
    const auto& step = ball.shelling.steps[i];
    const Face f = complex.facet(step.facet);
    auto& flags = ball.flags[i];
    flags.nonempty = !step.glued.empty();
    for (const auto& g : step.glued)
      if (g.earlier.size() != 1) flags.unique_gluing = false;
    flags.proper = static_cast<int>(step.glued.size()) < f.size();
    if (!ball.failing_step && !(flags.nonempty && flags.unique_gluing && flags.proper)) {
      ball.failing_step = i;
      const std::string at = "step " + std::to_string(i + 1) + ": ";
      if (!flags.nonempty) ball.reason = at + "facet glued along nothing";
      else if (!flags.unique_gluing) ball.reason = at + "a glued ridge lies in two earlier facets";
      else ball.reason = at + "all ridges glued; closes to a sphere or worse";
    }
  }
  ball.pass = !ball.failing_step.has_value();
  return ball;
}

}  // namespace srball
