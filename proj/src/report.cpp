#include "srball/report.hpp"

#include <sstream>

namespace srball {

Json json_integer(const BigInt& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return z.convert_to<std::int64_t>();
  return z.str();
}

Json json_rational(const Rational& q) { return to_string(q); }

Json to_json(const FVector& f) {
  Json out = Json::array();
  for (const auto& x : f.entries) out.push_back(json_integer(x));
  return out;
}

Json to_json(const HVector& h) {
  Json out = Json::array();
  for (const auto& x : h.entries) out.push_back(json_integer(x));
  return out;
}

Json to_json(const BettiTable& table) {
  Json entries = Json::array();
  for (const auto& [key, v] : table.entries()) entries.push_back({key.first, key.second, v});
  return {{"p", table.projective_dimension()}, {"entries", entries}};
}

Json faces_json(const std::vector<Face>& faces) {
  Json out = Json::array();
  for (Face f : faces) out.push_back(f.vertices());
  return out;
}

Json to_json(const ShellingCertificate& cert) {
  Json out{{"pass", cert.pass}, {"order", cert.order}, {"steps", cert.steps.size()}};
  if (cert.failing_step) out["failing_step"] = *cert.failing_step + 1;
  if (cert.seed) out["seed"] = *cert.seed;
  if (!cert.reason.empty()) out["reason"] = cert.reason;
  return out;
}

Json to_json(const BallCertificate& cert) {
  Json out{{"pass", cert.pass}, {"shelling", to_json(cert.shelling)}};
  if (cert.failing_step) out["failing_step"] = *cert.failing_step + 1;
  if (!cert.reason.empty()) out["reason"] = cert.reason;
  return out;
}

Json to_json(const ConjectureReport& r, const std::string& instance) {
  Json out{{"instance", instance},
           {"n", r.n},
           {"d", r.d},
           {"f", to_json(r.f)},
           {"h", to_json(r.h)},
           {"boundary_f", to_json(r.boundary_f)},
           {"boundary_h", to_json(r.boundary_h)},
           {"boundary_h_consistent", r.boundary_h_consistent},
           {"e", json_integer(r.e)},
           {"shelling_pass", r.shelling_pass},
           {"ball_pass", r.ball_pass},
           {"inside_face_sizes", r.inside_face_sizes},
           {"A1", r.a1},
           {"A2", r.a2},
           {"boundary_symmetric", r.boundary_symmetric},
           {"all_vertices_on_boundary", r.all_vertices_on_boundary},
           {"verdict", to_string(r.verdict)},
           {"reasons", r.reasons}};
  out["m"] = r.m ? Json(*r.m) : Json(nullptr);
  if (r.closed) {
    out["L"] = json_rational(r.closed->lower);
    out["U"] = json_rational(r.closed->upper);
    out["m_in_range"] = r.closed->in_range;
  } else {
    out["L"] = nullptr;
    out["U"] = nullptr;
  }
  out["lower_estimate"] = r.estimate ? json_rational(*r.estimate) : Json(nullptr);
  out["betti_table"] = r.betti ? to_json(*r.betti) : Json(nullptr);
  if (r.betti_bounds) {
    out["L_betti"] = json_rational(r.betti_bounds->lower);
    out["U_betti"] = json_rational(r.betti_bounds->upper);
  } else {
    out["L_betti"] = nullptr;
    out["U_betti"] = nullptr;
  }
  out["betti_bounds_hold"] = r.betti_bounds_hold ? Json(*r.betti_bounds_hold) : Json(nullptr);
  out["shifts_match_closed_form"] = r.shifts_match_closed_form ? Json(*r.shifts_match_closed_form) : Json(nullptr);
  out["below_cyclic"] = r.below_cyclic ? Json(*r.below_cyclic) : Json(nullptr);
  if (!r.betti_note.empty()) out["betti_note"] = r.betti_note;
  return out;
}

Json to_json(const DualTheoremReport& r) {
  Json out{{"m", r.m},
           {"n", r.n},
           {"generators", r.generators},
           {"covers", r.covers},
           {"y_diagonals", r.y_diagonals},
           {"all_entries_identified", r.all_entries_identified},
           {"diagonals_are_covers", r.diagonals_are_covers},
           {"covers_contain_diagonal", r.covers_contain_diagonal},
           {"sets_equal", r.sets_equal},
           {"involution", r.involution},
           {"verdict", r.pass ? "PASS" : "FAIL"}};
  out["y_complex_matches"] = r.y_complex_matches ? Json(*r.y_complex_matches) : Json(nullptr);
  out["y_complex_ball"] = r.y_complex_ball ? Json(*r.y_complex_ball) : Json(nullptr);
  if (!r.witness.empty()) out["witness"] = r.witness;
  return out;
}

Json to_json(const PolarCertificate& c) {
  Json out{{"theta_injective", c.theta_injective},
           {"facet_count_ok", c.facet_count_ok},
           {"nonfaces_match", c.nonfaces_match},
           {"ball", to_json(c.ball)},
           {"glued_ridges_are_neighbors", c.glued_ridges_are_neighbors},
           {"free_ridge_found", c.free_ridge_found}};
  if (!c.witness.empty()) out["witness"] = c.witness;
  return out;
}

Json to_json(const GridPoint& p) { return Json::array({p.i, p.j}); }

Json to_json(const PathFamily& family) {
  Json paths = Json::array();
  for (const auto& path : family.paths) {
    Json pts = Json::array();
    for (GridPoint p : path.points) pts.push_back(to_json(p));
    paths.push_back(pts);
  }
  Json cs = Json::array();
  for (GridPoint p : corners(family)) cs.push_back(to_json(p));
  return {{"paths", paths}, {"corners", cs}};
}

std::string csv_header() { return "instance,n,d,m,e,L,U,A1,A2,verdict"; }

namespace {

/// Quotes a CSV field when it holds a comma, quote or line break.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string csv_row(const ConjectureReport& r, const std::string& instance) {
  std::ostringstream os;
  os << csv_field(instance) << ',' << r.n << ',' << r.d << ',' << (r.m ? std::to_string(*r.m) : "") << ','
     << r.e.str() << ',' << (r.closed ? to_string(r.closed->lower) : "") << ','
     << (r.closed ? to_string(r.closed->upper) : "") << ',' << (r.a1 ? "true" : "false") << ','
     << (r.a2 ? "true" : "false") << ',' << to_string(r.verdict);
  return os.str();
}

std::string text_report(const Json& object) {
  std::ostringstream os;
  for (const auto& [key, value] : object.items())
    os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  return os.str();
}

}  // namespace srball
