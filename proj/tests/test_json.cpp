#include "rrdeg/json_io.hpp"

#include "doctest.h"
#include "rrdeg/prng.hpp"

using namespace rrdeg;

TEST_CASE("form round trip preserves exact coefficients and convention") {
  bw::Form f(3, 2, bw::Convention::Scaled);
  f.set_coeff({2, 0, 0}, make_rat(Int(22), Int(7)));
  f.set_coeff({1, 1, 0}, make_rat(Int(-5), Int(3)));
  io::Json j = io::form_to_json(f);
  bw::Form g = io::form_from_json(j);
  CHECK(g.vars() == 3);
  CHECK(g.degree() == 2);
  CHECK(g.convention() == bw::Convention::Scaled);
  CHECK(bw::bw_dist_sq(f, g) == 0);
  CHECK(io::form_to_json(g).dump() == j.dump());
}

TEST_CASE("faces round trip, including big volumes") {
  formulas::PolytopeFaceData faces;
  faces.faces.push_back({0, Int("123456789012345678901234567890")});
  faces.faces.push_back({1, Int(3)});
  io::Json j = io::faces_to_json(faces);
  formulas::PolytopeFaceData back = io::faces_from_json(j);
  CHECK(back.faces.size() == 2);
  CHECK(back.volume_at_codim(0) == Int("123456789012345678901234567890"));
  CHECK(back.volume_at_codim(1) == 3);
}

TEST_CASE("symmetric matrix and multiform round trips") {
  tensorproj::SymMatrix h({1, 1});
  h.set({0, 0}, {1, 1}, make_rat(Int(1), Int(2)));
  h.set({0, 1}, {1, 0}, Rat(4));
  io::Json j = io::sym_matrix_to_json(h);
  tensorproj::SymMatrix back = io::sym_matrix_from_json(j);
  CHECK(back.get({1, 1}, {0, 0}) == make_rat(Int(1), Int(2)));
  CHECK(back.get({1, 0}, {0, 1}) == 4);

  tensorproj::MultiForm f = tensorproj::project_sym2(h);
  tensorproj::MultiForm f2 = io::multiform_from_json(io::multiform_to_json(f));
  CHECK(f2.coeffs == f.coeffs);
  CHECK(f2.shape == f.shape);
  CHECK(f2.degrees == f.degrees);
}

TEST_CASE("reports serialize deterministically with decimal-string degrees") {
  eigensolve::SolveReport report;
  report.points.push_back(normalize_projective({{1.0, 0.0}, {0.25, -0.5}}));
  report.complex_count = 1;
  report.real_count = 0;
  report.residual_max = 1e-12;
  report.expected_degree = Int("98765432109876543210");
  report.match = false;
  report.seed = 42;
  io::Json a = io::solve_report_to_json(report, "pn");
  io::Json b = io::solve_report_to_json(report, "pn");
  CHECK(a.dump() == b.dump());
  CHECK(a["expected_degree"] == "98765432109876543210");
  CHECK(a["schema"] == 1);

  formulas::RRReport rr;
  rr.degree = Int("340282366920938463463374607431768211456");
  rr.provenance = "test";
  rr.cross_checks.push_back({"self", true});
  io::Json c = io::rr_report_to_json(rr);
  CHECK(c["degree"].is_string());
  CHECK(c["degree"] == "340282366920938463463374607431768211456");
  CHECK(c["all_agreed"] == true);
}
