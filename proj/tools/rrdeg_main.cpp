// rrdeg: exact Rayleigh-Ritz / distance degree computations for projective
// varieties, with desk-scale numerical verification of the counts.
//
// Exit codes: 0 success, 2 cross-check disagreement, 3 expectation mismatch,
// 4 degenerate instance or numeric failure, 64 usage error.

#include <complex>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rrdeg/chow.hpp"
#include "rrdeg/eigensolve.hpp"
#include "rrdeg/formulas.hpp"
#include "rrdeg/json_io.hpp"
#include "rrdeg/prng.hpp"
#include "rrdeg/tensor_proj.hpp"

namespace {

using namespace rrdeg;
using io::Json;

constexpr int kExitOk = 0;
constexpr int kExitCrossCheck = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitDegenerate = 4;
constexpr int kExitUsage = 64;

std::vector<int> to_int_vec(const std::vector<long>& v) {
  return std::vector<int>(v.begin(), v.end());
}

std::string echo_list(const std::vector<long>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

// ---------------------------------------------------------------------------
// degree
// ---------------------------------------------------------------------------

struct DegreeOptions {
  std::string variant;
  long n = 0, delta = 0, m_single = 0, d_single = 0, m1 = 0, m2 = 0, k = 0, omega = 1;
  std::vector<long> m_list, d_list, deltas;
  std::vector<std::string> chern;
  std::string faces_path;
  bool cross_check = false;
  bool json_output = false;
};

std::vector<Int> parse_chern(const std::vector<std::string>& data) {
  std::vector<Int> out;
  for (const std::string& s : data) out.emplace_back(s);
  return out;
}

formulas::RRReport run_degree(const DegreeOptions& opt) {
  formulas::RRReport report;
  auto add_check = [&](const std::string& name, bool agreed) {
    report.cross_checks.push_back({name, agreed});
  };

  if (opt.variant == "complete-intersection") {
    report.degree = formulas::rrdeg_complete_intersection(static_cast<int>(opt.n), opt.deltas,
                                                          opt.omega);
    report.provenance = "complete_intersection(n=" + std::to_string(opt.n) +
                        ", deltas=" + echo_list(opt.deltas) +
                        ", omega=" + std::to_string(opt.omega) +
                        "); equality holds for generic complete intersections, otherwise an "
                        "upper bound";
    if (opt.cross_check && opt.deltas.size() == 1)
      add_check("hypersurface specialization",
                report.degree == formulas::rrdeg_hypersurface(static_cast<int>(opt.n),
                                                              opt.deltas[0], opt.omega));
  } else if (opt.variant == "hypersurface") {
    report.degree = formulas::rrdeg_hypersurface(static_cast<int>(opt.n), opt.delta, opt.omega);
    report.provenance = "hypersurface(n=" + std::to_string(opt.n) +
                        ", delta=" + std::to_string(opt.delta) +
                        ", omega=" + std::to_string(opt.omega) + "); generic hypersurface";
    if (opt.cross_check)
      add_check("complete intersection with c=1",
                report.degree == formulas::rrdeg_complete_intersection(
                                     static_cast<int>(opt.n), {opt.delta}, opt.omega));
  } else if (opt.variant == "generic-morphism") {
    report.degree =
        formulas::rrdeg_generic_morphism(static_cast<int>(opt.m_single), opt.d_single, opt.omega);
    report.provenance = "generic_morphism(m=" + std::to_string(opt.m_single) +
                        ", d=" + std::to_string(opt.d_single) +
                        ", omega=" + std::to_string(opt.omega) + ")";
    if (opt.cross_check) {
      add_check("closed-form case split",
                report.degree == formulas::rrdeg_generic_morphism_closed(
                                     static_cast<int>(opt.m_single), opt.d_single, opt.omega));
      std::vector<Int> data(static_cast<size_t>(opt.m_single) + 1);
      for (int i = 0; i <= opt.m_single; ++i)
        data[static_cast<size_t>(i)] = chow::chern_degree(
            {static_cast<int>(opt.m_single)}, {static_cast<int>(opt.d_single)}, i);
      add_check("general-position formula on Veronese Chern data",
                report.degree == formulas::rrdeg_general_position(
                                     static_cast<int>(opt.m_single), opt.omega, data));
    }
  } else if (opt.variant == "general-position") {
    std::vector<Int> data = parse_chern(opt.chern);
    report.degree =
        formulas::rrdeg_general_position(static_cast<int>(opt.m_single), opt.omega, data);
    report.provenance = "general_position(m=" + std::to_string(opt.m_single) +
                        ", omega=" + std::to_string(opt.omega) + ", chern data supplied)";
    if (opt.cross_check)
      add_check("closed-form case split",
                report.degree == formulas::rrdeg_general_position_closed(
                                     static_cast<int>(opt.m_single), opt.omega, data));
  } else if (opt.variant == "toric") {
    formulas::PolytopeFaceData faces = io::faces_from_json(io::load_json_file(opt.faces_path));
    report.degree = formulas::rrdeg_toric(faces, opt.omega);
    report.provenance = "toric(faces=" + opt.faces_path + ", omega=" + std::to_string(opt.omega) +
                        "); face volumes as Chern degrees";
  } else if (opt.variant == "sv-general") {
    std::vector<int> m = to_int_vec(opt.m_list), d = to_int_vec(opt.d_list);
    report.degree = formulas::rrdeg_segre_veronese_general(m, d, opt.omega);
    report.provenance = "segre_veronese_general(m=" + echo_list(opt.m_list) +
                        ", d=" + echo_list(opt.d_list) + ", omega=" + std::to_string(opt.omega) +
                        "); general position w.r.t. the isotropic quadric";
    if (opt.cross_check) {
      add_check("Chow-ring direct computation",
                report.degree == formulas::rrdeg_segre_veronese_ring(m, d, opt.omega));
      add_check("distance-degree decomposition identity",
                formulas::rrdeg_decomposition_check(m, d, opt.omega));
      bool all_ones = true;
      for (size_t i = 0; i < m.size(); ++i)
        if (m[i] != 1 || d[i] != 1) all_ones = false;
      if (all_ones)
        add_check("toric cube face data",
                  report.degree == formulas::rrdeg_toric(
                                       formulas::cube_faces(static_cast<int>(m.size())),
                                       opt.omega));
      add_check("BW degree lower bound",
                formulas::rrdeg_segre_veronese_bw(m, d, opt.omega) <= report.degree);
    }
  } else if (opt.variant == "sv-bw") {
    std::vector<int> m = to_int_vec(opt.m_list), d = to_int_vec(opt.d_list);
    report.degree = formulas::rrdeg_segre_veronese_bw(m, d, opt.omega);
    report.provenance = "segre_veronese_bw(m=" + echo_list(opt.m_list) +
                        ", d=" + echo_list(opt.d_list) + ", omega=" + std::to_string(opt.omega) +
                        "); Bombieri-Weyl isotropic quadric";
    if (opt.cross_check) {
      bool all_ones = true, d_ones = true;
      for (int v : m)
        if (v != 1) all_ones = false;
      for (int v : d)
        if (v != 1) d_ones = false;
      if (all_ones && d_ones)
        add_check("product-of-lines closed form",
                  report.degree == formulas::rrdeg_product_lines_bw(
                                       static_cast<int>(m.size()), opt.omega));
      if (m.size() == 2 && d_ones)
        add_check("matrix singular-pair formula",
                  report.degree == formulas::rrdeg_matrix_bw(m[0], m[1], opt.omega));
      add_check("general-position upper bound",
                report.degree <= formulas::rrdeg_segre_veronese_general(m, d, opt.omega));
    }
  } else if (opt.variant == "product-lines-bw") {
    report.degree = formulas::rrdeg_product_lines_bw(static_cast<int>(opt.k), opt.omega);
    report.provenance = "product_lines_bw(k=" + std::to_string(opt.k) +
                        ", omega=" + std::to_string(opt.omega) + ")";
    if (opt.cross_check) {
      std::vector<int> ones(static_cast<size_t>(opt.k), 1);
      add_check("coefficient extraction",
                report.degree == formulas::rrdeg_segre_veronese_bw(ones, ones, opt.omega));
    }
  } else if (opt.variant == "matrix-bw") {
    report.degree =
        formulas::rrdeg_matrix_bw(static_cast<int>(opt.m1), static_cast<int>(opt.m2), opt.omega);
    report.provenance = "matrix_bw(m1=" + std::to_string(opt.m1) +
                        ", m2=" + std::to_string(opt.m2) +
                        ", omega=" + std::to_string(opt.omega) + ")";
    if (opt.cross_check) {
      add_check("coefficient extraction",
                report.degree == formulas::rrdeg_segre_veronese_bw(
                                     {static_cast<int>(opt.m1), static_cast<int>(opt.m2)},
                                     {1, 1}, opt.omega));
      if (opt.omega == 2)
        add_check("omega=2 binomial form",
                  report.degree == formulas::rrdeg_matrix_bw_omega2(static_cast<int>(opt.m1),
                                                                    static_cast<int>(opt.m2)));
    }
  } else if (opt.variant == "gdd-chern") {
    std::vector<Int> data = parse_chern(opt.chern);
    report.degree = formulas::gdd_chern(static_cast<int>(opt.m_single), data);
    report.provenance = "gdd_chern(m=" + std::to_string(opt.m_single) + ", chern data supplied)";
  } else if (opt.variant == "gdd-veronese") {
    report.degree =
        formulas::gdd_veronese(static_cast<int>(opt.m_single), opt.d_single, opt.omega);
    report.provenance = "gdd_veronese(m=" + std::to_string(opt.m_single) +
                        ", d=" + std::to_string(opt.d_single) +
                        ", omega=" + std::to_string(opt.omega) + ")";
    if (opt.cross_check) {
      std::vector<Int> data(static_cast<size_t>(opt.m_single) + 1);
      for (int i = 0; i <= opt.m_single; ++i)
        data[static_cast<size_t>(i)] =
            chow::chern_degree({static_cast<int>(opt.m_single)},
                               {static_cast<int>(opt.omega * opt.d_single)}, i);
      add_check("Chern-data route",
                report.degree ==
                    formulas::gdd_chern(static_cast<int>(opt.m_single), data));
    }
  } else if (opt.variant == "span-codim") {
    report.degree = formulas::span_codim(to_int_vec(opt.m_list), to_int_vec(opt.d_list),
                                         opt.omega);
    report.provenance = "span_codim(m=" + echo_list(opt.m_list) + ", d=" + echo_list(opt.d_list) +
                        ", omega=" + std::to_string(opt.omega) + ")";
  } else {
    throw CLI::ValidationError("degree", "unknown variant '" + opt.variant + "'");
  }
  return report;
}

int cmd_degree(DegreeOptions opt) {
  // variants over a single P^m read the scalar slot of --m / --d
  if (opt.m_list.size() == 1) opt.m_single = opt.m_list[0];
  if (opt.d_list.size() == 1) opt.d_single = opt.d_list[0];
  formulas::RRReport report = run_degree(opt);
  if (opt.json_output) {
    std::cout << io::rr_report_to_json(report).dump(2) << "\n";
  } else {
    std::cout << report.degree.get_str() << "\n";
    std::cout << "# " << report.provenance << "\n";
    for (const auto& check : report.cross_checks)
      std::cout << "# cross-check " << check.name << ": " << (check.agreed ? "agree" : "DISAGREE")
                << "\n";
  }
  return report.all_agreed() ? kExitOk : kExitCrossCheck;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::string variant;
  std::string f_spec = "random";
  std::string f1_path;
  std::string h_spec = "random";
  long omega = 2;
  long d = 2;
  uint64_t seed = 0;
  std::string expect = "auto";
  int max_attempts = 5;
  double tol = 1e-8;
};

Int auto_expected(const VerifyOptions& opt, long delta) {
  if (opt.variant == "pn") return formulas::rrdeg_segre_veronese_bw({1}, {1}, opt.omega);
  if (opt.variant == "rational-normal-curve")
    return Int((opt.omega + 2) * opt.d - 2);
  if (opt.variant == "plane-curve") return formulas::rrdeg_hypersurface(2, delta, opt.omega);
  if (opt.variant == "conic-bw") return formulas::rrdeg_segre_veronese_bw({1}, {2}, 2);
  if (opt.variant == "segre-2x2") return formulas::rrdeg_product_lines_bw(2, 2);
  throw CLI::ValidationError("verify", "unknown variant '" + opt.variant + "'");
}

int cmd_verify(const VerifyOptions& opt) {
  SplitMix64 rng(opt.seed);
  const bool random_input = (opt.variant == "segre-2x2") ? (opt.h_spec == "random")
                                                         : (opt.f_spec == "random");
  eigensolve::SolveReport report;
  std::string failure;
  bool solved = false;
  int attempts = 0;

  for (int attempt = 0; attempt < (random_input ? opt.max_attempts : 1) && !solved; ++attempt) {
    attempts = attempt + 1;
    try {
      long delta = 0;
      if (opt.variant == "segre-2x2") {
        tensorproj::SymMatrix h =
            opt.h_spec == "random"
                ? [&] {
                    tensorproj::SymMatrix m({1, 1});
                    auto idx = tensorproj::enumerate_indices({1, 1});
                    for (size_t a = 0; a < idx.size(); ++a)
                      for (size_t b = a; b < idx.size(); ++b)
                        m.set(idx[a], idx[b], Rat(rng.range(-10, 10)));
                    return m;
                  }()
                : io::sym_matrix_from_json(io::load_json_file(opt.h_spec));
        report = tensorproj::segre_2x2_report(h);
      } else if (opt.variant == "plane-curve") {
        if (opt.f1_path.empty())
          throw CLI::ValidationError("verify", "plane-curve requires --f1");
        bw::Form f1 = io::form_from_json(io::load_json_file(opt.f1_path));
        delta = f1.degree();
        bw::Form f = opt.f_spec == "random"
                         ? eigensolve::random_form(3, static_cast<int>(opt.omega), rng)
                         : io::form_from_json(io::load_json_file(opt.f_spec));
        report = eigensolve::eigenpoints_plane_curve(f1, f, bw::euclidean_quadric(3));
      } else {
        eigensolve::ParametrizedCurve curve;
        int fvars = 0, fdeg = static_cast<int>(opt.omega);
        if (opt.variant == "pn") {
          curve = eigensolve::projective_line_curve();
          fvars = 2;
        } else if (opt.variant == "rational-normal-curve") {
          curve = eigensolve::rational_normal_curve(static_cast<int>(opt.d));
          fvars = static_cast<int>(opt.d) + 1;
        } else if (opt.variant == "conic-bw") {
          curve = eigensolve::conic_bw_curve();
          fvars = 3;
          fdeg = 2;
        } else {
          throw CLI::ValidationError("verify", "unknown variant '" + opt.variant + "'");
        }
        bw::Form f = opt.f_spec == "random"
                         ? eigensolve::random_form(fvars, fdeg, rng)
                         : io::form_from_json(io::load_json_file(opt.f_spec));
        if (f.vars() != fvars || f.degree() < 1)
          throw std::invalid_argument("verify: objective has the wrong shape for the variant");
        report = eigensolve::eigenpoints_parametrized(curve, f, opt.tol);
      }

      Int expected = opt.expect == "auto" ? auto_expected(opt, delta) : Int(opt.expect);
      report.seed = opt.seed;
      report.attempts = attempts;
      if (eigensolve::count_vs_formula(report, expected, opt.tol)) {
        solved = true;
      } else if (!random_input) {
        break;  // fixed input: report the mismatch as-is
      }
    } catch (const DegenerateInput& e) {
      failure = e.what();
      if (!random_input) {
        std::cerr << "degenerate input: " << failure << "\n";
        return kExitDegenerate;
      }
    } catch (const NumericFailure& e) {
      failure = e.what();
    }
  }

  if (!solved && !failure.empty() && report.points.empty()) {
    std::cerr << "no solvable instance after " << attempts << " attempts: " << failure << "\n";
    return kExitDegenerate;
  }

  std::cout << io::solve_report_to_json(report, opt.variant).dump(2) << "\n";
  if (!solved && !report.degeneracies.empty()) return kExitDegenerate;
  return solved ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------
// bw / project
// ---------------------------------------------------------------------------

int cmd_bw(const std::string& f_path, const std::string& g_path) {
  bw::Form f = io::form_from_json(io::load_json_file(f_path));
  bw::Form g = io::form_from_json(io::load_json_file(g_path));
  Rat inner = bw::bw_inner(f, g);
  Rat dist = bw::bw_dist_sq(f, g);
  Json j;
  j["schema"] = 1;
  j["inner"] = {{"num", inner.get_num().get_str()},
                {"den", inner.get_den().get_str()},
                {"decimal", to_double(inner)}};
  j["dist_sq"] = {{"num", dist.get_num().get_str()},
                  {"den", dist.get_den().get_str()},
                  {"decimal", to_double(dist)}};
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_project(const std::string& h_path) {
  tensorproj::SymMatrix h = io::sym_matrix_from_json(io::load_json_file(h_path));
  Json j = io::multiform_to_json(tensorproj::project_sym2(h));
  j["in_span"] = tensorproj::span_membership(h);
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// selftest
// ---------------------------------------------------------------------------

int cmd_selftest() {
  int failures = 0;
  auto row = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  row("segre-veronese general m=(2,3) d=(2,2) omega=3 equals 117240",
      formulas::rrdeg_segre_veronese_general({2, 3}, {2, 2}, 3) == 117240);

  {
    const long expected[] = {0, 0, 12, 88, 848, 9888, 135616};
    bool ok = true;
    for (int k = 2; k <= 6; ++k) {
      std::vector<int> ones(static_cast<size_t>(k), 1);
      ok = ok && formulas::rrdeg_segre_veronese_general(ones, ones, 2) == Int(expected[k]);
    }
    row("product-of-lines general-position values 12, 88, 848, 9888, 135616", ok);
  }

  {
    formulas::PolytopeFaceData hexagon;
    hexagon.faces.push_back({0, Int(6)});
    for (int i = 0; i < 6; ++i) {
      hexagon.faces.push_back({1, Int(1)});
      hexagon.faces.push_back({2, Int(1)});
    }
    row("hexagon toric degree equals 54", formulas::rrdeg_toric(hexagon, 2) == 54);
  }

  row("product-lines BW degree omega=2 k=2 equals 8",
      formulas::rrdeg_product_lines_bw(2, 2) == 8);
  row("conic under its BW quadric has degree 4",
      formulas::rrdeg_segre_veronese_bw({1}, {2}, 2) == 4);
  row("span codimension for 2x2 symmetric matrices equals 1",
      formulas::span_codim({1, 1}, {1, 1}, 2) == 1);

  {
    bool ok = true;
    for (int n = 1; n <= 6 && ok; ++n)
      for (long delta = 1; delta <= 5 && ok; ++delta)
        for (long omega = 1; omega <= 5 && ok; ++omega)
          ok = formulas::rrdeg_complete_intersection(n, {delta}, omega) ==
               formulas::rrdeg_hypersurface(n, delta, omega);
    row("complete intersection c=1 equals hypersurface (n<=6, delta<=5, omega<=5)", ok);
  }

  {
    bool ok = true;
    std::vector<std::vector<int>> shapes;
    std::vector<int> cur;
    std::function<void(int)> build = [&](int sum) {
      if (!cur.empty()) shapes.push_back(cur);
      if (cur.size() == 3) return;
      for (int v = 1; sum + v <= 5; ++v) {
        cur.push_back(v);
        build(sum + v);
        cur.pop_back();
      }
    };
    build(0);
    for (const auto& m : shapes) {
      int total = 0;
      for (int v : m) total += v;
      for (int dv = 1; dv <= 3 && ok; ++dv) {
        std::vector<int> d(m.size(), dv);
        std::vector<Int> data(static_cast<size_t>(total) + 1);
        for (int i = 0; i <= total; ++i) data[static_cast<size_t>(i)] = chow::chern_degree(m, d, i);
        for (long omega = 1; omega <= 4 && ok; ++omega) {
          Int direct = formulas::rrdeg_segre_veronese_general(m, d, omega);
          ok = direct == formulas::rrdeg_general_position(total, omega, data) &&
               direct == formulas::rrdeg_segre_veronese_ring(m, d, omega) &&
               formulas::rrdeg_segre_veronese_bw(m, d, omega) <= direct;
        }
      }
    }
    row("segre-veronese pipelines agree with BW lower bound (sum m<=5, d<=3, omega<=4)", ok);
  }

  {
    bool ok = true;
    for (int k = 1; k <= 6 && ok; ++k) {
      std::vector<int> ones(static_cast<size_t>(k), 1);
      for (long omega = 1; omega <= 4 && ok; ++omega)
        ok = formulas::rrdeg_toric(formulas::cube_faces(k), omega) ==
             formulas::rrdeg_segre_veronese_general(ones, ones, omega);
    }
    row("toric cubes match products of lines (k<=6)", ok);
  }

  {
    bool ok = true;
    for (int k = 1; k <= 5 && ok; ++k) {
      std::vector<int> ones(static_cast<size_t>(k), 1);
      for (long omega = 1; omega <= 4 && ok; ++omega)
        ok = formulas::rrdeg_product_lines_bw(k, omega) ==
             formulas::rrdeg_segre_veronese_bw(ones, ones, omega);
    }
    row("omega^k k! grid equals coefficient extraction (k<=5, omega<=4)", ok);
  }

  {
    bool ok = true;
    for (int m1 = 1; m1 <= 4 && ok; ++m1)
      for (int m2 = 1; m2 <= 4 && ok; ++m2)
        for (long omega = 1; omega <= 4 && ok; ++omega)
          ok = formulas::rrdeg_matrix_bw(m1, m2, omega) ==
               formulas::rrdeg_segre_veronese_bw({m1, m2}, {1, 1}, omega);
    row("matrix BW formula equals coefficient extraction (m<=4, omega<=4)", ok);
  }

  {
    bool ok = true;
    std::vector<Int> data{Int(3), Int(-1), Int(4), Int(-1), Int(5)};
    for (int m = 0; m <= 4 && ok; ++m) {
      std::vector<Int> slice(data.begin(), data.begin() + m + 1);
      for (long omega = 1; omega <= 6 && ok; ++omega)
        ok = formulas::rrdeg_general_position(m, omega, slice) ==
             formulas::rrdeg_general_position_closed(m, omega, slice);
    }
    row("omega=2 and omega!=2 closed forms match the uniform sum", ok);
  }

  {
    // the two printed conic instances and their real-root counts
    auto conic_objective = [](long c200, long c110, long c101, long c020, long c011,
                              long c002) {
      bw::Form f(3, 2, bw::Convention::Raw);
      f.set_coeff({2, 0, 0}, Rat(c200));
      f.set_coeff({1, 1, 0}, Rat(2 * c110));
      f.set_coeff({1, 0, 1}, Rat(2 * c101));
      f.set_coeff({0, 2, 0}, Rat(c020));
      f.set_coeff({0, 1, 1}, Rat(2 * c011));
      f.set_coeff({0, 0, 2}, Rat(c002));
      return f;
    };
    bw::Form f1 = conic_objective(42, 140, -60, 267, 210, -63);
    bw::Form f2 = conic_objective(189, 28, 60, 195, -84, 147);
    auto g = eigensolve::veronese_map(2);
    auto q = bw::euclidean_quadric(3);
    poly::BinaryForm p1 = eigensolve::critical_binary_form(g, f1, q);
    poly::BinaryForm p2 = eigensolve::critical_binary_form(g, f2, q);
    row("first conic instance has two real critical points",
        eigensolve::sturm_real_count(p1) == 2);
    row("second conic instance has four real critical points",
        eigensolve::sturm_real_count(p2) == 4);
  }

  {
    bw::Form fermat(3, 3, bw::Convention::Raw);
    fermat.set_coeff({3, 0, 0}, Rat(1));
    fermat.set_coeff({0, 3, 0}, Rat(1));
    fermat.set_coeff({0, 0, 3}, Rat(1));
    bw::Form f(3, 2, bw::Convention::Raw);
    f.set_coeff({2, 0, 0}, Rat(1));
    f.set_coeff({0, 2, 0}, Rat(10));
    f.set_coeff({0, 1, 1}, Rat(2));
    f.set_coeff({0, 0, 2}, Rat(8));
    bool ok = false;
    try {
      eigensolve::SolveReport report =
          eigensolve::eigenpoints_plane_curve(fermat, f, bw::euclidean_quadric(3));
      ok = eigensolve::count_vs_formula(report, formulas::rrdeg_hypersurface(2, 3, 2));
      ok = ok && report.real_count == 4 && !report.real_eigenpairs.empty() &&
           std::abs(bw::closest_rank_one(f, report.real_eigenpairs).lambda -
                    std::complex<double>(8.0)) < 1e-8;
    } catch (const std::exception&) {
      ok = false;
    }
    row("Fermat cubic solve finds 12 eigenpoints with top eigenvalue 8", ok);
  }

  std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " checks FAILED")
            << "\n";
  return failures == 0 ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Rayleigh-Ritz degrees of projective varieties, with numerical checks"};
  app.require_subcommand(1);

  DegreeOptions dopt;
  CLI::App* degree = app.add_subcommand(
      "degree", "evaluate a closed degree formula (exact, arbitrary precision)");
  degree->add_option("variant", dopt.variant,
                     "one of: complete-intersection, hypersurface, generic-morphism, "
                     "general-position, toric, sv-general, sv-bw, product-lines-bw, matrix-bw, "
                     "gdd-chern, gdd-veronese, span-codim")
      ->required();
  degree->add_option("--n", dopt.n, "ambient projective dimension");
  degree->add_option("--delta", dopt.delta, "hypersurface degree");
  degree->add_option("--deltas", dopt.deltas, "complete-intersection degrees")->delimiter(',');
  degree->add_option("--m", dopt.m_list, "dimension list (single entry for P^m variants)")
      ->delimiter(',');
  degree->add_option("--d", dopt.d_list, "degree list (single entry for P^m variants)")
      ->delimiter(',');
  degree->add_option("--m1", dopt.m1, "first matrix dimension minus one");
  degree->add_option("--m2", dopt.m2, "second matrix dimension minus one");
  degree->add_option("--k", dopt.k, "number of projective lines");
  degree->add_option("--omega", dopt.omega, "objective degree (omega >= 1)");
  degree->add_option("--chern", dopt.chern, "degrees of c_i . L^(m-i), i = 0..m")->delimiter(',');
  degree->add_option("--faces", dopt.faces_path, "polytope face file (JSON)");
  degree->add_flag("--cross-check", dopt.cross_check, "run all overlapping formulas");
  degree->add_flag("--json", dopt.json_output, "machine-readable output");

  VerifyOptions vopt;
  CLI::App* verify = app.add_subcommand(
      "verify", "solve a critical-point system numerically and compare with the formula");
  verify->add_option("variant", vopt.variant,
                     "one of: pn, rational-normal-curve, plane-curve, conic-bw, segre-2x2")
      ->required();
  verify->add_option("--f", vopt.f_spec, "objective form file, or 'random'");
  verify->add_option("--f1", vopt.f1_path, "plane-curve constraint form file");
  verify->add_option("--matrix", vopt.h_spec, "symmetric matrix file, or 'random'");
  verify->add_option("--omega", vopt.omega, "objective degree for random sampling");
  verify->add_option("--d", vopt.d, "parametrization degree (rational normal curve)");
  verify->add_option("--seed", vopt.seed, "PRNG seed (echoed in the report)");
  verify->add_option("--expect", vopt.expect, "expected count, or 'auto' for the formula value");
  verify->add_option("--attempts", vopt.max_attempts, "resampling budget for random inputs");
  verify->add_option("--tol", vopt.tol, "residual tolerance");

  std::string bw_f, bw_g;
  CLI::App* bwcmd = app.add_subcommand("bw", "exact Bombieri-Weyl pairing of two forms");
  bwcmd->add_option("--f", bw_f, "first form file")->required();
  bwcmd->add_option("--g", bw_g, "second form file")->required();

  std::string proj_h;
  CLI::App* project = app.add_subcommand(
      "project", "project a symmetric matrix to its partially-symmetric polynomial");
  project->add_option("--matrix", proj_h, "symmetric matrix file")->required();

  app.add_subcommand("selftest", "run the formula regression and consistency grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (degree->parsed()) return cmd_degree(dopt);
    if (verify->parsed()) return cmd_verify(vopt);
    if (bwcmd->parsed()) return cmd_bw(bw_f, bw_g);
    if (project->parsed()) return cmd_project(proj_h);
    return cmd_selftest();
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegenerateInput& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const NumericFailure& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
