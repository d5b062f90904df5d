#include "rrdeg/json_io.hpp"

#include <fstream>

namespace rrdeg::io {

namespace {

Json rat_fields(const Rat& q) {
  Json j;
  j["num"] = q.get_num().get_str();
  j["den"] = q.get_den().get_str();
  return j;
}

Rat rat_from(const Json& j) {
  const std::string num = j.at("num").is_string() ? j.at("num").get<std::string>()
                                                  : std::to_string(j.at("num").get<long>());
  const std::string den = !j.contains("den") ? "1"
                          : j.at("den").is_string() ? j.at("den").get<std::string>()
                                                    : std::to_string(j.at("den").get<long>());
  return rat_from_strings(num, den);
}

Int int_from(const Json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(j.get<long>());
}

Json int_field(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

}  // namespace

Json form_to_json(const bw::Form& f) {
  Json j;
  j["vars"] = f.vars();
  j["degree"] = f.degree();
  j["convention"] = f.convention() == bw::Convention::Scaled ? "scaled" : "raw";
  Json coeffs = Json::array();
  for (const auto& [alpha, c] : f.coeffs()) {
    Json entry;
    entry["exp"] = alpha;
    entry.update(rat_fields(c));
    coeffs.push_back(std::move(entry));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

bw::Form form_from_json(const Json& j) {
  const int vars = j.at("vars").get<int>();
  const int degree = j.at("degree").get<int>();
  const std::string conv = j.value("convention", "raw");
  if (conv != "raw" && conv != "scaled")
    throw std::invalid_argument("form_from_json: convention must be 'raw' or 'scaled'");
  bw::Form f(vars, degree, conv == "raw" ? bw::Convention::Raw : bw::Convention::Scaled);
  for (const Json& entry : j.at("coeffs")) {
    std::vector<int> alpha = entry.at("exp").get<std::vector<int>>();
    f.set_coeff(alpha, rat_from(entry));
  }
  return f;
}

Json faces_to_json(const formulas::PolytopeFaceData& faces) {
  Json arr = Json::array();
  for (const auto& face : faces.faces) {
    Json entry;
    entry["codim"] = face.codim;
    entry["volume"] = int_field(face.volume);
    arr.push_back(std::move(entry));
  }
  Json j;
  j["faces"] = std::move(arr);
  return j;
}

formulas::PolytopeFaceData faces_from_json(const Json& j) {
  formulas::PolytopeFaceData data;
  for (const Json& entry : j.at("faces"))
    data.faces.push_back({entry.at("codim").get<int>(), int_from(entry.at("volume"))});
  return data;
}

Json sym_matrix_to_json(const tensorproj::SymMatrix& h) {
  Json j;
  j["shape"] = h.shape();
  Json entries = Json::array();
  for (const auto& [key, value] : h.entries()) {
    Json entry;
    entry["i"] = key.first;
    entry["j"] = key.second;
    entry.update(rat_fields(value));
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  return j;
}

tensorproj::SymMatrix sym_matrix_from_json(const Json& j) {
  tensorproj::SymMatrix h(j.at("shape").get<std::vector<int>>());
  for (const Json& entry : j.at("entries"))
    h.set(entry.at("i").get<std::vector<int>>(), entry.at("j").get<std::vector<int>>(),
          rat_from(entry));
  return h;
}

Json multiform_to_json(const tensorproj::MultiForm& f) {
  Json j;
  j["shape"] = f.shape;
  j["degrees"] = f.degrees;
  j["convention"] = "scaled";
  Json coeffs = Json::array();
  for (const auto& [alpha, c] : f.coeffs) {
    Json entry;
    entry["exp"] = alpha;
    entry.update(rat_fields(c));
    coeffs.push_back(std::move(entry));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

tensorproj::MultiForm multiform_from_json(const Json& j) {
  tensorproj::MultiForm f;
  f.shape = j.at("shape").get<std::vector<int>>();
  f.degrees = j.at("degrees").get<std::vector<int>>();
  for (const Json& entry : j.at("coeffs")) {
    auto alpha = entry.at("exp").get<std::vector<std::vector<int>>>();
    f.coeffs[alpha] = rat_from(entry);
  }
  return f;
}

Json solve_report_to_json(const eigensolve::SolveReport& report, const std::string& variant) {
  Json j;
  j["schema"] = 1;
  j["variant"] = variant;
  j["seed"] = report.seed;
  j["attempts"] = report.attempts;
  j["complex_count"] = report.complex_count;
  j["real_count"] = report.real_count;
  j["residual_max"] = report.residual_max;
  if (report.expected_degree) j["expected_degree"] = report.expected_degree->get_str();
  if (report.match) j["match"] = *report.match;
  j["degeneracies"] = report.degeneracies;
  Json pts = Json::array();
  for (const auto& p : report.points) {
    Json pt;
    pt["chart"] = p.chart_tag;
    Json coords = Json::array();
    for (const auto& c : p.coords) coords.push_back(Json::array({c.real(), c.imag()}));
    pt["coords"] = std::move(coords);
    pt["real"] = p.is_real();
    pts.push_back(std::move(pt));
  }
  j["points"] = std::move(pts);
  Json pairs = Json::array();
  for (const auto& pair : report.real_eigenpairs) {
    Json pj;
    Json psi = Json::array();
    for (const auto& c : pair.psi) psi.push_back(c.real());
    pj["psi"] = std::move(psi);
    pj["lambda"] = pair.lambda.real();
    pairs.push_back(std::move(pj));
  }
  j["real_eigenpairs"] = std::move(pairs);
  return j;
}

Json rr_report_to_json(const formulas::RRReport& report) {
  Json j;
  j["schema"] = 1;
  j["degree"] = report.degree.get_str();
  j["provenance"] = report.provenance;
  Json checks = Json::array();
  for (const auto& check : report.cross_checks) {
    Json cj;
    cj["name"] = check.name;
    cj["agreed"] = check.agreed;
    checks.push_back(std::move(cj));
  }
  j["cross_checks"] = std::move(checks);
  j["all_agreed"] = report.all_agreed();
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  Json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace rrdeg::io
