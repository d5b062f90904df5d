#ifndef RRDEG_JSON_IO_HPP
#define RRDEG_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "rrdeg/eigensolve.hpp"
#include "rrdeg/formulas.hpp"
#include "rrdeg/forms.hpp"
#include "rrdeg/tensor_proj.hpp"

namespace rrdeg::io {

using Json = nlohmann::ordered_json;

// Forms: {"vars": n+1, "degree": w, "convention": "scaled"|"raw",
//         "coeffs": [{"exp": [..], "num": "..", "den": ".."}]}
Json form_to_json(const bw::Form& f);
bw::Form form_from_json(const Json& j);

// Faces: {"faces": [{"codim": int, "volume": int-or-string}, ..]}
Json faces_to_json(const formulas::PolytopeFaceData& faces);
formulas::PolytopeFaceData faces_from_json(const Json& j);

// Symmetric matrices: {"shape": [..], "entries": [{"i": [..], "j": [..],
//                      "num": "..", "den": ".."}]}
Json sym_matrix_to_json(const tensorproj::SymMatrix& h);
tensorproj::SymMatrix sym_matrix_from_json(const Json& j);

// Multihomogeneous forms mirror the form schema with block exponents.
Json multiform_to_json(const tensorproj::MultiForm& f);
tensorproj::MultiForm multiform_from_json(const Json& j);

// Reports carry a top-level schema marker; degrees print as decimal strings.
Json solve_report_to_json(const eigensolve::SolveReport& report, const std::string& variant);
Json rr_report_to_json(const formulas::RRReport& report);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace rrdeg::io

#endif
