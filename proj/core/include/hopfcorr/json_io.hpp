// JSON interchange for structure-constant tables. The schema:
//   { "dim": n, "field": "Q" | "p=<prime>", "labels": [...],
//     "mult": mu[i][j][k], "comult": delta[i][j][k],
//     "unit": [...], "counit": [...], "antipode": row-major matrix }
// with scalars as integers or strings "a/b". Loading re-runs the axiom
// checker, so nothing unverified comes back from disk.

#ifndef HOPFCORR_JSON_IO_HPP
#define HOPFCORR_JSON_IO_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "hopfcorr/catalog.hpp"

namespace hopfcorr {

using AnyHopf = std::variant<HopfAlgebra<Rat>, HopfAlgebra<Fp>>;

nlohmann::ordered_json hopf_to_json(const AnyHopf& h);
AnyHopf hopf_from_json(const nlohmann::json& j);

std::string save_algebra(const AnyHopf& h);
AnyHopf load_algebra(const std::string& text);
AnyHopf load_algebra_file(const std::string& path);
void save_algebra_file(const AnyHopf& h, const std::string& path);

AlgebraSpec algebra_spec_from_json(const nlohmann::json& j);
AnyHopf build_any(const AlgebraSpec& spec);

FieldDesc field_of_any(const AnyHopf& h);
int dim_of_any(const AnyHopf& h);

}  // namespace hopfcorr

#endif
