#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncg/analysis.hpp"
#include "ncg/integrality.hpp"
#include "ncg/verify.hpp"

namespace ncg {

using json = nlohmann::json;

struct ReportParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rationals and big integers are written as strings so nothing is rounded.
json surd_expr_json(const SurdExpr& e);  // [{"radicand": "7", "coeff": "2"}, ...]
SurdExpr surd_expr_from_json(const json& j);
json spectrum_json(const ExactSpectrum& s);  // [{"a", "b", "d", "mult", "value"}, ...]
ExactSpectrum spectrum_from_json(const json& j);

json analysis_json(const Analysis& a);
// Inverse of analysis_json: analysis_json(analysis_from_json(j)) == j.
// The *_from_json functions throw ReportParseError on malformed input.
Analysis analysis_from_json(const json& j);

json outcome_json(const VerifyOutcome& o);
VerifyOutcome outcome_from_json(const json& j);
json verify_report_json(const std::vector<VerifyOutcome>& outcomes, bool strict);

json squares_json(SquareKind kind, long bound, const std::vector<SquareHit>& hits);

std::string csv_escape(const std::string& field);

// spec,n,m,E,LE,LEplus,hypo,hyper,Lhyper,Qhyper,ordering,q_integral
void write_analysis_csv(std::ostream& os, const std::vector<Analysis>& rows);
// param,n_vertices,n_edges,E,LEplus,LE,hypo,hyper,Lhyper,Qhyper,Qintegral
void write_sweep_csv(std::ostream& os, const std::vector<std::pair<std::string, Analysis>>& rows);
// theorem,params,check,status,lhs,rhs,delta,note
void write_verify_csv(std::ostream& os, const std::vector<VerifyOutcome>& outcomes);
// n,root
void write_squares_csv(std::ostream& os, const std::vector<SquareHit>& hits);

}  // namespace ncg
