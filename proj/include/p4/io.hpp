#pragma once

#include "json.hpp"

#include "p4/hamilton.hpp"
#include "p4/report.hpp"
#include "p4/solutions.hpp"
#include "p4/weyl.hpp"

#include <string>

namespace p4::io {

using nlohmann::json;

// Shared value forms: a rational is "p/q" (or "p"), a Poly an ascending
// array of rationals, a RatFun {"num": [...], "den": [...]}. Readers throw
// ParseError on anything else.
json to_json(const BigRat &q);
json to_json(const Poly &p);
json to_json(const RatFun &f);
json to_json(const VTriple &v);
json to_json(const Report &r);

BigRat rat_from_json(const json &j);
Poly poly_from_json(const json &j);
RatFun ratfun_from_json(const json &j);
VTriple vtriple_from_json(const json &j);

// Records. Readers only look at the fields they need, so e.g. a generated
// record can be read back as a "p4" or a "rho" record.
json record(const P4Solution &s);
json record(const RhoSolution &r);
json record(const SymMultiplet &m, const VTriple &v);
json record(const HamiltonianFrame &f);

P4Solution p4_from_json(const json &j);
RhoSolution rho_from_json(const json &j);
/// "v" is optional; when absent it is derived from the alphas.
std::pair<SymMultiplet, VTriple> multiplet_from_json(const json &j);
HamiltonianFrame frame_from_json(const json &j);

/// Parses one JSON document, mapping syntax errors to ParseError.
json parse(const std::string &text);

// LaTeX with exact coefficients: descending powers, \frac for non-integers.
std::string latex(const BigRat &q);
std::string latex(const Poly &p);
std::string latex(const RatFun &f);

} // namespace p4::io
