#pragma once

// JSON and text exchange formats.

#include "hopf/exactla.hpp"
#include "hopf/hopfstruct.hpp"
#include "hopf/nck.hpp"
#include "hopf/pairing.hpp"
#include "hopf/ratseries.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace hopf::io {

using json = nlohmann::ordered_json;

/// {"kind": "R"|"P"|"S"|"D", "order": N, "coeffs": ["1", "2", "5/1", ...]}.
/// Throws ParseError on malformed input or when order != number of coeffs.
series::SeriesProfile parse_series(std::string_view text);
json series_to_json(const series::SeriesProfile& p);

/// [{"label": "a", "degree": 1}, ...]; throws ParseError.
nck::DecorationSet parse_decorations(std::string_view text);

std::string read_file(const std::string& path);  // throws ParseError if unreadable

json matrix_to_json(const la::Matrix& m);
la::Matrix matrix_from_json(const json& j);  // throws ParseError

json gate_to_json(const series::GateVerdict& v);
json decomposition_to_json(const nck::Algebra& alg, const structure::DegreeDecomposition& d);
/// {"1": [[...]], "2": ...}; degree 0 included.
json gram_to_json(const pairing::PairingState& st);
json verification_to_json(const pairing::VerificationReport& r);

}  // namespace hopf::io
