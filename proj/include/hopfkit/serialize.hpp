#pragma once

// JSON encoding of rings, elements, multilinear maps, presentations,
// cochains and lift transcripts. Keys are emitted in a fixed order so that
// decode followed by encode reproduces the input bytes. Malformed input
// raises SchemaViolation naming the offending location (".S", ".m[0][1]").

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "hopfkit/arithcheck.hpp"
#include "hopfkit/cohomology.hpp"
#include "hopfkit/hopf.hpp"
#include "hopfkit/lifting.hpp"

namespace hopfkit {

using Json = nlohmann::ordered_json;

Json ring_to_json(const Ring& ring);
Ring ring_from_json(const Json& j, const std::string& path = "");

Json element_to_json(const Ring& ring, const RingElement& a);
RingElement element_from_json(const Ring& ring, const Json& j, const std::string& path);

/// {"in": arity_in, "out": arity_out, "coeffs": [elem, ...]} in flat order.
Json multimap_to_json(const MultiMap& f);
MultiMap multimap_from_json(const Ring& ring, std::size_t dim_in, std::size_t dim_out, const Json& j,
                            const std::string& path = "");

Json presentation_to_json(const HopfPresentation& h);
HopfPresentation presentation_from_json(const Json& j, const std::string& path = "");

/// {"degree": n, "components": [{"p":..,"q":..,"map":..}, ...]}.
Json cochain_to_json(const TotalCochain& x);
TotalCochain cochain_from_json(const BialgebraComplex& complex, const Json& j, const std::string& path = "");

/// {"source": .., "target": .., "map": ..}.
Json morphism_to_json(const HopfMorphism& f);
HopfMorphism morphism_from_json(const Json& j, const std::string& path = "");

/// R as an N x N array: R[i][j] is the coefficient of e_i ⊗ e_j.
Json rmatrix_to_json(const MultiMap& r, std::size_t dim);
MultiMap rmatrix_from_json(const Ring& ring, std::size_t dim, const Json& j, const std::string& path = "");

Json lift_step_to_json(const LiftStep& s, bool with_timing = true);
/// {"base":..,"precision":..,"strategy":..,"current":..,"transcript":[..]};
/// timings are left out so that the output depends only on input and seed.
Json lift_state_to_json(const LiftState& s, const LiftStrategy& strategy);
LiftState lift_state_from_json(const Json& j, const std::string& path = "");

/// Reports: {"verified", "checks": [{"name","passed","nonzero_residuals","first_failure"}]}.
Json axiom_report_to_json(const AxiomReport& rep);
Json analysis_to_json(const Ring& ring, const AnalysisReport& a);
/// Big integers are emitted as decimal strings.
Json lemma_report_to_json(const IntPolynomial& poly, const LemmaReport& rep);
Json threshold_to_json(const Threshold& t);

/// Text helpers; parse errors become SchemaViolation at the root.
Json parse_json(std::string_view text);
std::string dump_json(const Json& j);

}  // namespace hopfkit
