#pragma once
// JSON schemas for tensors, hypergraphs, certificates, eigenpairs,
// polynomials and reports. Files use 1-based vertex indices.

#include <string>
#include <variant>

#include "json.hpp"

#include "hyperspec/certificate.hpp"
#include "hyperspec/charpoly.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/parity.hpp"
#include "hyperspec/spectra.hpp"
#include "hyperspec/tensor.hpp"
#include "hyperspec/unipoly.hpp"

namespace hyperspec {

using Json = nlohmann::json;

/// Parses JSON text; syntax errors become ParseError.
Json parse_json(const std::string& text);

/// Deterministic rendering: keys sorted, no whitespace, doubles with 17
/// significant digits, non-finite doubles as null.
std::string dump(const Json& j);

/// Exact real values are written as "p/q" strings, exact complex values as
/// ["p/q","p/q"], floating values as [re, im].
Json to_json(const CubicalTensor& a);
CubicalTensor tensor_from_json(const Json& j);

Json to_json(const Hypergraph& g);
Hypergraph hypergraph_from_json(const Json& j);

/// A document with "edges" is a hypergraph, one with "entries" a tensor.
using Instance = std::variant<CubicalTensor, Hypergraph>;
Instance instance_from_json(const Json& j);
CubicalTensor as_tensor(const Instance& in);
SupportSystem as_support(const Instance& in);

Json to_json(const OddColoring& phi);
Json to_json(const OddTransversal& x);
using Certificate = std::variant<OddColoring, OddTransversal>;
Certificate certificate_from_json(const Json& j);
Json to_json(const Certificate& c);

Json to_json(const EigenPair& p);
EigenPair eigenpair_from_json(const Json& j);

Json to_json(const UniPoly& p);
UniPoly unipoly_from_json(const Json& j);

/// Outcome documents: {"feasible": bool, ...} with either the certificate or
/// the infeasibility witness, whose rows are written as 1-based patterns.
Json to_json(const ColoringOutcome& out, const SupportSystem& s);
Json to_json(const TransversalOutcome& out, const SupportSystem& s);

Json to_json(const SymmetryReport& report);
Json to_json(const ProductReport& report);
Json to_json(const IsolatedVertexReport& report);

}  // namespace hyperspec
