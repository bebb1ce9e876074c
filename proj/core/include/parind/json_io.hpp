#pragma once

#include <string>

#include "parind/parity.hpp"
#include "parind/structural.hpp"

namespace parind {

/// {"group", "flavor", "target": {"text", "coefficients"}, "terms": [{"generator",
/// "coefficient"}], "verified"}. Integers that do not fit in 64 bits are written as strings.
std::string certificate_to_json(const GeneratorFamily& family, const MembershipCertificate& cert, bool verified,
                                int indent = 2);

/// Reads a certificate written by certificate_to_json back against `family`. Throws
/// std::invalid_argument on malformed input, unknown generator ids, or a group/flavor mismatch.
MembershipCertificate certificate_from_json(const GeneratorFamily& family, const std::string& text);

/// Nested {"kind", "detail", "group_order", "value", "children": [{"weight", "node"}]}; leaves
/// carry "generator" and "multiplicity", lemma-scoped solves "lemma_scoped": true.
std::string tree_to_json(const DecompositionNode& root, int indent = 2);

/// {"base": +-1, "quadratic": {id: +-1}, "dihedral": {id: +-1}}, every key optional.
/// Throws ParityInputError on malformed input.
ParityInput parse_parity_input(const std::string& text);

std::string parity_table_to_json(const ParityTable& table, int indent = 2);
std::string span_report_to_json(const SpanReport& report, int indent = 2);

}  // namespace parind
