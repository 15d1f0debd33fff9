#pragma once

#include "qclique/solver.hpp"

#include <json.hpp>

#include <iosfwd>

namespace qclique {

enum class ReportFormat { Text, Json };

/// Stable schema:
/// {engine, n, theta, m, clique_size, witness:[ints], trace:[{w, iterations,
///  marked, accepted}], resources:{qubits, hadamard, not, cnot, ccnot,
///  oracle_calls}, seed}. An unknown marked count is written as -1.
/// Wall time is left out so identical runs produce identical bytes.
nlohmann::ordered_json to_json(const SolveReport& report);

/// Inverse of to_json over the reported fields. Throws nlohmann::json
/// exceptions on malformed input.
SolveReport report_from_json(const nlohmann::json& j);

void emit_report(std::ostream& out, const SolveReport& report, ReportFormat format);

/// Several reports plus the cross-check verdict.
nlohmann::ordered_json to_json(const CrossValidation& all);
void emit_report(std::ostream& out, const CrossValidation& all, ReportFormat format);

} // namespace qclique
