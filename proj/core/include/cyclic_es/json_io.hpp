#pragma once

#include <nlohmann/json_fwd.hpp>

#include "cyclic_es/bigcount.hpp"
#include "cyclic_es/extremal.hpp"
#include "cyclic_es/grid.hpp"
#include "cyclic_es/monotone.hpp"
#include "cyclic_es/permutation.hpp"
#include "cyclic_es/stochastic.hpp"
#include "cyclic_es/tableau.hpp"

namespace cyclic_es {

// 1-based, schema-stable JSON views of the data model (the CLI's payloads).

// JSON number when the value fits in uint64, decimal string otherwise.
nlohmann::json bigcount_to_json(const BigCount& value);
nlohmann::json rational_to_json(const Rational& value);

nlohmann::json permutation_to_json(const Permutation& p);
nlohmann::json cyclic_to_json(const CyclicPermutation& c);
nlohmann::json witness_to_json(const SubPermutationWitness& w);

// {"rows": r, "cols": c, "entries": [[...],...]}
nlohmann::json tableau_to_json(const YoungTableau& t);
// Accepts the same shape; any SYT-validation failure is rethrown as
// InvalidTableau with the underlying detail appended.
YoungTableau tableau_from_json(const nlohmann::json& doc);

nlohmann::json grid_assignment_to_json(const GridAssignment& ga);
nlohmann::json grid_drawing_to_json(const GridDrawing& drawing);
nlohmann::json extremal_report_to_json(const ExtremalReport& report);
nlohmann::json partition_witness_to_json(const PartitionWitness& w);
nlohmann::json alpha_report_to_json(const AlphaReport& report);
nlohmann::json mu_estimate_to_json(const MuEstimate& est);
nlohmann::json erdos_szekeres_report_to_json(const ErdosSzekeresReport& r);

}  // namespace cyclic_es
