#pragma once

#include <json.hpp>

#include "lle/ansatz.hpp"
#include "lle/graded.hpp"
#include "lle/symmetry.hpp"

namespace lle {

using Json = nlohmann::ordered_json;

// All payloads are deterministic byte-for-byte for fixed inputs: orderings
// are fixed and nothing time- or host-dependent is emitted.

Json clifford_json(const GammaRep& rep);
Json verdict_json(const std::string& name, const SymmetryVerdict& verdict, const GammaRep& rep);
Json second_order_json(const std::vector<SecondOrderEntry>& entries, const GammaRep& rep);

// `rep` enables rendering of non-closure residuals; closed tables do not
// depend on it.
Json table_json(const StructureConstants& table, const GammaRep* rep = nullptr);
std::string table_csv(const StructureConstants& table);
std::string table_markdown(const StructureConstants& table);

Json jacobi_json(const std::string& algebra, std::size_t triples,
                 const std::vector<JacobiViolation>& violations);
Json compare_json(const std::vector<Divergence>& divergences);
Json rank_json(const RankReport& report);
Json solver_json(const AnsatzSolution& solution, const GeneratorCatalog& catalog);
Json uniqueness_json(const UniquenessVerdict& verdict, const GammaRep& rep);
Json catalog_json(const GeneratorCatalog& catalog);
Json planewave_json(const std::string& name, bool valid);

}  // namespace lle
