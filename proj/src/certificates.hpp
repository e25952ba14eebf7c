#pragma once

#include <json.hpp>
#include <optional>

#include "mixed.hpp"
#include "reductions.hpp"

namespace arcpack {

using nlohmann::json;

/// All payloads carry {"schema":"1","kind":...}. Kinds: "trees", "tutte",
/// "branchings", "rootvector-violation", "mixed", "reduction".

json trees_to_json(const TreePacking& p);
json tutte_to_json(const PartitionCertificate& c);
json branchings_to_json(const BranchingSet& b);
json rootvector_violation_to_json(const RootVector& r,
                                  const std::vector<int>& violating_x);
json mixed_to_json(const MixedSolution& s,
                   const std::optional<PipelineTrace>& trace);
json reduction_to_json(const ReductionInstance& r);
json ham_reduction_to_json(const HamReduction& r);

TreePacking trees_from_json(const json& j);
PartitionCertificate tutte_from_json(const json& j);
BranchingSet branchings_from_json(const json& j);
MixedSolution mixed_from_json(const json& j);

/// Re-checks a certificate against the digraph; dispatches on "kind".
/// A valid "tutte" / "rootvector-violation" payload certifies infeasibility;
/// the other kinds certify feasibility. Throws std::invalid_argument for
/// malformed payloads.
bool verify_certificate(const Digraph& d, const json& j);

}  // namespace arcpack
