#pragma once

// JSON encodings of every value the library exchanges. Parsers throw
// DomainError on malformed input.
//
//   TopologicalType       {"g":int,"k":int,"a":0|1}
//   CompactSurface        {"orientable":bool,"handles_or_crosscaps":int,"boundary":int}
//   Word                  [±(i+1), ...]
//   Presentation          {"generators":[names],"relators":[[...],...]}
//   AugmentedPresentation Presentation + {"augmentation":[0|1,...]}
//   PermutationAction     {"degree":n,"images":[[one-line perm],...]}
//   Matrix                [[[re,im],...],...] (row-major)
//   UnitaryRep            {"presentation":P,"dim":n,"matrices":[M,...],"residual":r}
//   AugmentedUnitaryRep   {"presentation":AP,"real_structure":M,"dim":n,
//                          "matrices":[M,...],"signs":[±1,...],"residual":r}
//   Certificate           {"W":M,"residual":r,"tolerance":t,"passed":bool}

#include <json.hpp>

#include "klein/abelian.hpp"
#include "klein/covers.hpp"
#include "klein/kappa.hpp"
#include "klein/kernel.hpp"
#include "klein/presentation.hpp"
#include "klein/repvar.hpp"
#include "klein/topology.hpp"

namespace klein::io {

using nlohmann::json;

json to_json(const topology::TopologicalType& t);
json to_json(const topology::CompactSurface& s);
json to_json(const fp::Word& w);
json to_json(const fp::Presentation& p);
json to_json(const fp::AugmentedPresentation& ap);
json to_json(const fp::KernelPresentation& k);
json to_json(const fp::AbelianInvariants& inv);
json to_json(const covers::PermutationAction& a);
json to_json(const repvar::Matrix& m);
json to_json(const repvar::UnitaryRep& rep);
json to_json(const repvar::AugmentedUnitaryRep& rep);
json to_json(const repvar::Certificate& cert);

topology::TopologicalType parse_topological_type(const json& j);
topology::CompactSurface parse_compact_surface(const json& j);
fp::Word parse_word(const json& j);
fp::Presentation parse_presentation(const json& j);
fp::AugmentedPresentation parse_augmented_presentation(const json& j);
covers::PermutationAction parse_action(const json& j);
repvar::Matrix parse_matrix(const json& j);
repvar::UnitaryRep parse_unitary_rep(const json& j);
repvar::AugmentedUnitaryRep parse_augmented_rep(const json& j);

}  // namespace klein::io
