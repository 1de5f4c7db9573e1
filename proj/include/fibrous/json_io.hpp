#pragma once

#include <optional>
#include <string>

#include "fibrous/finite_core.hpp"
#include "fibrous/finite_topology.hpp"
#include "fibrous/morphisms.hpp"
#include "fibrous/report.hpp"

namespace fibrous::io {

struct PreorderDocument {
  FinFibrousPreorder X;
  std::optional<SpatialWitness> w;
};

// Every reader throws StructureError when the document has the wrong shape.
// Parse errors in the JSON text itself are left to the caller.

/// {"nB", "nA", "p", "R", "d", "s"?, "m"?}
json write_preorder(const FinFibrousPreorder& x, const SpatialWitness* w = nullptr);
PreorderDocument read_preorder(const json& j);

/// {"nB", "opens"} with each open a sorted point list.
json write_topology(const FiniteTopology& t);
FiniteTopology read_topology(const json& j);

/// {"f", "fstar"}; the endpoints supply the shape.
json write_morphism(const FibrousMorphism& m);
FibrousMorphism read_morphism(const json& j, const FinFibrousPreorder& source, const FinFibrousPreorder& target);

json write_equivalence(const EquivalenceWitness& w);
json write_umap(const UMap& u);

}  // namespace fibrous::io
