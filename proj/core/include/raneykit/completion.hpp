#pragma once

#include <string>
#include <vector>

#include "raneykit/lattice.hpp"
#include "raneykit/mtalg.hpp"

namespace raneykit {

/// Which structure an embedding has been certified to preserve.
struct EmbeddingFlags {
  bool injective = false;
  bool order_embedding = false;  // preserves and reflects order
  bool bounds = false;
  bool binary_meets = false;
  bool binary_joins = false;
  bool all() const { return injective && order_embedding && bounds && binary_meets && binary_joins; }
};

struct Embedding {
  LatticePtr dom;
  LatticePtr cod;
  std::vector<Elem> map;
  EmbeddingFlags flags;
  /// Free-form note recorded by the producing stage (e.g. the MacNeille stage
  /// records that it is the identity on finite input).
  std::string certificate;

  Elem operator()(Elem a) const { return map[a]; }
};

/// Computes the preservation flags of an arbitrary table dom -> cod.
EmbeddingFlags certify_embedding(const FiniteLattice& dom, const FiniteLattice& cod, const std::vector<Elem>& map);

/// Powerset of the join-irreducibles of `d` with the Birkhoff embedding
/// e(a) = {j ∈ J(d) : j ≤ a}. Bit k of a codomain index is the k-th
/// join-irreducible of `d` in increasing index order. Throws `NotDistributive`.
Embedding boolean_envelope(const LatticePtr& d);

/// Identity on finite lattices; retained as an explicit stage.
Embedding macneille_completion(const LatticePtr& l);

/// r(x) = ⋁{a : e(a) ≤ x}, verified against e(a) ≤ x ⇔ a ≤ r(x).
/// Throws `AdjointFailure` with the first failing (a, x).
std::vector<Elem> right_adjoint_of_embedding(const Embedding& e);

/// MacNeille completion of the boolean envelope of a finite frame, with
/// □ = e ∘ r. The result's opens are exactly e[l].
struct FrameEnvelope {
  AlgebraPtr algebra;
  Embedding embedding;  // l -> algebra carrier
};
FrameEnvelope funayama_envelope_frame_with_embedding(const LatticePtr& l);
AlgebraPtr funayama_envelope_frame(const LatticePtr& l);

}  // namespace raneykit
