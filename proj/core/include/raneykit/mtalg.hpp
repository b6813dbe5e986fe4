#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "raneykit/lattice.hpp"

namespace raneykit {

/// The element classes of an MT-algebra, each as a subset of its carrier.
struct ElementClasses {
  Subset opens;           // □-fixpoints
  Subset closeds;         // ◇-fixpoints, ◇ = ¬□¬
  Subset saturated;       // meets of opens
  Subset locally_closed;  // u ∧ c, u open, c closed
  Subset gen_boolean;     // boolean subalgebra generated by `saturated`
};

/// A finite boolean algebra with an interior operator. Construct through
/// `validate_interior` or `from_subframe`; instances are immutable and the
/// element classes are computed once at construction.
class MTAlgebra {
 public:
  const FiniteLattice& lattice() const { return *base_; }
  const LatticePtr& lattice_ptr() const { return base_; }
  std::size_t size() const { return base_->size(); }

  Elem box(Elem a) const { return box_[a]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem diamond(Elem a) const { return neg_[box_[neg_[a]]]; }
  Elem meet(Elem a, Elem b) const { return base_->meet(a, b); }
  Elem join(Elem a, Elem b) const { return base_->join(a, b); }
  bool leq(Elem a, Elem b) const { return base_->leq(a, b); }
  Elem bottom() const { return base_->bottom(); }
  Elem top() const { return base_->top(); }

  const std::vector<Elem>& box_table() const { return box_; }
  const std::vector<Elem>& neg_table() const { return neg_; }
  const Subset& opens() const { return classes_.opens; }
  const ElementClasses& classes() const { return classes_; }
  const std::string& name() const { return name_; }

  /// Same carrier (order and names) and same interior table.
  friend bool operator==(const MTAlgebra& a, const MTAlgebra& b) {
    return a.box_ == b.box_ && (a.base_ == b.base_ || *a.base_ == *b.base_);
  }

 private:
  friend std::shared_ptr<const MTAlgebra> validate_interior(LatticePtr, std::vector<Elem>, std::string);

  LatticePtr base_;
  std::vector<Elem> box_;
  std::vector<Elem> neg_;
  ElementClasses classes_;
  std::string name_;
};

using AlgebraPtr = std::shared_ptr<const MTAlgebra>;

/// Checks Kuratowski's axioms, derives the opens, and confirms that the
/// opens form a subframe whose right adjoint reproduces `box`.
/// Errors: `NotBoolean`, `KuratowskiViolation` (message names the axiom).
AlgebraPtr validate_interior(LatticePtr b, std::vector<Elem> box, std::string name = {});

/// □a = largest member of `l` below a. Throws `NotASubframe`.
AlgebraPtr from_subframe(LatticePtr b, const Subset& l, std::string name = {});

AlgebraPtr discrete_algebra(LatticePtr b, std::string name = {});
AlgebraPtr indiscrete_algebra(LatticePtr b, std::string name = {});

ElementClasses classify(const MTAlgebra& m);

/// Closure of `generators ∪ {0,1}` under ∧, ∨ and ¬ (worklist).
Subset boolean_closure(const FiniteLattice& l, std::span<const Elem> neg, const Subset& generators);

/// First element that is not the join of the generated-subalgebra members below it.
std::optional<Elem> t0_failure(const MTAlgebra& m);
/// First element that is not the join of the locally closed elements below it.
std::optional<Elem> td_failure(const MTAlgebra& m);
bool is_T0(const MTAlgebra& m);
bool is_TD(const MTAlgebra& m);
/// T₀ by its definition: every element is a join of elements s ∧ c with s
/// saturated and c closed. Cross-check for `is_T0`.
bool is_T0_by_definition(const MTAlgebra& m);

/// a ≺ c iff some member b of a boolean subalgebra satisfies a ≤ b ≤ c.
class ProximityRelation {
 public:
  ProximityRelation() = default;
  explicit ProximityRelation(std::vector<Bits> rows) : rows_(std::move(rows)) {}
  bool holds(Elem a, Elem c) const { return rows_[a].test(c); }
  std::size_t size() const { return rows_.size(); }
  const Bits& row(Elem a) const { return rows_[a]; }
  friend bool operator==(const ProximityRelation&, const ProximityRelation&) = default;

 private:
  std::vector<Bits> rows_;
};

struct ProximityViolation {
  std::string axiom;  // "S1" .. "S6"
  std::vector<Elem> witness;
};

/// Checks (S1)–(S6) for `rel` against the boolean algebra `l` with complement
/// table `neg` and interpolating subalgebra `sub`.
std::optional<ProximityViolation> proximity_violation(const FiniteLattice& l, std::span<const Elem> neg,
                                                      const Subset& sub, const ProximityRelation& rel);

/// ≺ induced by the subalgebra `sub`; (S1)–(S6) are certified and a failure
/// throws `AxiomViolation`.
ProximityRelation proximity_relation(const FiniteLattice& l, std::span<const Elem> neg, const Subset& sub);

/// ≺ of an MT-algebra, i.e. the relation induced by its generated subalgebra.
ProximityRelation proximity(const MTAlgebra& m);

/// a = ⋁{c : c ≺ a} for every a.
bool is_deVries(const MTAlgebra& m);

}  // namespace raneykit
