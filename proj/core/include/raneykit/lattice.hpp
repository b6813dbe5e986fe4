#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "raneykit/error.hpp"

namespace raneykit {

using Bits = boost::dynamic_bitset<>;

/// A set of elements of some carrier, stored as a bit-vector over the
/// carrier's index range. The carrier is implied by the calling context;
/// operations taking a lattice and a subset check that the sizes agree.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : bits_(universe) {}
  explicit Subset(Bits bits) : bits_(std::move(bits)) {}
  static Subset of(std::size_t universe, std::span<const Elem> members);
  static Subset full(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(Elem e) const { return e < bits_.size() && bits_.test(e); }
  void insert(Elem e) { bits_.set(e); }
  void erase(Elem e) { bits_.reset(e); }
  std::vector<Elem> elements() const;
  const Bits& bits() const { return bits_; }

  bool is_subset_of(const Subset& other) const { return bits_.is_subset_of(other.bits_); }
  friend bool operator==(const Subset&, const Subset&) = default;

  template <class F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) f(static_cast<Elem>(i));
  }

 private:
  Bits bits_;
};

/// Finite lattice over dense indices 0..n-1. Immutable after construction;
/// meet and join tables are filled once by `validate_lattice`.
class FiniteLattice {
 public:
  std::size_t size() const { return n_; }
  bool leq(Elem a, Elem b) const { return down_[b].test(a); }
  bool lt(Elem a, Elem b) const { return a != b && leq(a, b); }
  Elem meet(Elem a, Elem b) const { return meet_[a * n_ + b]; }
  Elem join(Elem a, Elem b) const { return join_[a * n_ + b]; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  /// Principal down-set / up-set of `a` as bit rows.
  const Bits& down(Elem a) const { return down_[a]; }
  const Bits& up(Elem a) const { return up_[a]; }

  const std::string& name(Elem a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Elem> find(std::string_view name) const;

  /// Structural equality: same size, same order relation, same names.
  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.n_ == b.n_ && a.down_ == b.down_ && a.names_ == b.names_;
  }

 private:
  friend FiniteLattice validate_lattice(std::vector<Bits> leq_rows, std::vector<std::string> names);

  std::size_t n_ = 0;
  std::vector<Bits> down_;  // down_[b].test(a)  <=>  a <= b
  std::vector<Bits> up_;    // up_[a].test(b)    <=>  a <= b
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  std::vector<std::string> names_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

using LatticePtr = std::shared_ptr<const FiniteLattice>;

/// Builds a lattice from `leq_rows[a].test(b) <=> a <= b`. The relation must
/// already be a partial order; `NotAPartialOrder` and `NotALattice` carry the
/// offending pair. Missing names default to the decimal index.
FiniteLattice validate_lattice(std::vector<Bits> leq_rows, std::vector<std::string> names = {});

/// Reflexive-transitive closure of a relation given as rows.
std::vector<Bits> reflexive_transitive_closure(std::vector<Bits> rows);

// ---- standard carriers ----------------------------------------------------

FiniteLattice chain(std::size_t n);
/// Powerset of `atom_names.size()` atoms; element index == bitmask.
FiniteLattice powerset(std::size_t atoms, std::vector<std::string> atom_names = {});
FiniteLattice diamond_m3();
FiniteLattice pentagon_n5();

/// Lattice of down-sets of a finite poset given by `poset_leq[i].test(j) <=> i <= j`.
/// Elements are listed in increasing order of their member bitmask.
FiniteLattice downset_lattice(const std::vector<Bits>& poset_leq);

/// The subset `s` with the order inherited from `l`; element k of the result is
/// the k-th member of `s` in increasing index order. Throws `NotALattice` when
/// the inherited order is not a lattice.
FiniteLattice induced_lattice(const FiniteLattice& l, const Subset& s);

// ---- lattice-theoretic queries ---------------------------------------------

Elem meet_of(const FiniteLattice& l, const Subset& s);
Elem join_of(const FiniteLattice& l, const Subset& s);
Elem meet_of(const FiniteLattice& l, std::span<const Elem> s);
Elem join_of(const FiniteLattice& l, std::span<const Elem> s);
/// ⋁{x ∈ s : x ≤ a}.
Elem join_below(const FiniteLattice& l, const Subset& s, Elem a);
/// ⋀{x ∈ s : a ≤ x}.
Elem meet_above(const FiniteLattice& l, const Subset& s, Elem a);

struct TripleWitness {
  Elem a, b, c;
};
/// First triple violating a∧(b∨c) = (a∧b)∨(a∧c), if any.
std::optional<TripleWitness> distributivity_failure(const FiniteLattice& l);
bool is_distributive(const FiniteLattice& l);

/// First element without a complement, if any (checked after distributivity).
std::optional<Elem> uncomplemented_element(const FiniteLattice& l);
bool is_boolean(const FiniteLattice& l);
/// Unique complement in a boolean lattice. Throws `NotComplemented`.
Elem complement(const FiniteLattice& l, Elem a);
/// Complement table for a boolean lattice. Throws `NotBoolean`.
std::vector<Elem> complement_table(const FiniteLattice& l);

struct JoinIrreduciblePoset {
  std::vector<Elem> elements;  // increasing index order
  /// Position of `e` in `elements`, if it is join-irreducible.
  std::optional<std::size_t> position(Elem e) const;
};
JoinIrreduciblePoset join_irreducibles(const FiniteLattice& l);
bool is_join_irreducible(const FiniteLattice& l, Elem j);

/// Atoms: elements covering bottom.
std::vector<Elem> atoms(const FiniteLattice& l);

struct SubframeReport {
  bool ok = true;
  std::string failure;  // "bottom", "top", "meet", "join", "distributive"
  std::vector<Elem> witness;
  explicit operator bool() const { return ok; }
};
/// Bounds, closure under binary meets and joins of `c`, and distributivity
/// of the inherited order. On finite carriers these say `s` is a frame whose
/// inclusion preserves all joins and finite meets.
SubframeReport check_subframe(const FiniteLattice& c, const Subset& s);
bool is_subframe(const FiniteLattice& c, const Subset& s);

/// ⋁{x : a∧x ≤ b}; requires a distributive lattice.
Elem heyting_implication(const FiniteLattice& l, Elem a, Elem b);

/// Hasse covers (a, b) with a ⋖ b, sorted.
std::vector<std::pair<Elem, Elem>> covers(const FiniteLattice& l);

/// Some order-isomorphism l1 -> l2 (image table), found by backtracking over
/// bijections refined by (down-set size, up-set size, irreducibility).
std::optional<std::vector<Elem>> find_isomorphism(const FiniteLattice& l1, const FiniteLattice& l2);

/// Birkhoff map a ↦ {positions of join-irreducibles below a}.
std::vector<Bits> birkhoff_downsets(const FiniteLattice& l, const JoinIrreduciblePoset& j);

}  // namespace raneykit
