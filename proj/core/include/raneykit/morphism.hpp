#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "raneykit/mtalg.hpp"

namespace raneykit {

/// A total map between the carriers of two MT-algebras.
struct MorphismTable {
  AlgebraPtr dom;
  AlgebraPtr cod;
  std::vector<Elem> map;
  std::string name;

  Elem operator()(Elem a) const { return map[a]; }

  /// Pointwise equality with equal endpoints; names are ignored.
  friend bool operator==(const MorphismTable& f, const MorphismTable& g);
};

/// Range- and length-checked constructor. Throws `PreconditionUnmet`.
MorphismTable make_morphism(AlgebraPtr dom, AlgebraPtr cod, std::vector<Elem> map, std::string name = {});

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

struct AxiomCheck {
  AxiomCheck() = default;
  AxiomCheck(std::string check_id) : id(std::move(check_id)) {}

  std::string id;
  bool pass = true;
  std::vector<Elem> witness;  // domain elements unless the detail says otherwise
  std::string detail;
};

struct ValidationReport {
  std::string kind;  // "mt", "proximity", "raney"
  std::vector<AxiomCheck> checks;

  bool ok() const;
  bool passes(std::string_view id) const;
  const AxiomCheck& at(std::string_view id) const;
  std::vector<std::string> failed() const;
};

/// Complete boolean morphism (bounds, binary meets and joins, complements)
/// with f(□a) ≤ □f(a). Ids: "bounds", "meets", "joins", "complement", "box".
ValidationReport check_mt_morphism(const MorphismTable& f);

/// (R1)..(R5). On finite carriers "all meets" and "all joins" reduce to the
/// bounds plus the binary operations.
ValidationReport check_raney_morphism(const MorphismTable& f);

/// (P1)..(P4). P3 asks for finite joins of locally closed elements; on a
/// finite carrier that is bottom plus binary joins on the join-closure of LC.
ValidationReport check_proximity_morphism(const MorphismTable& f);

struct R4Equivalents {
  bool r4 = false;        // binary joins on the generated subalgebra
  bool two_pair = false;  // a1≺b1, a2≺b2  ⇒  f(a1∨a2) ≺' f(b1)∨f(b2)
  bool neg_form = false;  // a≺b  ⇒  ¬f(¬a) ≺' f(b)
  bool agree() const { return r4 == two_pair && two_pair == neg_form; }
};
/// Requires (R1), (R2), (R3), (R5); throws `PreconditionUnmet` otherwise.
R4Equivalents check_r4_equivalents(const MorphismTable& f);

/// (g ⋆ f)(a) = ⋁{g(f(x)) : x ∈ 𝔅𝔖(dom f), x ≤ a}. Throws `DomainMismatch`.
MorphismTable star(const MorphismTable& g, const MorphismTable& f);
/// (g ∗ f)(a) = ⋁{g(f(x)) : x ∈ LC(dom f), x ≤ a}. Throws `DomainMismatch`.
MorphismTable star_prox(const MorphismTable& g, const MorphismTable& f);
/// Plain function composition g ∘ f. Throws `DomainMismatch`.
MorphismTable compose_plain(const MorphismTable& g, const MorphismTable& f);

MorphismTable identity_map(const AlgebraPtr& m);
MorphismTable id_raney(const AlgebraPtr& m);
MorphismTable id_prox(const AlgebraPtr& m);

/// f̂(a) = ⋁{f(x) : x ∈ LC(dom), x ≤ a}. Throws `PreconditionUnmet` unless f
/// is a Raney morphism.
MorphismTable hat(const MorphismTable& f);

struct DerivedProperties {
  AxiomCheck neg_on_saturated{"neg-on-saturated"};
  AxiomCheck boolean_on_generated{"boolean-on-generated"};
  AxiomCheck lc_to_lc{"lc-to-lc"};
  bool ok() const { return neg_on_saturated.pass && boolean_on_generated.pass && lc_to_lc.pass; }
};
/// Consequences of the Raney axioms, re-checked pointwise. Throws
/// `PreconditionUnmet` unless f is a Raney morphism.
DerivedProperties derived_properties(const MorphismTable& f);

/// All MT-morphisms dom -> cod. A complete boolean morphism is fixed by
/// choosing, for each atom of cod, the atom of dom whose image contains it.
std::vector<MorphismTable> mt_morphisms(const AlgebraPtr& dom, const AlgebraPtr& cod);

}  // namespace raneykit
