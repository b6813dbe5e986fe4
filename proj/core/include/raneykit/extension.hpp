#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "raneykit/completion.hpp"
#include "raneykit/morphism.hpp"

namespace raneykit {

// ---- Raney extensions ----------------------------------------------------------

struct ExtensionCertificate {
  bool coframe = false;
  bool subframe = false;
  bool meet_generating = false;
  bool distributive = false;        // a ∧ ⋁S = ⋁{a ∧ s} for S ⊆ L
  bool carrier_is_subframe = false;  // C = L, forced by meet-generation when C is finite
  std::string note;
};

/// A pair (C, L): C a finite distributive lattice and L a meet-generating
/// subframe of C whose joins distribute over meets of C.
class RaneyExtension {
 public:
  const FiniteLattice& coframe() const { return *coframe_; }
  const LatticePtr& coframe_ptr() const { return coframe_; }
  const Subset& subframe() const { return subframe_; }
  const ExtensionCertificate& certificate() const { return cert_; }
  const std::string& name() const { return name_; }
  std::size_t size() const { return coframe_->size(); }

  friend bool operator==(const RaneyExtension& a, const RaneyExtension& b) {
    return a.subframe_ == b.subframe_ && (a.coframe_ == b.coframe_ || *a.coframe_ == *b.coframe_);
  }

 private:
  friend std::shared_ptr<const RaneyExtension> validate_extension(LatticePtr, Subset, std::string);

  LatticePtr coframe_;
  Subset subframe_;
  ExtensionCertificate cert_;
  std::string name_;
};

using ExtensionPtr = std::shared_ptr<const RaneyExtension>;

/// Errors: `NotCoframe`, `NotASubframe`, `NotMeetGenerating`,
/// `DistributivityFailure`, each with a witness.
ExtensionPtr validate_extension(LatticePtr c, Subset l, std::string name = {});

bool same_extension(const ExtensionPtr& a, const ExtensionPtr& b);

/// A coframe morphism C -> C' restricting to a frame morphism L -> L'.
struct ExtMorphism {
  ExtensionPtr dom;
  ExtensionPtr cod;
  std::vector<Elem> map;
  std::string name;

  Elem operator()(Elem a) const { return map[a]; }
  friend bool operator==(const ExtMorphism& f, const ExtMorphism& g);
};

/// Range-checked constructor; does not validate. Throws `PreconditionUnmet`.
ExtMorphism make_ext_morphism(ExtensionPtr dom, ExtensionPtr cod, std::vector<Elem> map, std::string name = {});
/// Ids: "coframe" (bounds, binary meets and joins on C), "subframe" (L into L').
ValidationReport check_ext_morphism(const ExtMorphism& h);
ExtMorphism ext_identity(const ExtensionPtr& r);
/// g ∘ f. Throws `DomainMismatch`.
ExtMorphism ext_compose(const ExtMorphism& g, const ExtMorphism& f);
/// Inverse table of a bijective extension morphism whose inverse is again an
/// extension morphism.
std::optional<ExtMorphism> ext_inverse(const ExtMorphism& h);
bool is_ext_iso(const ExtMorphism& h);

/// A map between two lattices (used for bounded-lattice and frame maps).
struct LatticeMap {
  LatticePtr dom;
  LatticePtr cod;
  std::vector<Elem> map;
  Elem operator()(Elem a) const { return map[a]; }
  friend bool operator==(const LatticeMap& f, const LatticeMap& g) {
    return f.map == g.map && (f.dom == g.dom || *f.dom == *g.dom) && (f.cod == g.cod || *f.cod == *g.cod);
  }
};
bool is_bounded_lattice_hom(const LatticeMap& h);

/// All bounded lattice homomorphisms between finite distributive lattices,
/// obtained from monotone maps J(d2) -> J(d1) and verified.
std::vector<LatticeMap> bounded_lattice_homs(const LatticePtr& d1, const LatticePtr& d2);

// ---- the functor R -----------------------------------------------------------

/// R M = (S M, O M). Element k of the coframe is the k-th saturated element of M.
ExtensionPtr functor_R_obj(const AlgebraPtr& m);
/// Restriction of a Raney morphism to saturated elements. Throws
/// `PreconditionUnmet` unless f is a Raney morphism.
ExtMorphism functor_R_mor(const MorphismTable& f);
ExtMorphism functor_R_mor(const MorphismTable& f, const ExtensionPtr& rdom, const ExtensionPtr& rcod);

// ---- boolean lift and the functor F ----------------------------------------------

/// 𝔅h : 2^{J(D1)} -> 2^{J(D2)} with 𝔅h ∘ e1 = e2 ∘ h, computed as preimage
/// under p(j) = ⋀{a : j ≤ h(a)}. `e1`, `e2` are boolean envelopes.
/// Throws `PreconditionUnmet` unless h is a bounded lattice homomorphism.
std::vector<Elem> boolean_lift(const Embedding& e1, const Embedding& e2, const std::vector<Elem>& h);
LatticeMap boolean_lift(const LatticeMap& h);

/// Funayama envelope of an extension with the embedding of its coframe.
struct Envelope {
  ExtensionPtr ext;
  AlgebraPtr algebra;
  Embedding embedding;  // C -> carrier of `algebra`
};
Envelope funayama_envelope(const ExtensionPtr& r);
AlgebraPtr functor_F_obj(const ExtensionPtr& r);
/// 𝓕h(a) = ⋁{𝔅h(x) : x ∈ 𝔅C, x ≤ a}.
MorphismTable functor_F_mor(const ExtMorphism& h, const Envelope& fdom, const Envelope& fcod);
MorphismTable functor_F_mor(const ExtMorphism& h);

// ---- identification of 𝔅𝔖M inside 𝓕R M, and ζ, φ, ρ ---------------------------------

struct Identification {
  static constexpr Elem none = std::numeric_limits<Elem>::max();

  AlgebraPtr algebra;        // M
  ExtensionPtr raney;        // R M
  Envelope hull;             // 𝓕 R M
  std::vector<Elem> iota;    // M -> hull carrier on 𝔅𝔖M, `none` elsewhere
};

/// Matches each atom α of 𝔅𝔖M with ⋀{s ∈ S M : α ≤ s}. Throws
/// `IdentificationConflict` if the matching is not a bijection onto J(S M),
/// does not extend the Birkhoff embedding, or is not a boolean morphism.
Identification identify(const AlgebraPtr& m);

/// ζ_M : 𝓕R M -> M.
MorphismTable zeta(const Identification& id);
/// φ_M : M -> 𝓕R M.
MorphismTable phi(const Identification& id);
/// ρ_R : R -> R 𝓕 R, sending c to the saturated element e(c).
ExtMorphism rho(const Envelope& env);
ExtMorphism rho(const Envelope& env, const ExtensionPtr& rf);

// ---- laws ----------------------------------------------------------------------

struct LawCheck {
  bool ok = true;
  std::vector<Elem> witness;
  std::string detail;
  explicit operator bool() const { return ok; }
};

/// star(ζ, φ) = id_raney(M) and star(φ, ζ) = id_raney(𝓕R M).
LawCheck check_zeta_phi_inverse(const Identification& id);
/// ρ_{R2} ∘ h = R𝓕h ∘ ρ_{R1}.
LawCheck check_rho_naturality(const ExtMorphism& h);
LawCheck check_rho_naturality(const ExtMorphism& h, const ExtMorphism& rho_dom, const ExtMorphism& rho_cod);
/// ζ_{M2} ⋆ 𝓕Rg = g ⋆ ζ_{M1}.
LawCheck check_zeta_naturality(const MorphismTable& g);
LawCheck check_zeta_naturality(const MorphismTable& g, const MorphismTable& zeta_dom, const MorphismTable& zeta_cod);
/// Rζ_M ∘ ρ_{RM} = identity on R M.
LawCheck check_unit_triangle(const AlgebraPtr& m);
/// ζ_{𝓕R} ⋆ 𝓕ρ_R = id_raney(𝓕R).
LawCheck check_counit_triangle(const ExtensionPtr& r);
/// Both triangles.
LawCheck check_triangles(const AlgebraPtr& m, const ExtensionPtr& r);

// ---- I, U and O ------------------------------------------------------------------

MorphismTable functor_I(const MorphismTable& f);
/// Restriction L -> L' as a map of the induced lattices. Throws `PreconditionUnmet`.
LatticeMap functor_U(const ExtMorphism& h);
/// Restriction O M -> O M' of a proximity morphism. Throws `PreconditionUnmet`.
LatticeMap functor_O(const MorphismTable& f);
/// U(R f) = O(I f).
LawCheck check_square(const MorphismTable& f);

// ---- isomorphisms, monos, epis ---------------------------------------------------

struct IsoCertificate {
  bool iso = false;
  std::optional<MorphismTable> inverse;
  std::string reason;
};
/// R f must be an extension isomorphism; the inverse ζ ⋆ 𝓕((Rf)⁻¹) ⋆ φ is then
/// built and both composites are compared with id_raney.
/// Throws `PreconditionUnmet` unless f is a Raney morphism.
IsoCertificate rmt_iso_certificate(const MorphismTable& f);
bool is_rmt_iso(const MorphismTable& f);
/// Bijective, order preserving and reflecting.
bool is_order_iso(const MorphismTable& f);
/// An order-isomorphism that carries the opens of dom onto the opens of cod,
/// i.e. an isomorphism of MT-algebras.
bool is_mt_iso(const MorphismTable& f);

/// Mono/epi relative to a finite list of probe morphisms: for probes g1, g2
/// with the right endpoints, f ⋆ g1 = f ⋆ g2 (resp. g1 ⋆ f = g2 ⋆ f) implies g1 = g2.
bool is_universe_mono(const MorphismTable& f, std::span<const MorphismTable> probes);
bool is_universe_epi(const MorphismTable& f, std::span<const MorphismTable> probes);
bool is_universe_mono(const ExtMorphism& f, std::span<const ExtMorphism> probes);
bool is_universe_epi(const ExtMorphism& f, std::span<const ExtMorphism> probes);

// ---- generators -------------------------------------------------------------------

/// Extension morphisms r1 -> r2: bounded lattice homs whose restriction maps L into L'.
std::vector<ExtMorphism> extension_morphisms(const ExtensionPtr& r1, const ExtensionPtr& r2);
/// ζ_{M'} ⋆ 𝓕h ⋆ φ_M for an extension morphism h : R M -> R M'.
MorphismTable raney_from_extension_morphism(const ExtMorphism& h, const Identification& dom,
                                            const Identification& cod);

}  // namespace raneykit
