#include "raneykit/extension.hpp"

#include <algorithm>

namespace raneykit {

namespace {

constexpr Elem kNone = Identification::none;

/// positions[x] = rank of x among the members of s, or kNone.
std::vector<Elem> positions(const Subset& s) {
  std::vector<Elem> out(s.universe(), kNone);
  Elem k = 0;
  s.for_each([&](Elem x) { out[x] = k++; });
  return out;
}

std::string label(const std::string& prefix, const std::string& name) {
  return name.empty() ? std::string{} : prefix + "(" + name + ")";
}

void require_raney(const MorphismTable& f, const char* what) {
  const auto report = check_raney_morphism(f);
  if (!report.ok()) {
    const auto& first = report.at(report.failed().front());
    throw Error(ErrorCode::PreconditionUnmet, std::string(what) + " needs a Raney morphism; " + first.id + " fails",
                first.witness);
  }
}

void require_ext_morphism(const ExtMorphism& h, const char* what) {
  const auto report = check_ext_morphism(h);
  if (!report.ok()) {
    const auto& first = report.at(report.failed().front());
    throw Error(ErrorCode::PreconditionUnmet, std::string(what) + " needs an extension morphism; " + first.id + " fails",
                first.witness);
  }
}

LawCheck first_difference(const std::vector<Elem>& lhs, const std::vector<Elem>& rhs, std::string detail) {
  LawCheck c;
  if (lhs.size() != rhs.size()) {
    c.ok = false;
    c.detail = detail + ": tables differ in length";
    return c;
  }
  for (Elem a = 0; a < lhs.size(); ++a)
    if (lhs[a] != rhs[a]) {
      c.ok = false;
      c.witness = {a, lhs[a], rhs[a]};
      c.detail = std::move(detail);
      return c;
    }
  return c;
}

}  // namespace

// ---- extensions ------------------------------------------------------------------

ExtensionPtr validate_extension(LatticePtr c, Subset l, std::string name) {
  if (!c) throw Error(ErrorCode::PreconditionUnmet, "null coframe");
  const FiniteLattice& lat = *c;
  if (l.universe() != lat.size()) throw Error(ErrorCode::PreconditionUnmet, "subframe does not belong to the coframe");

  ExtensionCertificate cert;
  if (auto w = distributivity_failure(lat))
    throw Error(ErrorCode::NotCoframe, "carrier is not distributive", {w->a, w->b, w->c});
  cert.coframe = true;

  const auto sub = check_subframe(lat, l);
  if (!sub.ok) throw Error(ErrorCode::NotASubframe, "not a subframe (" + sub.failure + ")", sub.witness);
  cert.subframe = true;

  for (Elem x = 0; x < lat.size(); ++x)
    if (meet_above(lat, l, x) != x)
      throw Error(ErrorCode::NotMeetGenerating, lat.name(x) + " is not a meet of subframe elements", {x});
  cert.meet_generating = true;

  // Finite S ⊆ L reduce to the empty and binary cases, since L is join-closed.
  const auto members = l.elements();
  for (Elem a = 0; a < lat.size(); ++a)
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t k = i + 1; k < members.size(); ++k) {
        const Elem s = members[i], t = members[k];
        if (lat.meet(a, lat.join(s, t)) != lat.join(lat.meet(a, s), lat.meet(a, t)))
          throw Error(ErrorCode::DistributivityFailure, "meet does not distribute over a subframe join", {a, s, t});
      }
  cert.distributive = true;

  // L contains top and is meet-closed, so every meet of L-elements lies in L.
  cert.carrier_is_subframe = l.count() == lat.size();
  if (!cert.carrier_is_subframe)
    throw Error(ErrorCode::AxiomViolation, "meet-generating subframe of a finite lattice is not the whole carrier");
  cert.note = "finite carrier: distributivity gives both infinite distributive laws; meet-generation forces C = L";

  auto r = std::make_shared<RaneyExtension>();
  r->coframe_ = std::move(c);
  r->subframe_ = std::move(l);
  r->cert_ = std::move(cert);
  r->name_ = std::move(name);
  return r;
}

bool same_extension(const ExtensionPtr& a, const ExtensionPtr& b) { return a == b || (a && b && *a == *b); }

bool operator==(const ExtMorphism& f, const ExtMorphism& g) {
  return f.map == g.map && same_extension(f.dom, g.dom) && same_extension(f.cod, g.cod);
}

ExtMorphism make_ext_morphism(ExtensionPtr dom, ExtensionPtr cod, std::vector<Elem> map, std::string name) {
  if (!dom || !cod) throw Error(ErrorCode::PreconditionUnmet, "morphism endpoints must be set");
  if (map.size() != dom->size()) throw Error(ErrorCode::PreconditionUnmet, "table length does not match the domain");
  for (Elem a = 0; a < map.size(); ++a)
    if (map[a] >= cod->size()) throw Error(ErrorCode::PreconditionUnmet, "image out of range", {a});
  return ExtMorphism{std::move(dom), std::move(cod), std::move(map), std::move(name)};
}

ValidationReport check_ext_morphism(const ExtMorphism& h) {
  ValidationReport r{"extension", {{"coframe"}, {"subframe"}}};
  const FiniteLattice& d = h.dom->coframe();
  const FiniteLattice& c = h.cod->coframe();
  auto fail = [](AxiomCheck& check, std::vector<Elem> w, std::string detail) {
    if (!check.pass) return;
    check.pass = false;
    check.witness = std::move(w);
    check.detail = std::move(detail);
  };
  AxiomCheck& co = r.checks[0];
  if (h(d.bottom()) != c.bottom()) fail(co, {d.bottom()}, "bottom not preserved");
  if (h(d.top()) != c.top()) fail(co, {d.top()}, "top not preserved");
  for (Elem a = 0; a < d.size() && co.pass; ++a)
    for (Elem b = a + 1; b < d.size() && co.pass; ++b) {
      if (h(d.meet(a, b)) != c.meet(h(a), h(b))) fail(co, {a, b}, "meet of " + d.name(a) + ", " + d.name(b));
      if (h(d.join(a, b)) != c.join(h(a), h(b))) fail(co, {a, b}, "join of " + d.name(a) + ", " + d.name(b));
    }
  AxiomCheck& sub = r.checks[1];
  const auto members = h.dom->subframe().elements();
  for (Elem l : members)
    if (!h.cod->subframe().contains(h(l))) fail(sub, {l}, "image of " + d.name(l) + " leaves the subframe");
  for (std::size_t i = 0; i < members.size() && sub.pass; ++i)
    for (std::size_t k = i + 1; k < members.size() && sub.pass; ++k) {
      const Elem a = members[i], b = members[k];
      if (h(d.meet(a, b)) != c.meet(h(a), h(b)) || h(d.join(a, b)) != c.join(h(a), h(b)))
        fail(sub, {a, b}, "restriction is not a frame morphism");
    }
  return r;
}

ExtMorphism ext_identity(const ExtensionPtr& r) {
  std::vector<Elem> map(r->size());
  for (Elem a = 0; a < r->size(); ++a) map[a] = a;
  return ExtMorphism{r, r, std::move(map), "1"};
}

ExtMorphism ext_compose(const ExtMorphism& g, const ExtMorphism& f) {
  if (!same_extension(f.cod, g.dom)) throw Error(ErrorCode::DomainMismatch, "extension morphisms are not composable");
  std::vector<Elem> map(f.map.size());
  for (Elem a = 0; a < map.size(); ++a) map[a] = g(f(a));
  return ExtMorphism{f.dom, g.cod, std::move(map), {}};
}

std::optional<ExtMorphism> ext_inverse(const ExtMorphism& h) {
  if (h.dom->size() != h.cod->size()) return std::nullopt;
  std::vector<Elem> inv(h.cod->size(), kNone);
  for (Elem a = 0; a < h.map.size(); ++a) {
    if (inv[h(a)] != kNone) return std::nullopt;
    inv[h(a)] = a;
  }
  ExtMorphism g{h.cod, h.dom, std::move(inv), label("inv", h.name)};
  if (!check_ext_morphism(g).ok()) return std::nullopt;
  return g;
}

bool is_ext_iso(const ExtMorphism& h) { return check_ext_morphism(h).ok() && ext_inverse(h).has_value(); }

bool is_bounded_lattice_hom(const LatticeMap& h) {
  const FiniteLattice& d = *h.dom;
  const FiniteLattice& c = *h.cod;
  if (h.map.size() != d.size()) return false;
  for (Elem a = 0; a < d.size(); ++a)
    if (h(a) >= c.size()) return false;
  if (h(d.bottom()) != c.bottom() || h(d.top()) != c.top()) return false;
  for (Elem a = 0; a < d.size(); ++a)
    for (Elem b = a + 1; b < d.size(); ++b)
      if (h(d.meet(a, b)) != c.meet(h(a), h(b)) || h(d.join(a, b)) != c.join(h(a), h(b))) return false;
  return true;
}

std::vector<LatticeMap> bounded_lattice_homs(const LatticePtr& d1, const LatticePtr& d2) {
  const auto j1 = join_irreducibles(*d1).elements;
  const auto j2 = join_irreducibles(*d2).elements;
  std::vector<LatticeMap> out;
  if (j1.empty() && !j2.empty()) return out;
  std::vector<std::size_t> choice(j2.size(), 0);
  while (true) {
    bool monotone = true;
    for (std::size_t x = 0; x < j2.size() && monotone; ++x)
      for (std::size_t y = 0; y < j2.size() && monotone; ++y)
        if (d2->leq(j2[x], j2[y]) && !d1->leq(j1[choice[x]], j1[choice[y]])) monotone = false;
    if (monotone) {
      LatticeMap h{d1, d2, std::vector<Elem>(d1->size())};
      for (Elem a = 0; a < d1->size(); ++a) {
        Elem acc = d2->bottom();
        for (std::size_t k = 0; k < j2.size(); ++k)
          if (d1->leq(j1[choice[k]], a)) acc = d2->join(acc, j2[k]);
        h.map[a] = acc;
      }
      if (is_bounded_lattice_hom(h)) out.push_back(std::move(h));
    }
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == j1.size()) choice[pos++] = 0;
    if (pos == choice.size()) break;
  }
  return out;
}

// ---- R -----------------------------------------------------------------------------

ExtensionPtr functor_R_obj(const AlgebraPtr& m) {
  const auto& cls = m->classes();
  auto c = std::make_shared<const FiniteLattice>(induced_lattice(m->lattice(), cls.saturated));
  const auto pos = positions(cls.saturated);
  Subset l(c->size());
  cls.opens.for_each([&](Elem u) { l.insert(pos[u]); });
  return validate_extension(std::move(c), std::move(l), label("R", m->name()));
}

ExtMorphism functor_R_mor(const MorphismTable& f, const ExtensionPtr& rdom, const ExtensionPtr& rcod) {
  require_raney(f, "R");
  const auto dom_sat = f.dom->classes().saturated.elements();
  const auto cod_pos = positions(f.cod->classes().saturated);
  std::vector<Elem> map(dom_sat.size());
  for (std::size_t k = 0; k < dom_sat.size(); ++k) map[k] = cod_pos[f(dom_sat[k])];
  return make_ext_morphism(rdom, rcod, std::move(map), label("R", f.name));
}

ExtMorphism functor_R_mor(const MorphismTable& f) {
  return functor_R_mor(f, functor_R_obj(f.dom), functor_R_obj(f.cod));
}

// ---- boolean lift and F ------------------------------------------------------------

std::vector<Elem> boolean_lift(const Embedding& e1, const Embedding& e2, const std::vector<Elem>& h) {
  const FiniteLattice& d1 = *e1.dom;
  const FiniteLattice& d2 = *e2.dom;
  if (!is_bounded_lattice_hom(LatticeMap{e1.dom, e2.dom, h}))
    throw Error(ErrorCode::PreconditionUnmet, "boolean lift needs a bounded lattice homomorphism");
  const auto j1 = join_irreducibles(d1);
  const auto j2 = join_irreducibles(d2);
  // Spectral map on join-irreducibles, as bit positions.
  std::vector<std::size_t> spectral(j2.elements.size());
  for (std::size_t k = 0; k < j2.elements.size(); ++k) {
    Elem p = d1.top();
    for (Elem a = 0; a < d1.size(); ++a)
      if (d2.leq(j2.elements[k], h[a])) p = d1.meet(p, a);
    const auto at = j1.position(p);
    if (!at) throw Error(ErrorCode::PreconditionUnmet, "spectral image is not join-irreducible", {p});
    spectral[k] = *at;
  }
  std::vector<Elem> lift(e1.cod->size());
  for (std::size_t x = 0; x < lift.size(); ++x) {
    std::size_t y = 0;
    for (std::size_t k = 0; k < spectral.size(); ++k)
      if (x >> spectral[k] & 1U) y |= std::size_t{1} << k;
    lift[x] = static_cast<Elem>(y);
  }
  return lift;
}

LatticeMap boolean_lift(const LatticeMap& h) {
  const auto e1 = boolean_envelope(h.dom);
  const auto e2 = boolean_envelope(h.cod);
  return LatticeMap{e1.cod, e2.cod, boolean_lift(e1, e2, h.map)};
}

Envelope funayama_envelope(const ExtensionPtr& r) {
  const Embedding boolean = boolean_envelope(r->coframe_ptr());
  const Embedding completion = macneille_completion(boolean.cod);
  Embedding e{r->coframe_ptr(), completion.cod, std::vector<Elem>(r->size()), {}, {}};
  for (Elem a = 0; a < r->size(); ++a) e.map[a] = completion(boolean(a));
  e.flags = certify_embedding(*e.dom, *e.cod, e.map);
  e.certificate = boolean.certificate + "; " + completion.certificate;

  const FiniteLattice& carrier = *e.cod;
  const FiniteLattice& c = r->coframe();
  std::vector<Elem> box(carrier.size());
  for (Elem x = 0; x < carrier.size(); ++x) {
    Elem acc = c.bottom();
    r->subframe().for_each([&](Elem l) {
      if (carrier.leq(e.map[l], x)) acc = c.join(acc, l);
    });
    box[x] = e.map[acc];
  }
  auto algebra = validate_interior(e.cod, std::move(box), label("F", r->name()));
  return Envelope{r, std::move(algebra), std::move(e)};
}

AlgebraPtr functor_F_obj(const ExtensionPtr& r) { return funayama_envelope(r).algebra; }

MorphismTable functor_F_mor(const ExtMorphism& h, const Envelope& fdom, const Envelope& fcod) {
  require_ext_morphism(h, "F");
  if (!same_extension(h.dom, fdom.ext) || !same_extension(h.cod, fcod.ext))
    throw Error(ErrorCode::DomainMismatch, "envelopes do not match the morphism endpoints");
  const auto lift = boolean_lift(fdom.embedding, fcod.embedding, h.map);
  const MTAlgebra& d = *fdom.algebra;
  const MTAlgebra& c = *fcod.algebra;
  Subset image(d.size());
  for (Elem e : fdom.embedding.map) image.insert(e);
  const Subset generated = boolean_closure(d.lattice(), d.neg_table(), image);
  std::vector<Elem> map(d.size());
  for (Elem a = 0; a < d.size(); ++a) {
    Elem acc = c.bottom();
    const Bits below = generated.bits() & d.lattice().down(a);
    for (auto x = below.find_first(); x != Bits::npos; x = below.find_next(x)) acc = c.join(acc, lift[x]);
    map[a] = acc;
  }
  return MorphismTable{fdom.algebra, fcod.algebra, std::move(map), label("F", h.name)};
}

MorphismTable functor_F_mor(const ExtMorphism& h) {
  return functor_F_mor(h, funayama_envelope(h.dom), funayama_envelope(h.cod));
}

// ---- identification, ζ, φ, ρ --------------------------------------------------------

Identification identify(const AlgebraPtr& m) {
  Identification id{m, functor_R_obj(m), {}, {}};
  id.hull = funayama_envelope(id.raney);
  const FiniteLattice& b = m->lattice();
  const auto& cls = m->classes();
  const auto gen = cls.gen_boolean.elements();
  const auto sat_pos = positions(cls.saturated);
  const auto irr = join_irreducibles(id.raney->coframe());
  auto conflict = [](const std::string& what, std::vector<Elem> w) {
    throw Error(ErrorCode::IdentificationConflict, what, std::move(w));
  };

  std::vector<Elem> gen_atoms;
  for (Elem x : gen) {
    if (x == b.bottom()) continue;
    const bool minimal = std::none_of(gen.begin(), gen.end(), [&](Elem y) { return y != b.bottom() && b.lt(y, x); });
    if (minimal) gen_atoms.push_back(x);
  }
  if (gen_atoms.size() != irr.elements.size())
    conflict("generated subalgebra has " + std::to_string(gen_atoms.size()) + " atoms but the saturated lattice has " +
                 std::to_string(irr.elements.size()) + " join-irreducibles",
             {});

  std::vector<std::size_t> bit(gen_atoms.size());
  std::vector<bool> used(irr.elements.size(), false);
  for (std::size_t i = 0; i < gen_atoms.size(); ++i) {
    const Elem s = meet_above(b, cls.saturated, gen_atoms[i]);
    const auto at = irr.position(sat_pos[s]);
    if (!at) conflict("saturated hull of an atom is not join-irreducible", {gen_atoms[i], s});
    if (used[*at]) conflict("two atoms share a join-irreducible", {gen_atoms[i], s});
    used[*at] = true;
    bit[i] = *at;
  }

  id.iota.assign(m->size(), kNone);
  for (Elem x : gen) {
    std::size_t mask = 0;
    for (std::size_t i = 0; i < gen_atoms.size(); ++i)
      if (b.leq(gen_atoms[i], x)) mask |= std::size_t{1} << bit[i];
    id.iota[x] = static_cast<Elem>(mask);
  }

  cls.saturated.for_each([&](Elem s) {
    if (id.iota[s] != id.hull.embedding(sat_pos[s])) conflict("identification does not extend the Birkhoff embedding", {s});
  });
  const MTAlgebra& hull = *id.hull.algebra;
  for (Elem x : gen) {
    if (id.iota[m->neg(x)] != hull.neg(id.iota[x])) conflict("identification does not preserve complements", {x});
    for (Elem y : gen)
      if (id.iota[b.meet(x, y)] != hull.meet(id.iota[x], id.iota[y]) ||
          id.iota[b.join(x, y)] != hull.join(id.iota[x], id.iota[y]))
        conflict("identification is not a lattice morphism", {x, y});
  }
  return id;
}

MorphismTable zeta(const Identification& id) {
  const MTAlgebra& m = *id.algebra;
  const MTAlgebra& hull = *id.hull.algebra;
  std::vector<Elem> map(hull.size());
  for (Elem a = 0; a < hull.size(); ++a) {
    Elem acc = m.bottom();
    m.classes().gen_boolean.for_each([&](Elem x) {
      if (hull.leq(id.iota[x], a)) acc = m.join(acc, x);
    });
    map[a] = acc;
  }
  return MorphismTable{id.hull.algebra, id.algebra, std::move(map), label("zeta", m.name())};
}

MorphismTable phi(const Identification& id) {
  const MTAlgebra& m = *id.algebra;
  const MTAlgebra& hull = *id.hull.algebra;
  std::vector<Elem> map(m.size());
  for (Elem a = 0; a < m.size(); ++a) {
    Elem acc = hull.bottom();
    const Bits below = m.classes().gen_boolean.bits() & m.lattice().down(a);
    for (auto x = below.find_first(); x != Bits::npos; x = below.find_next(x)) acc = hull.join(acc, id.iota[x]);
    map[a] = acc;
  }
  return MorphismTable{id.algebra, id.hull.algebra, std::move(map), label("phi", m.name())};
}

ExtMorphism rho(const Envelope& env, const ExtensionPtr& rf) {
  const auto pos = positions(env.algebra->classes().saturated);
  std::vector<Elem> map(env.ext->size());
  for (Elem c = 0; c < map.size(); ++c) {
    map[c] = pos[env.embedding(c)];
    if (map[c] == kNone) throw Error(ErrorCode::AxiomViolation, "embedded element is not saturated", {c});
  }
  return make_ext_morphism(env.ext, rf, std::move(map), label("rho", env.ext->name()));
}

ExtMorphism rho(const Envelope& env) { return rho(env, functor_R_obj(env.algebra)); }

// ---- laws ---------------------------------------------------------------------------

LawCheck check_zeta_phi_inverse(const Identification& id) {
  const auto z = zeta(id);
  const auto p = phi(id);
  auto c = first_difference(star(z, p).map, id_raney(id.algebra).map, "zeta * phi != id on M");
  if (!c) return c;
  return first_difference(star(p, z).map, id_raney(id.hull.algebra).map, "phi * zeta != id on FRM");
}

LawCheck check_rho_naturality(const ExtMorphism& h, const ExtMorphism& rho_dom, const ExtMorphism& rho_cod) {
  const auto fh = functor_F_mor(h, funayama_envelope(h.dom), funayama_envelope(h.cod));
  const auto rfh = functor_R_mor(fh, rho_dom.cod, rho_cod.cod);
  return first_difference(ext_compose(rho_cod, h).map, ext_compose(rfh, rho_dom).map, "rho square");
}

LawCheck check_rho_naturality(const ExtMorphism& h) {
  return check_rho_naturality(h, rho(funayama_envelope(h.dom)), rho(funayama_envelope(h.cod)));
}

LawCheck check_zeta_naturality(const MorphismTable& g, const MorphismTable& zeta_dom, const MorphismTable& zeta_cod) {
  const auto rdom = functor_R_obj(g.dom);
  const auto rcod = functor_R_obj(g.cod);
  const auto frg = functor_F_mor(functor_R_mor(g, rdom, rcod), funayama_envelope(rdom), funayama_envelope(rcod));
  return first_difference(star(zeta_cod, frg).map, star(g, zeta_dom).map, "zeta square");
}

LawCheck check_zeta_naturality(const MorphismTable& g) {
  return check_zeta_naturality(g, zeta(identify(g.dom)), zeta(identify(g.cod)));
}

LawCheck check_unit_triangle(const AlgebraPtr& m) {
  const auto id = identify(m);
  const auto rf = functor_R_obj(id.hull.algebra);
  const auto rz = functor_R_mor(zeta(id), rf, id.raney);
  return first_difference(ext_compose(rz, rho(id.hull, rf)).map, ext_identity(id.raney).map, "R zeta . rho != 1");
}

LawCheck check_counit_triangle(const ExtensionPtr& r) {
  const auto env = funayama_envelope(r);
  const auto id = identify(env.algebra);
  const auto f_rho = functor_F_mor(rho(env, id.raney), env, id.hull);
  return first_difference(star(zeta(id), f_rho).map, id_raney(env.algebra).map, "zeta * F rho != id");
}

LawCheck check_triangles(const AlgebraPtr& m, const ExtensionPtr& r) {
  auto c = check_unit_triangle(m);
  if (!c) return c;
  return check_counit_triangle(r);
}

// ---- I, U, O ----------------------------------------------------------------------

MorphismTable functor_I(const MorphismTable& f) { return hat(f); }

LatticeMap functor_U(const ExtMorphism& h) {
  require_ext_morphism(h, "U");
  auto dom = std::make_shared<const FiniteLattice>(induced_lattice(h.dom->coframe(), h.dom->subframe()));
  auto cod = std::make_shared<const FiniteLattice>(induced_lattice(h.cod->coframe(), h.cod->subframe()));
  const auto cod_pos = positions(h.cod->subframe());
  const auto members = h.dom->subframe().elements();
  std::vector<Elem> map(members.size());
  for (std::size_t k = 0; k < members.size(); ++k) map[k] = cod_pos[h(members[k])];
  return LatticeMap{std::move(dom), std::move(cod), std::move(map)};
}

LatticeMap functor_O(const MorphismTable& f) {
  const auto& dom_opens = f.dom->opens();
  const auto& cod_opens = f.cod->opens();
  const auto cod_pos = positions(cod_opens);
  const auto members = dom_opens.elements();
  std::vector<Elem> map(members.size());
  for (std::size_t k = 0; k < members.size(); ++k) {
    map[k] = cod_pos[f(members[k])];
    if (map[k] == kNone) throw Error(ErrorCode::PreconditionUnmet, "image of an open element is not open", {members[k]});
  }
  return LatticeMap{std::make_shared<const FiniteLattice>(induced_lattice(f.dom->lattice(), dom_opens)),
                    std::make_shared<const FiniteLattice>(induced_lattice(f.cod->lattice(), cod_opens)), std::move(map)};
}

LawCheck check_square(const MorphismTable& f) {
  const auto via_r = functor_U(functor_R_mor(f));
  const auto via_i = functor_O(functor_I(f));
  auto c = first_difference(via_r.map, via_i.map, "U R f != O I f");
  if (c && !(*via_r.dom == *via_i.dom && *via_r.cod == *via_i.cod)) {
    c.ok = false;
    c.detail = "U R f and O I f have different endpoints";
  }
  return c;
}

// ---- isomorphisms ----------------------------------------------------------------

IsoCertificate rmt_iso_certificate(const MorphismTable& f) {
  require_raney(f, "iso check");
  IsoCertificate cert;
  const auto rf = functor_R_mor(f);
  const auto inv = ext_inverse(rf);
  if (!inv) {
    cert.reason = "R f is not an isomorphism of extensions";
    return cert;
  }
  const auto dom_id = identify(f.dom);
  const auto cod_id = identify(f.cod);
  const auto f_inv = functor_F_mor(*inv, cod_id.hull, dom_id.hull);
  auto g = star(zeta(dom_id), star(f_inv, phi(cod_id)));
  g.name = label("inv", f.name);
  if (!(star(g, f) == id_raney(f.dom)) || !(star(f, g) == id_raney(f.cod))) {
    cert.reason = "constructed inverse does not compose to the identities";
    return cert;
  }
  cert.iso = true;
  cert.inverse = std::move(g);
  return cert;
}

bool is_rmt_iso(const MorphismTable& f) { return rmt_iso_certificate(f).iso; }

bool is_order_iso(const MorphismTable& f) {
  const MTAlgebra& d = *f.dom;
  const MTAlgebra& c = *f.cod;
  if (d.size() != c.size()) return false;
  std::vector<bool> hit(c.size(), false);
  for (Elem a = 0; a < d.size(); ++a) {
    if (hit[f(a)]) return false;
    hit[f(a)] = true;
  }
  for (Elem a = 0; a < d.size(); ++a)
    for (Elem b = 0; b < d.size(); ++b)
      if (d.leq(a, b) != c.leq(f(a), f(b))) return false;
  return true;
}

bool is_mt_iso(const MorphismTable& f) {
  if (!is_order_iso(f)) return false;
  for (Elem a = 0; a < f.dom->size(); ++a)
    if (f.dom->opens().contains(a) != f.cod->opens().contains(f(a))) return false;
  return true;
}

namespace {

template <class Table, class Same, class Compose>
bool cancels(std::span<const Table> probes, Same&& fits, Compose&& compose) {
  for (std::size_t i = 0; i < probes.size(); ++i) {
    if (!fits(probes[i])) continue;
    const auto ci = compose(probes[i]);
    for (std::size_t k = i + 1; k < probes.size(); ++k) {
      if (!fits(probes[k]) || probes[i] == probes[k]) continue;
      if (ci == compose(probes[k])) return false;
    }
  }
  return true;
}

}  // namespace

bool is_universe_mono(const MorphismTable& f, std::span<const MorphismTable> probes) {
  return cancels(
      probes,
      [&](const MorphismTable& g) { return same_algebra(g.cod, f.dom); },
      [&](const MorphismTable& g) { return star(f, g); });
}

bool is_universe_epi(const MorphismTable& f, std::span<const MorphismTable> probes) {
  return cancels(
      probes,
      [&](const MorphismTable& g) { return same_algebra(g.dom, f.cod); },
      [&](const MorphismTable& g) { return star(g, f); });
}

bool is_universe_mono(const ExtMorphism& f, std::span<const ExtMorphism> probes) {
  return cancels(
      probes,
      [&](const ExtMorphism& g) { return same_extension(g.cod, f.dom); },
      [&](const ExtMorphism& g) { return ext_compose(f, g); });
}

bool is_universe_epi(const ExtMorphism& f, std::span<const ExtMorphism> probes) {
  return cancels(
      probes,
      [&](const ExtMorphism& g) { return same_extension(g.dom, f.cod); },
      [&](const ExtMorphism& g) { return ext_compose(g, f); });
}

// ---- generators ---------------------------------------------------------------------

std::vector<ExtMorphism> extension_morphisms(const ExtensionPtr& r1, const ExtensionPtr& r2) {
  std::vector<ExtMorphism> out;
  for (auto& h : bounded_lattice_homs(r1->coframe_ptr(), r2->coframe_ptr())) {
    ExtMorphism e{r1, r2, std::move(h.map), {}};
    if (check_ext_morphism(e).ok()) out.push_back(std::move(e));
  }
  return out;
}

MorphismTable raney_from_extension_morphism(const ExtMorphism& h, const Identification& dom,
                                            const Identification& cod) {
  const auto fh = functor_F_mor(h, dom.hull, cod.hull);
  return star(zeta(cod), star(fh, phi(dom)));
}

}  // namespace raneykit
