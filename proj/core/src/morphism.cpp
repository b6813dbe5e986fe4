#include "raneykit/morphism.hpp"

#include <algorithm>

namespace raneykit {

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) { return a == b || (a && b && *a == *b); }

bool operator==(const MorphismTable& f, const MorphismTable& g) {
  return f.map == g.map && same_algebra(f.dom, g.dom) && same_algebra(f.cod, g.cod);
}

MorphismTable make_morphism(AlgebraPtr dom, AlgebraPtr cod, std::vector<Elem> map, std::string name) {
  if (!dom || !cod) throw Error(ErrorCode::PreconditionUnmet, "morphism endpoints must be set");
  if (map.size() != dom->size())
    throw Error(ErrorCode::PreconditionUnmet, "table has " + std::to_string(map.size()) + " entries, domain has " +
                                                  std::to_string(dom->size()));
  for (Elem a = 0; a < map.size(); ++a)
    if (map[a] >= cod->size()) throw Error(ErrorCode::PreconditionUnmet, "image out of range", {a});
  return MorphismTable{std::move(dom), std::move(cod), std::move(map), std::move(name)};
}

// ---- reports -------------------------------------------------------------------

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

const AxiomCheck& ValidationReport::at(std::string_view id) const {
  for (const auto& c : checks)
    if (c.id == id) return c;
  throw Error(ErrorCode::PreconditionUnmet, "report has no check " + std::string(id));
}

bool ValidationReport::passes(std::string_view id) const { return at(id).pass; }

std::vector<std::string> ValidationReport::failed() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(c.id);
  return out;
}

namespace {

// Records the first failure only; later calls are no-ops once failed.
void fail(AxiomCheck& c, std::vector<Elem> witness, std::string detail) {
  if (!c.pass) return;
  c.pass = false;
  c.witness = std::move(witness);
  c.detail = std::move(detail);
}

std::string show(const MTAlgebra& m, Elem a) { return m.lattice().name(a); }

/// Bounds, binary meets and binary joins of `f` restricted to `part`, with
/// images required to land in `target`.
void check_restriction(const MorphismTable& f, const Subset& part, const Subset& target, AxiomCheck& c,
                       const char* target_name) {
  const MTAlgebra& d = *f.dom;
  const MTAlgebra& e = *f.cod;
  part.for_each([&](Elem a) {
    if (!target.contains(f(a))) fail(c, {a}, "image of " + show(d, a) + " is not " + target_name);
  });
  if (f(d.bottom()) != e.bottom()) fail(c, {d.bottom()}, "bottom not preserved");
  if (f(d.top()) != e.top()) fail(c, {d.top()}, "top not preserved");
  const auto members = part.elements();
  for (std::size_t i = 0; i < members.size() && c.pass; ++i)
    for (std::size_t k = i + 1; k < members.size() && c.pass; ++k) {
      const Elem a = members[i], b = members[k];
      if (f(d.meet(a, b)) != e.meet(f(a), f(b))) fail(c, {a, b}, "meet of " + show(d, a) + ", " + show(d, b));
      if (f(d.join(a, b)) != e.join(f(a), f(b))) fail(c, {a, b}, "join of " + show(d, a) + ", " + show(d, b));
    }
}

void check_all_meets(const MorphismTable& f, AxiomCheck& c) {
  const MTAlgebra& d = *f.dom;
  const MTAlgebra& e = *f.cod;
  if (f(d.top()) != e.top()) fail(c, {d.top()}, "empty meet not preserved");
  for (Elem a = 0; a < d.size() && c.pass; ++a)
    for (Elem b = a + 1; b < d.size() && c.pass; ++b)
      if (f(d.meet(a, b)) != e.meet(f(a), f(b))) fail(c, {a, b}, "meet of " + show(d, a) + ", " + show(d, b));
}

void check_sup_formula(const MorphismTable& f, const Subset& gen, AxiomCheck& c) {
  const MTAlgebra& d = *f.dom;
  const MTAlgebra& e = *f.cod;
  for (Elem a = 0; a < d.size() && c.pass; ++a) {
    Elem acc = e.bottom();
    const Bits below = gen.bits() & d.lattice().down(a);
    for (auto x = below.find_first(); x != Bits::npos; x = below.find_next(x)) acc = e.join(acc, f(static_cast<Elem>(x)));
    if (acc != f(a)) fail(c, {a}, "image of " + show(d, a) + " is not the join of the images below it");
  }
}

Subset join_closure(const FiniteLattice& l, const Subset& s) {
  Subset out = s;
  out.insert(l.bottom());
  bool grew = true;
  while (grew) {
    grew = false;
    const auto members = out.elements();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t k = i + 1; k < members.size(); ++k) {
        const Elem j = l.join(members[i], members[k]);
        if (!out.contains(j)) {
          out.insert(j);
          grew = true;
        }
      }
  }
  return out;
}

Elem sup_over(const MorphismTable& g, const MorphismTable& f, const Subset& gen, Elem a) {
  const MTAlgebra& c = *g.cod;
  Elem acc = c.bottom();
  const Bits below = gen.bits() & f.dom->lattice().down(a);
  for (auto x = below.find_first(); x != Bits::npos; x = below.find_next(x)) acc = c.join(acc, g(f(static_cast<Elem>(x))));
  return acc;
}

void require_composable(const MorphismTable& g, const MorphismTable& f) {
  if (!same_algebra(f.cod, g.dom))
    throw Error(ErrorCode::DomainMismatch, "codomain of " + (f.name.empty() ? std::string("f") : f.name) +
                                               " is not the domain of " + (g.name.empty() ? std::string("g") : g.name));
}

MorphismTable sup_identity(const AlgebraPtr& m, const Subset& gen, std::string name) {
  std::vector<Elem> map(m->size());
  for (Elem a = 0; a < m->size(); ++a) map[a] = join_below(m->lattice(), gen, a);
  return MorphismTable{m, m, std::move(map), std::move(name)};
}

}  // namespace

// ---- validators -----------------------------------------------------------------

ValidationReport check_mt_morphism(const MorphismTable& f) {
  const MTAlgebra& d = *f.dom;
  const MTAlgebra& e = *f.cod;
  ValidationReport r{"mt", {{"bounds"}, {"meets"}, {"joins"}, {"complement"}, {"box"}}};
  AxiomCheck& bounds = r.checks[0];
  AxiomCheck& meets = r.checks[1];
  AxiomCheck& joins = r.checks[2];
  AxiomCheck& complement = r.checks[3];
  AxiomCheck& box = r.checks[4];
  if (f(d.bottom()) != e.bottom()) fail(bounds, {d.bottom()}, "bottom not preserved");
  if (f(d.top()) != e.top()) fail(bounds, {d.top()}, "top not preserved");
  for (Elem a = 0; a < d.size(); ++a) {
    if (f(d.neg(a)) != e.neg(f(a))) fail(complement, {a}, "complement of " + show(d, a));
    if (!e.leq(f(d.box(a)), e.box(f(a)))) fail(box, {a}, "f(box a) not below box f(a) at " + show(d, a));
    for (Elem b = a + 1; b < d.size(); ++b) {
      if (f(d.meet(a, b)) != e.meet(f(a), f(b))) fail(meets, {a, b}, "meet of " + show(d, a) + ", " + show(d, b));
      if (f(d.join(a, b)) != e.join(f(a), f(b))) fail(joins, {a, b}, "join of " + show(d, a) + ", " + show(d, b));
    }
  }
  return r;
}

ValidationReport check_raney_morphism(const MorphismTable& f) {
  const auto& dc = f.dom->classes();
  const auto& cc = f.cod->classes();
  ValidationReport r{"raney", {{"R1"}, {"R2"}, {"R3"}, {"R4"}, {"R5"}}};
  check_restriction(f, dc.saturated, cc.saturated, r.checks[0], "saturated");
  check_restriction(f, dc.opens, cc.opens, r.checks[1], "open");
  check_all_meets(f, r.checks[2]);
  {
    const MTAlgebra& d = *f.dom;
    const MTAlgebra& e = *f.cod;
    const auto gen = dc.gen_boolean.elements();
    AxiomCheck& c = r.checks[3];
    if (f(d.bottom()) != e.bottom()) fail(c, {d.bottom()}, "empty join not preserved");
    for (std::size_t i = 0; i < gen.size() && c.pass; ++i)
      for (std::size_t k = i + 1; k < gen.size() && c.pass; ++k) {
        const Elem x = gen[i], y = gen[k];
        if (f(d.join(x, y)) != e.join(f(x), f(y))) fail(c, {x, y}, "join of " + show(d, x) + ", " + show(d, y));
      }
  }
  check_sup_formula(f, dc.gen_boolean, r.checks[4]);
  return r;
}

ValidationReport check_proximity_morphism(const MorphismTable& f) {
  const auto& dc = f.dom->classes();
  ValidationReport r{"proximity", {{"P1"}, {"P2"}, {"P3"}, {"P4"}}};
  check_restriction(f, dc.opens, f.cod->classes().opens, r.checks[0], "open");
  check_all_meets(f, r.checks[1]);
  {
    const MTAlgebra& d = *f.dom;
    const MTAlgebra& e = *f.cod;
    AxiomCheck& c = r.checks[2];
    if (f(d.bottom()) != e.bottom()) fail(c, {d.bottom()}, "empty join not preserved");
    const auto joins = join_closure(d.lattice(), dc.locally_closed).elements();
    for (std::size_t i = 0; i < joins.size() && c.pass; ++i)
      for (std::size_t k = i + 1; k < joins.size() && c.pass; ++k) {
        const Elem x = joins[i], y = joins[k];
        if (f(d.join(x, y)) != e.join(f(x), f(y)))
          fail(c, {x, y}, "join of locally closed joins " + show(d, x) + ", " + show(d, y));
      }
  }
  check_sup_formula(f, dc.locally_closed, r.checks[3]);
  return r;
}

R4Equivalents check_r4_equivalents(const MorphismTable& f) {
  const auto report = check_raney_morphism(f);
  for (const char* id : {"R1", "R2", "R3", "R5"})
    if (!report.passes(id)) throw Error(ErrorCode::PreconditionUnmet, std::string(id) + " fails", report.at(id).witness);
  const MTAlgebra& d = *f.dom;
  const MTAlgebra& e = *f.cod;
  const auto prec = proximity(d);
  const auto prec_cod = proximity(e);

  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem a = 0; a < d.size(); ++a)
    for (Elem b = 0; b < d.size(); ++b)
      if (prec.holds(a, b)) pairs.emplace_back(a, b);

  R4Equivalents out;
  out.r4 = report.passes("R4");
  out.two_pair = std::all_of(pairs.begin(), pairs.end(), [&](auto p1) {
    return std::all_of(pairs.begin(), pairs.end(), [&](auto p2) {
      return prec_cod.holds(f(d.join(p1.first, p2.first)), e.join(f(p1.second), f(p2.second)));
    });
  });
  out.neg_form = std::all_of(pairs.begin(), pairs.end(),
                             [&](auto p) { return prec_cod.holds(e.neg(f(d.neg(p.first))), f(p.second)); });
  return out;
}

// ---- composition and identities -------------------------------------------------

MorphismTable star(const MorphismTable& g, const MorphismTable& f) {
  require_composable(g, f);
  const Subset& gen = f.dom->classes().gen_boolean;
  std::vector<Elem> map(f.dom->size());
  for (Elem a = 0; a < map.size(); ++a) map[a] = sup_over(g, f, gen, a);
  return MorphismTable{f.dom, g.cod, std::move(map), {}};
}

MorphismTable star_prox(const MorphismTable& g, const MorphismTable& f) {
  require_composable(g, f);
  const Subset& lc = f.dom->classes().locally_closed;
  std::vector<Elem> map(f.dom->size());
  for (Elem a = 0; a < map.size(); ++a) map[a] = sup_over(g, f, lc, a);
  return MorphismTable{f.dom, g.cod, std::move(map), {}};
}

MorphismTable compose_plain(const MorphismTable& g, const MorphismTable& f) {
  require_composable(g, f);
  std::vector<Elem> map(f.dom->size());
  for (Elem a = 0; a < map.size(); ++a) map[a] = g(f(a));
  return MorphismTable{f.dom, g.cod, std::move(map), {}};
}

MorphismTable identity_map(const AlgebraPtr& m) {
  std::vector<Elem> map(m->size());
  for (Elem a = 0; a < m->size(); ++a) map[a] = a;
  return MorphismTable{m, m, std::move(map), "1"};
}

MorphismTable id_raney(const AlgebraPtr& m) { return sup_identity(m, m->classes().gen_boolean, "id"); }

MorphismTable id_prox(const AlgebraPtr& m) { return sup_identity(m, m->classes().locally_closed, "idP"); }

MorphismTable hat(const MorphismTable& f) {
  const auto report = check_raney_morphism(f);
  if (!report.ok()) {
    const auto& first = report.at(report.failed().front());
    throw Error(ErrorCode::PreconditionUnmet, "hat needs a Raney morphism; " + first.id + " fails", first.witness);
  }
  const Subset& lc = f.dom->classes().locally_closed;
  std::vector<Elem> map(f.dom->size());
  for (Elem a = 0; a < map.size(); ++a) {
    Elem acc = f.cod->bottom();
    const Bits below = lc.bits() & f.dom->lattice().down(a);
    for (auto x = below.find_first(); x != Bits::npos; x = below.find_next(x))
      acc = f.cod->join(acc, f(static_cast<Elem>(x)));
    map[a] = acc;
  }
  return MorphismTable{f.dom, f.cod, std::move(map), f.name.empty() ? std::string{} : "hat(" + f.name + ")"};
}

DerivedProperties derived_properties(const MorphismTable& f) {
  const auto report = check_raney_morphism(f);
  if (!report.ok())
    throw Error(ErrorCode::PreconditionUnmet, "derived properties need a Raney morphism",
                report.at(report.failed().front()).witness);
  const MTAlgebra& d = *f.dom;
  const MTAlgebra& e = *f.cod;
  const auto& dc = d.classes();
  const auto& cc = e.classes();
  DerivedProperties p;
  dc.saturated.for_each([&](Elem x) {
    if (f(d.neg(x)) != e.neg(f(x))) fail(p.neg_on_saturated, {x}, "f(~x) != ~f(x) at " + show(d, x));
  });
  const auto gen = dc.gen_boolean.elements();
  for (Elem x : gen) {
    if (!cc.gen_boolean.contains(f(x))) fail(p.boolean_on_generated, {x}, "image leaves the generated subalgebra");
    if (f(d.neg(x)) != e.neg(f(x))) fail(p.boolean_on_generated, {x}, "complement of " + show(d, x));
    for (Elem y : gen) {
      if (f(d.meet(x, y)) != e.meet(f(x), f(y))) fail(p.boolean_on_generated, {x, y}, "meet");
      if (f(d.join(x, y)) != e.join(f(x), f(y))) fail(p.boolean_on_generated, {x, y}, "join");
    }
  }
  dc.locally_closed.for_each([&](Elem x) {
    if (!cc.locally_closed.contains(f(x))) fail(p.lc_to_lc, {x}, "image of " + show(d, x) + " is not locally closed");
  });
  return p;
}

std::vector<MorphismTable> mt_morphisms(const AlgebraPtr& dom, const AlgebraPtr& cod) {
  const FiniteLattice& dl = dom->lattice();
  const FiniteLattice& cl = cod->lattice();
  const auto dom_atoms = atoms(dl);
  const auto cod_atoms = atoms(cl);
  std::vector<MorphismTable> out;
  if (dom_atoms.empty() && !cod_atoms.empty()) return out;
  std::vector<std::size_t> choice(cod_atoms.size(), 0);
  while (true) {
    std::vector<Elem> map(dom->size());
    for (Elem a = 0; a < dom->size(); ++a) {
      Elem acc = cl.bottom();
      for (std::size_t k = 0; k < cod_atoms.size(); ++k)
        if (dl.leq(dom_atoms[choice[k]], a)) acc = cl.join(acc, cod_atoms[k]);
      map[a] = acc;
    }
    MorphismTable f{dom, cod, std::move(map), {}};
    bool interior_ok = true;
    for (Elem a = 0; a < dom->size() && interior_ok; ++a) interior_ok = cod->leq(f(dom->box(a)), cod->box(f(a)));
    if (interior_ok) out.push_back(std::move(f));
    // Odometer over atom choices.
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == dom_atoms.size()) choice[pos++] = 0;
    if (pos == choice.size()) break;
  }
  return out;
}

}  // namespace raneykit
