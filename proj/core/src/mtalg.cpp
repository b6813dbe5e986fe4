#include "raneykit/mtalg.hpp"

#include <deque>

namespace raneykit {

namespace {

[[noreturn]] void kuratowski(const std::string& axiom, std::vector<Elem> witness) {
  throw Error(ErrorCode::KuratowskiViolation, axiom, std::move(witness));
}

Subset meet_closure(const FiniteLattice& l, const Subset& s) {
  Subset out = s;
  out.insert(l.top());  // the empty meet
  bool grew = true;
  while (grew) {
    grew = false;
    const auto members = out.elements();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t k = i + 1; k < members.size(); ++k) {
        const Elem m = l.meet(members[i], members[k]);
        if (!out.contains(m)) {
          out.insert(m);
          grew = true;
        }
      }
  }
  return out;
}

}  // namespace

Subset boolean_closure(const FiniteLattice& l, std::span<const Elem> neg, const Subset& generators) {
  Subset out(l.size());
  std::deque<Elem> pending;
  auto add = [&](Elem e) {
    if (!out.contains(e)) {
      out.insert(e);
      pending.push_back(e);
    }
  };
  add(l.bottom());
  add(l.top());
  generators.for_each(add);
  while (!pending.empty()) {
    const Elem x = pending.front();
    pending.pop_front();
    add(neg[x]);
    for (Elem y : out.elements()) {
      add(l.meet(x, y));
      add(l.join(x, y));
    }
  }
  return out;
}

ElementClasses classify(const MTAlgebra& m) {
  const FiniteLattice& l = m.lattice();
  const std::size_t n = l.size();
  ElementClasses c{Subset(n), Subset(n), Subset(n), Subset(n), Subset(n)};
  for (Elem a = 0; a < n; ++a) {
    if (m.box(a) == a) {
      c.opens.insert(a);
      c.closeds.insert(m.neg(a));
    }
  }
  c.saturated = meet_closure(l, c.opens);
  c.opens.for_each([&](Elem u) { c.closeds.for_each([&](Elem k) { c.locally_closed.insert(l.meet(u, k)); }); });
  c.gen_boolean = boolean_closure(l, m.neg_table(), c.saturated);
  return c;
}

AlgebraPtr validate_interior(LatticePtr b, std::vector<Elem> box, std::string name) {
  if (!b) throw Error(ErrorCode::PreconditionUnmet, "null carrier");
  const FiniteLattice& l = *b;
  const std::size_t n = l.size();
  if (box.size() != n) throw Error(ErrorCode::PreconditionUnmet, "interior table has wrong length");
  for (Elem a = 0; a < n; ++a)
    if (box[a] >= n) throw Error(ErrorCode::PreconditionUnmet, "interior table entry out of range", {a});
  auto neg = complement_table(l);  // throws NotBoolean

  if (box[l.top()] != l.top()) kuratowski("box(1) = 1", {l.top()});
  for (Elem a = 0; a < n; ++a) {
    if (!l.leq(box[a], a)) kuratowski("box(a) <= a", {a});
    if (!l.leq(box[a], box[box[a]])) kuratowski("box(a) <= box(box(a))", {a});
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem c = a + 1; c < n; ++c)
      if (box[l.meet(a, c)] != l.meet(box[a], box[c])) kuratowski("box(a & b) = box(a) & box(b)", {a, c});

  auto m = std::make_shared<MTAlgebra>();
  m->base_ = std::move(b);
  m->box_ = std::move(box);
  m->neg_ = std::move(neg);
  m->name_ = std::move(name);
  m->classes_ = classify(*m);

  const auto report = check_subframe(l, m->classes_.opens);
  if (!report.ok)
    throw Error(ErrorCode::KuratowskiViolation, "fixpoints are not a subframe (" + report.failure + ")", report.witness);
  // The interior must be the right adjoint of the inclusion of its fixpoints.
  for (Elem a = 0; a < n; ++a)
    if (join_below(l, m->classes_.opens, a) != m->box_[a])
      throw Error(ErrorCode::KuratowskiViolation, "box is not the right adjoint of the opens inclusion", {a});
  return m;
}

AlgebraPtr from_subframe(LatticePtr b, const Subset& l, std::string name) {
  if (!b) throw Error(ErrorCode::PreconditionUnmet, "null carrier");
  const auto report = check_subframe(*b, l);
  if (!report.ok) throw Error(ErrorCode::NotASubframe, report.failure, report.witness);
  std::vector<Elem> box(b->size());
  for (Elem a = 0; a < b->size(); ++a) box[a] = join_below(*b, l, a);
  return validate_interior(std::move(b), std::move(box), std::move(name));
}

AlgebraPtr discrete_algebra(LatticePtr b, std::string name) {
  std::vector<Elem> box(b->size());
  for (Elem a = 0; a < b->size(); ++a) box[a] = a;
  return validate_interior(std::move(b), std::move(box), std::move(name));
}

AlgebraPtr indiscrete_algebra(LatticePtr b, std::string name) {
  std::vector<Elem> box(b->size(), b->bottom());
  box[b->top()] = b->top();
  return validate_interior(std::move(b), std::move(box), std::move(name));
}

std::optional<Elem> t0_failure(const MTAlgebra& m) {
  const auto& gen = m.classes().gen_boolean;
  for (Elem a = 0; a < m.size(); ++a)
    if (join_below(m.lattice(), gen, a) != a) return a;
  return std::nullopt;
}

std::optional<Elem> td_failure(const MTAlgebra& m) {
  const auto& lc = m.classes().locally_closed;
  for (Elem a = 0; a < m.size(); ++a)
    if (join_below(m.lattice(), lc, a) != a) return a;
  return std::nullopt;
}

bool is_T0(const MTAlgebra& m) { return !t0_failure(m); }
bool is_TD(const MTAlgebra& m) { return !td_failure(m); }

bool is_T0_by_definition(const MTAlgebra& m) {
  const FiniteLattice& l = m.lattice();
  Subset generators(l.size());
  const auto& cls = m.classes();
  cls.saturated.for_each([&](Elem s) { cls.closeds.for_each([&](Elem c) { generators.insert(l.meet(s, c)); }); });
  for (Elem a = 0; a < l.size(); ++a)
    if (join_below(l, generators, a) != a) return false;
  return true;
}

// ---- proximity ---------------------------------------------------------------

std::optional<ProximityViolation> proximity_violation(const FiniteLattice& l, std::span<const Elem> neg,
                                                      const Subset& sub, const ProximityRelation& rel) {
  const std::size_t n = l.size();
  auto fail = [](std::string axiom, std::vector<Elem> w) {
    return std::optional<ProximityViolation>(ProximityViolation{std::move(axiom), std::move(w)});
  };
  if (!rel.holds(l.top(), l.top())) return fail("S1", {l.top()});
  for (Elem a = 0; a < n; ++a) {
    const Bits& row = rel.row(a);
    for (auto c = row.find_first(); c != Bits::npos; c = row.find_next(c)) {
      const auto ec = static_cast<Elem>(c);
      if (!l.leq(a, ec)) return fail("S2", {a, ec});
      if (!rel.holds(neg[ec], neg[a])) return fail("S5", {a, ec});
      // S3: ≺ is down-closed on the left and up-closed on the right.
      for (auto a2 = l.down(a).find_first(); a2 != Bits::npos; a2 = l.down(a).find_next(a2))
        if (!l.up(ec).is_subset_of(rel.row(static_cast<Elem>(a2)))) return fail("S3", {static_cast<Elem>(a2), a, ec});
      for (auto d = row.find_next(c); d != Bits::npos; d = row.find_next(d))
        if (!rel.holds(a, l.meet(ec, static_cast<Elem>(d)))) return fail("S4", {a, ec, static_cast<Elem>(d)});
      bool interpolated = false;
      sub.for_each([&](Elem b) { interpolated = interpolated || (rel.holds(a, b) && rel.holds(b, ec)); });
      if (!interpolated) return fail("S6", {a, ec});
    }
  }
  return std::nullopt;
}

ProximityRelation proximity_relation(const FiniteLattice& l, std::span<const Elem> neg, const Subset& sub) {
  const std::size_t n = l.size();
  std::vector<Bits> rows(n, Bits(n));
  sub.for_each([&](Elem b) {
    for (auto a = l.down(b).find_first(); a != Bits::npos; a = l.down(b).find_next(a)) rows[a] |= l.up(b);
  });
  ProximityRelation rel(std::move(rows));
  if (auto v = proximity_violation(l, neg, sub, rel))
    throw Error(ErrorCode::AxiomViolation, "proximity axiom " + v->axiom + " fails", v->witness);
  return rel;
}

ProximityRelation proximity(const MTAlgebra& m) {
  return proximity_relation(m.lattice(), m.neg_table(), m.classes().gen_boolean);
}

bool is_deVries(const MTAlgebra& m) {
  const auto rel = proximity(m);
  const FiniteLattice& l = m.lattice();
  for (Elem a = 0; a < l.size(); ++a) {
    Elem acc = l.bottom();
    for (Elem c = 0; c < l.size(); ++c)
      if (rel.holds(c, a)) acc = l.join(acc, c);
    if (acc != a) return false;
  }
  return true;
}

}  // namespace raneykit
