#include "raneykit/completion.hpp"

namespace raneykit {

EmbeddingFlags certify_embedding(const FiniteLattice& dom, const FiniteLattice& cod, const std::vector<Elem>& map) {
  EmbeddingFlags f;
  const std::size_t n = dom.size();
  if (map.size() != n) return f;
  for (Elem a = 0; a < n; ++a)
    if (map[a] >= cod.size()) return f;
  f.injective = f.order_embedding = f.binary_meets = f.binary_joins = true;
  f.bounds = map[dom.bottom()] == cod.bottom() && map[dom.top()] == cod.top();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (a != b && map[a] == map[b]) f.injective = false;
      if (dom.leq(a, b) != cod.leq(map[a], map[b])) f.order_embedding = false;
      if (map[dom.meet(a, b)] != cod.meet(map[a], map[b])) f.binary_meets = false;
      if (map[dom.join(a, b)] != cod.join(map[a], map[b])) f.binary_joins = false;
    }
  return f;
}

Embedding boolean_envelope(const LatticePtr& d) {
  if (auto w = distributivity_failure(*d))
    throw Error(ErrorCode::NotDistributive, "boolean envelope needs a distributive lattice", {w->a, w->b, w->c});
  const auto irr = join_irreducibles(*d);
  const auto downsets = birkhoff_downsets(*d, irr);
  std::vector<std::string> atom_names;
  for (Elem j : irr.elements) atom_names.push_back(d->name(j));
  auto cod = std::make_shared<const FiniteLattice>(powerset(irr.elements.size(), std::move(atom_names)));

  Embedding e;
  e.dom = d;
  e.cod = cod;
  e.map.resize(d->size());
  for (Elem a = 0; a < d->size(); ++a) e.map[a] = static_cast<Elem>(downsets[a].to_ulong());
  e.flags = certify_embedding(*d, *cod, e.map);
  e.certificate = "Birkhoff embedding into the powerset of join-irreducibles";
  return e;
}

Embedding macneille_completion(const LatticePtr& l) {
  Embedding e;
  e.dom = l;
  e.cod = l;
  e.map.resize(l->size());
  for (Elem a = 0; a < l->size(); ++a) e.map[a] = a;
  e.flags = certify_embedding(*l, *l, e.map);
  e.certificate = "finite lattice is complete; completion is the identity";
  return e;
}

std::vector<Elem> right_adjoint_of_embedding(const Embedding& e) {
  const FiniteLattice& dom = *e.dom;
  const FiniteLattice& cod = *e.cod;
  std::vector<Elem> r(cod.size(), dom.bottom());
  for (Elem x = 0; x < cod.size(); ++x)
    for (Elem a = 0; a < dom.size(); ++a)
      if (cod.leq(e.map[a], x)) r[x] = dom.join(r[x], a);
  for (Elem x = 0; x < cod.size(); ++x)
    for (Elem a = 0; a < dom.size(); ++a)
      if (cod.leq(e.map[a], x) != dom.leq(a, r[x]))
        throw Error(ErrorCode::AdjointFailure, "e(" + dom.name(a) + ") <= " + cod.name(x) + " disagrees with the adjoint",
                    {a, x});
  return r;
}

FrameEnvelope funayama_envelope_frame_with_embedding(const LatticePtr& l) {
  const Embedding boolean = boolean_envelope(l);
  const Embedding completion = macneille_completion(boolean.cod);
  Embedding e;
  e.dom = l;
  e.cod = completion.cod;
  e.map.resize(l->size());
  for (Elem a = 0; a < l->size(); ++a) e.map[a] = completion(boolean(a));
  e.flags = certify_embedding(*e.dom, *e.cod, e.map);
  e.certificate = boolean.certificate + "; " + completion.certificate;

  const auto r = right_adjoint_of_embedding(e);
  std::vector<Elem> box(e.cod->size());
  for (Elem x = 0; x < e.cod->size(); ++x) box[x] = e.map[r[x]];
  auto algebra = validate_interior(e.cod, std::move(box));
  return FrameEnvelope{std::move(algebra), std::move(e)};
}

AlgebraPtr funayama_envelope_frame(const LatticePtr& l) { return funayama_envelope_frame_with_embedding(l).algebra; }

}  // namespace raneykit
