#include "raneykit/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace raneykit {

namespace {

std::string pair_text(const std::vector<std::string>& names, Elem a, Elem b) {
  return "(" + names[a] + ", " + names[b] + ")";
}

std::string set_name(const std::vector<std::string>& atom_names, std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < atom_names.size(); ++i) {
    if (!(mask >> i & 1U)) continue;
    if (!first) out += ',';
    out += atom_names[i];
    first = false;
  }
  return out + "}";
}

}  // namespace

// ---- Subset -------------------------------------------------------------------

Subset Subset::of(std::size_t universe, std::span<const Elem> members) {
  Subset s(universe);
  for (Elem e : members) {
    if (e >= universe) throw Error(ErrorCode::PreconditionUnmet, "subset member out of range", {e});
    s.insert(e);
  }
  return s;
}

Subset Subset::full(std::size_t universe) {
  Subset s(universe);
  s.bits_.set();
  return s;
}

std::vector<Elem> Subset::elements() const {
  std::vector<Elem> out;
  out.reserve(bits_.count());
  for_each([&](Elem e) { out.push_back(e); });
  return out;
}

// ---- construction ---------------------------------------------------------------

std::optional<Elem> FiniteLattice::find(std::string_view name) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (names_[i] == name) return static_cast<Elem>(i);
  return std::nullopt;
}

std::vector<Bits> reflexive_transitive_closure(std::vector<Bits> rows) {
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) rows[i].set(i);
  // Warshall on bit rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rows[i].test(k)) rows[i] |= rows[k];
  return rows;
}

FiniteLattice validate_lattice(std::vector<Bits> leq_rows, std::vector<std::string> names) {
  const std::size_t n = leq_rows.size();
  if (n == 0) throw Error(ErrorCode::PreconditionUnmet, "a lattice needs at least one element");
  for (const auto& row : leq_rows)
    if (row.size() != n) throw Error(ErrorCode::PreconditionUnmet, "order relation is not square");
  if (names.empty()) {
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  if (names.size() != n) throw Error(ErrorCode::PreconditionUnmet, "name count does not match element count");

  for (std::size_t a = 0; a < n; ++a) {
    const auto ea = static_cast<Elem>(a);
    if (!leq_rows[a].test(a))
      throw Error(ErrorCode::NotAPartialOrder, "not reflexive at " + names[a], {ea, ea});
    for (auto b = leq_rows[a].find_first(); b != Bits::npos; b = leq_rows[a].find_next(b)) {
      const auto eb = static_cast<Elem>(b);
      if (b != a && leq_rows[b].test(a))
        throw Error(ErrorCode::NotAPartialOrder, "cycle between " + pair_text(names, ea, eb), {ea, eb});
      if (!leq_rows[b].is_subset_of(leq_rows[a])) {
        const Bits missing = leq_rows[b] - leq_rows[a];
        const auto c = static_cast<Elem>(missing.find_first());
        throw Error(ErrorCode::NotAPartialOrder,
                    "not transitive: " + names[a] + " <= " + names[b] + " <= " + names[c], {ea, eb, c});
      }
    }
  }

  FiniteLattice l;
  l.n_ = n;
  l.names_ = std::move(names);
  l.up_ = std::move(leq_rows);
  l.down_.assign(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a)
    for (auto b = l.up_[a].find_first(); b != Bits::npos; b = l.up_[a].find_next(b)) l.down_[b].set(a);

  std::vector<std::size_t> down_count(n), up_count(n);
  for (std::size_t a = 0; a < n; ++a) {
    down_count[a] = l.down_[a].count();
    up_count[a] = l.up_[a].count();
  }

  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const Bits lower = l.down_[a] & l.down_[b];
      const std::size_t lower_count = lower.count();
      std::optional<Elem> glb;
      for (auto m = lower.find_first(); m != Bits::npos; m = lower.find_next(m))
        if (down_count[m] == lower_count) {
          glb = static_cast<Elem>(m);
          break;
        }
      const Bits upper = l.up_[a] & l.up_[b];
      const std::size_t upper_count = upper.count();
      std::optional<Elem> lub;
      for (auto m = upper.find_first(); m != Bits::npos; m = upper.find_next(m))
        if (up_count[m] == upper_count) {
          lub = static_cast<Elem>(m);
          break;
        }
      const auto ea = static_cast<Elem>(a), eb = static_cast<Elem>(b);
      if (!glb) throw Error(ErrorCode::NotALattice, "no meet for " + pair_text(l.names_, ea, eb), {ea, eb});
      if (!lub) throw Error(ErrorCode::NotALattice, "no join for " + pair_text(l.names_, ea, eb), {ea, eb});
      l.meet_[a * n + b] = l.meet_[b * n + a] = *glb;
      l.join_[a * n + b] = l.join_[b * n + a] = *lub;
    }
  }
  l.bottom_ = 0;
  l.top_ = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (up_count[a] == n) l.bottom_ = static_cast<Elem>(a);
    if (down_count[a] == n) l.top_ = static_cast<Elem>(a);
  }
  return l;
}

FiniteLattice chain(std::size_t n) {
  std::vector<Bits> rows(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) rows[i].set(j);
  return validate_lattice(std::move(rows));
}

FiniteLattice powerset(std::size_t atoms, std::vector<std::string> atom_names) {
  if (atoms > 20) throw Error(ErrorCode::SizeLimit, "powerset of more than 20 atoms");
  if (atom_names.empty()) {
    for (std::size_t i = 0; i < atoms; ++i)
      atom_names.push_back(atoms <= 26 ? std::string(1, static_cast<char>('a' + i)) : "p" + std::to_string(i));
  }
  if (atom_names.size() != atoms) throw Error(ErrorCode::PreconditionUnmet, "atom name count mismatch");
  const std::size_t n = std::size_t{1} << atoms;
  std::vector<Bits> rows(n, Bits(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = set_name(atom_names, a);
    for (std::size_t b = 0; b < n; ++b)
      if ((a & ~b) == 0) rows[a].set(b);
  }
  return validate_lattice(std::move(rows), std::move(names));
}

namespace {

FiniteLattice from_pairs(std::size_t n, std::initializer_list<std::pair<Elem, Elem>> strict,
                         std::vector<std::string> names) {
  std::vector<Bits> rows(n, Bits(n));
  for (auto [a, b] : strict) rows[a].set(b);
  return validate_lattice(reflexive_transitive_closure(std::move(rows)), std::move(names));
}

}  // namespace

FiniteLattice diamond_m3() {
  return from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, {"0", "a", "b", "c", "1"});
}

FiniteLattice pentagon_n5() {
  return from_pairs(5, {{0, 1}, {1, 2}, {0, 3}, {2, 4}, {3, 4}}, {"0", "a", "b", "c", "1"});
}

FiniteLattice downset_lattice(const std::vector<Bits>& poset_leq) {
  const std::size_t p = poset_leq.size();
  if (p > 20) throw Error(ErrorCode::SizeLimit, "poset too large for down-set enumeration");
  std::vector<std::uint64_t> below(p, 0);  // strict and non-strict predecessors
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      if (poset_leq[j].test(i)) below[i] |= std::uint64_t{1} << j;

  std::vector<std::uint64_t> downsets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < p && closed; ++i)
      if ((mask >> i & 1U) && (below[i] & ~mask)) closed = false;
    if (closed) downsets.push_back(mask);
  }
  const std::size_t n = downsets.size();
  std::vector<Bits> rows(n, Bits(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < p; ++i) labels.push_back(std::to_string(i));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = set_name(labels, downsets[a]);
    for (std::size_t b = 0; b < n; ++b)
      if ((downsets[a] & ~downsets[b]) == 0) rows[a].set(b);
  }
  return validate_lattice(std::move(rows), std::move(names));
}

FiniteLattice induced_lattice(const FiniteLattice& l, const Subset& s) {
  if (s.universe() != l.size()) throw Error(ErrorCode::PreconditionUnmet, "subset does not belong to lattice");
  const auto members = s.elements();
  const std::size_t m = members.size();
  std::vector<Bits> rows(m, Bits(m));
  std::vector<std::string> names(m);
  for (std::size_t i = 0; i < m; ++i) {
    names[i] = l.name(members[i]);
    for (std::size_t j = 0; j < m; ++j)
      if (l.leq(members[i], members[j])) rows[i].set(j);
  }
  return validate_lattice(std::move(rows), std::move(names));
}

// ---- queries --------------------------------------------------------------------

Elem meet_of(const FiniteLattice& l, std::span<const Elem> s) {
  Elem acc = l.top();
  for (Elem e : s) acc = l.meet(acc, e);
  return acc;
}

Elem join_of(const FiniteLattice& l, std::span<const Elem> s) {
  Elem acc = l.bottom();
  for (Elem e : s) acc = l.join(acc, e);
  return acc;
}

Elem meet_of(const FiniteLattice& l, const Subset& s) {
  Elem acc = l.top();
  s.for_each([&](Elem e) { acc = l.meet(acc, e); });
  return acc;
}

Elem join_of(const FiniteLattice& l, const Subset& s) {
  Elem acc = l.bottom();
  s.for_each([&](Elem e) { acc = l.join(acc, e); });
  return acc;
}

Elem join_below(const FiniteLattice& l, const Subset& s, Elem a) {
  Elem acc = l.bottom();
  const Bits candidates = s.bits() & l.down(a);
  for (auto x = candidates.find_first(); x != Bits::npos; x = candidates.find_next(x))
    acc = l.join(acc, static_cast<Elem>(x));
  return acc;
}

Elem meet_above(const FiniteLattice& l, const Subset& s, Elem a) {
  Elem acc = l.top();
  const Bits candidates = s.bits() & l.up(a);
  for (auto x = candidates.find_first(); x != Bits::npos; x = candidates.find_next(x))
    acc = l.meet(acc, static_cast<Elem>(x));
  return acc;
}

bool is_join_irreducible(const FiniteLattice& l, Elem j) {
  if (j == l.bottom()) return false;
  const Bits& below = l.down(j);
  for (auto a = below.find_first(); a != Bits::npos; a = below.find_next(a)) {
    if (a == j) continue;
    for (auto b = below.find_next(a); b != Bits::npos; b = below.find_next(b)) {
      if (b == j) continue;
      if (l.join(static_cast<Elem>(a), static_cast<Elem>(b)) == j) return false;
    }
  }
  return true;
}

JoinIrreduciblePoset join_irreducibles(const FiniteLattice& l) {
  JoinIrreduciblePoset out;
  for (std::size_t j = 0; j < l.size(); ++j)
    if (is_join_irreducible(l, static_cast<Elem>(j))) out.elements.push_back(static_cast<Elem>(j));
  return out;
}

std::optional<std::size_t> JoinIrreduciblePoset::position(Elem e) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), e);
  if (it == elements.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

std::vector<Bits> birkhoff_downsets(const FiniteLattice& l, const JoinIrreduciblePoset& j) {
  std::vector<Bits> out(l.size(), Bits(j.elements.size()));
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t k = 0; k < j.elements.size(); ++k)
      if (l.leq(j.elements[k], static_cast<Elem>(a))) out[a].set(k);
  return out;
}

std::optional<TripleWitness> distributivity_failure(const FiniteLattice& l) {
  // A finite lattice is distributive iff its Birkhoff map is injective and
  // sends joins to unions. That test is quadratic; the cubic scan below only
  // runs to locate a witness once the fast test has failed.
  const auto j = join_irreducibles(l);
  const auto d = birkhoff_downsets(l, j);
  bool fast_ok = true;
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n && fast_ok; ++a)
    for (std::size_t b = a + 1; b < n && fast_ok; ++b) {
      if (d[a] == d[b]) fast_ok = false;
      else if (d[l.join(static_cast<Elem>(a), static_cast<Elem>(b))] != (d[a] | d[b])) fast_ok = false;
    }
  if (fast_ok) return std::nullopt;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return TripleWitness{a, b, c};
  // Unreachable for a valid lattice: the two criteria are equivalent.
  throw Error(ErrorCode::AxiomViolation, "Birkhoff and triple distributivity tests disagree");
}

bool is_distributive(const FiniteLattice& l) { return !distributivity_failure(l).has_value(); }

std::optional<Elem> uncomplemented_element(const FiniteLattice& l) {
  for (Elem a = 0; a < l.size(); ++a) {
    bool found = false;
    for (Elem b = 0; b < l.size() && !found; ++b)
      found = l.meet(a, b) == l.bottom() && l.join(a, b) == l.top();
    if (!found) return a;
  }
  return std::nullopt;
}

bool is_boolean(const FiniteLattice& l) { return is_distributive(l) && !uncomplemented_element(l); }

Elem complement(const FiniteLattice& l, Elem a) {
  for (Elem b = 0; b < l.size(); ++b)
    if (l.meet(a, b) == l.bottom() && l.join(a, b) == l.top()) return b;
  throw Error(ErrorCode::NotComplemented, "no complement for " + l.name(a), {a});
}

std::vector<Elem> complement_table(const FiniteLattice& l) {
  if (auto w = distributivity_failure(l))
    throw Error(ErrorCode::NotBoolean, "lattice is not distributive", {w->a, w->b, w->c});
  if (auto a = uncomplemented_element(l))
    throw Error(ErrorCode::NotBoolean, "no complement for " + l.name(*a), {*a});
  std::vector<Elem> out(l.size());
  for (Elem a = 0; a < l.size(); ++a) out[a] = complement(l, a);
  return out;
}

std::vector<Elem> atoms(const FiniteLattice& l) {
  std::vector<Elem> out;
  for (Elem a = 0; a < l.size(); ++a)
    if (a != l.bottom() && l.down(a).count() == 2) out.push_back(a);
  return out;
}

SubframeReport check_subframe(const FiniteLattice& c, const Subset& s) {
  SubframeReport r;
  auto fail = [&](std::string what, std::vector<Elem> w) {
    r.ok = false;
    r.failure = std::move(what);
    r.witness = std::move(w);
    return r;
  };
  if (s.universe() != c.size()) throw Error(ErrorCode::PreconditionUnmet, "subset does not belong to lattice");
  if (!s.contains(c.bottom())) return fail("bottom", {c.bottom()});
  if (!s.contains(c.top())) return fail("top", {c.top()});
  const auto members = s.elements();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t k = i + 1; k < members.size(); ++k) {
      const Elem a = members[i], b = members[k];
      if (!s.contains(c.meet(a, b))) return fail("meet", {a, b});
      if (!s.contains(c.join(a, b))) return fail("join", {a, b});
    }
  if (auto w = distributivity_failure(induced_lattice(c, s)))
    return fail("distributive", {members[w->a], members[w->b], members[w->c]});
  return r;
}

bool is_subframe(const FiniteLattice& c, const Subset& s) { return check_subframe(c, s).ok; }

Elem heyting_implication(const FiniteLattice& l, Elem a, Elem b) {
  Elem acc = l.bottom();
  for (Elem x = 0; x < l.size(); ++x)
    if (l.leq(l.meet(a, x), b)) acc = l.join(acc, x);
  return acc;
}

std::vector<std::pair<Elem, Elem>> covers(const FiniteLattice& l) {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < l.size(); ++a)
    for (auto b = l.up(a).find_first(); b != Bits::npos; b = l.up(a).find_next(b)) {
      if (b == a) continue;
      if ((l.up(a) & l.down(static_cast<Elem>(b))).count() == 2) out.emplace_back(a, static_cast<Elem>(b));
    }
  return out;
}

std::optional<std::vector<Elem>> find_isomorphism(const FiniteLattice& l1, const FiniteLattice& l2) {
  const std::size_t n = l1.size();
  if (n != l2.size()) return std::nullopt;
  using Signature = std::tuple<std::size_t, std::size_t, bool>;
  auto signature = [](const FiniteLattice& l, Elem a) {
    return Signature{l.down(a).count(), l.up(a).count(), is_join_irreducible(l, a)};
  };
  std::vector<Signature> s1(n), s2(n);
  for (Elem a = 0; a < n; ++a) {
    s1[a] = signature(l1, a);
    s2[a] = signature(l2, a);
  }
  {
    auto a = s1, b = s2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  // Assign in order of increasing down-set size so comparable predecessors are fixed first.
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Elem a, Elem b) { return l1.down(a).count() < l1.down(b).count(); });

  std::vector<Elem> image(n, 0);
  std::vector<bool> used(n, false);
  auto consistent = [&](std::size_t depth, Elem a, Elem fa) {
    for (std::size_t k = 0; k < depth; ++k) {
      const Elem x = order[k], fx = image[x];
      if (l1.leq(x, a) != l2.leq(fx, fa) || l1.leq(a, x) != l2.leq(fa, fx)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const Elem a = order[depth];
    for (Elem cand = 0; cand < n; ++cand) {
      if (used[cand] || s2[cand] != s1[a] || !consistent(depth, a, cand)) continue;
      image[a] = cand;
      used[cand] = true;
      if (self(self, depth + 1)) return true;
      used[cand] = false;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return image;
}

}  // namespace raneykit
