#include "raneykit/harness.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "raneykit/cantor.hpp"

namespace raneykit {

// ---- enumeration -----------------------------------------------------------------

std::vector<AlgebraPtr> enumerate_mt_algebras(std::size_t max_atoms) {
  if (max_atoms > 4) throw Error(ErrorCode::SizeLimit, "enumeration is limited to 4 atoms");
  std::vector<AlgebraPtr> out;
  for (std::size_t k = 0; k <= max_atoms; ++k) {
    auto b = std::make_shared<const FiniteLattice>(powerset(k));
    const std::size_t n = b->size();
    const std::size_t inner = n >= 2 ? n - 2 : 0;
    std::size_t index = 0;
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << inner); ++choice) {
      // Element index equals the atom bitmask, so meets and joins are & and |.
      std::vector<std::uint32_t> members{0};
      for (std::size_t i = 0; i < inner; ++i)
        if (choice >> i & 1U) members.push_back(static_cast<std::uint32_t>(i + 1));
      if (n > 1) members.push_back(static_cast<std::uint32_t>(n - 1));
      std::vector<bool> in(n, false);
      for (auto m : members) in[m] = true;
      bool closed = true;
      for (std::size_t i = 0; i < members.size() && closed; ++i)
        for (std::size_t j = i + 1; j < members.size() && closed; ++j)
          closed = in[members[i] & members[j]] && in[members[i] | members[j]];
      if (!closed) continue;
      out.push_back(from_subframe(b, Subset::of(n, members), "m" + std::to_string(k) + "_" + std::to_string(index++)));
    }
  }
  return out;
}

std::vector<LatticePtr> enumerate_frames(std::size_t max_points, std::size_t max_size) {
  if (max_points > 7) throw Error(ErrorCode::SizeLimit, "poset enumeration is limited to 7 points");
  std::vector<LatticePtr> out;
  // Invariant buckets keep the isomorphism search to a few candidates.
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
  for (std::size_t p = 0; p <= max_points; ++p) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j) slots.emplace_back(i, j);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      // Natural labelling: i < j whenever i is strictly below j.
      std::vector<Bits> rows(p, Bits(p));
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask >> s & 1U) rows[slots[s].first].set(slots[s].second);
      const auto closed = reflexive_transitive_closure(rows);
      bool transitive = true;
      for (std::size_t i = 0; i < p && transitive; ++i) {
        Bits strict = closed[i];
        strict.reset(i);
        transitive = strict == rows[i];
      }
      if (!transitive) continue;

      // Count down-sets first so oversized lattices are never built.
      std::size_t downsets = 0;
      for (std::uint64_t d = 0; d < (std::uint64_t{1} << p) && downsets <= max_size; ++d) {
        bool ok = true;
        for (std::size_t j = 0; j < p && ok; ++j)
          if (d >> j & 1U)
            for (std::size_t i = 0; i < p && ok; ++i)
              if (closed[i].test(j) && !(d >> i & 1U)) ok = false;
        downsets += ok;
      }
      if (downsets > max_size) continue;

      auto l = std::make_shared<const FiniteLattice>(downset_lattice(closed));
      std::vector<std::size_t> key{l->size()};
      std::vector<std::size_t> sig;
      for (Elem a = 0; a < l->size(); ++a) sig.push_back(l->down(a).count() * 64 + l->up(a).count());
      std::sort(sig.begin(), sig.end());
      key.insert(key.end(), sig.begin(), sig.end());
      auto& bucket = buckets[key];
      const bool seen = std::any_of(bucket.begin(), bucket.end(),
                                    [&](std::size_t k) { return find_isomorphism(*out[k], *l).has_value(); });
      if (seen) continue;
      bucket.push_back(out.size());
      out.push_back(std::move(l));
    }
  }
  return out;
}

// ---- corpus -------------------------------------------------------------------------

namespace {

std::size_t atom_count(const MTAlgebra& m) { return atoms(m.lattice()).size(); }

std::string pair_tag(const MTAlgebra& a, const MTAlgebra& b) { return a.name() + ">" + b.name(); }

}  // namespace

Corpus generate_corpus(const CorpusOptions& options) {
  Corpus c;
  c.seed = options.seed;
  c.cantor_depth = options.cantor_depth;
  std::mt19937_64 rng(options.seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  const auto base = enumerate_mt_algebras(options.max_atoms);
  std::vector<Identification> ids;
  ids.reserve(base.size());
  for (const auto& m : base) {
    c.algebras.push_back(m);
    c.algebra_tags.push_back("enumerated");
    ids.push_back(identify(m));
  }
  for (const auto& id : ids) {
    c.extensions.push_back(id.raney);
    c.algebras.push_back(id.hull.algebra);
    c.algebra_tags.push_back("hull");
  }
  if (options.frame_points > 0) c.frames = enumerate_frames(options.frame_points, options.frame_size);

  auto add = [&](MorphismTable f, std::string tag) {
    c.morphisms.push_back(std::move(f));
    c.morphism_tags.push_back(std::move(tag));
  };

  for (std::size_t i = 0; i < base.size(); ++i) {
    const auto& m = base[i];
    auto idm = id_raney(m);
    idm.name = "id[" + m->name() + "]";
    add(std::move(idm), "identity");
    auto idh = id_raney(ids[i].hull.algebra);
    idh.name = "id[" + ids[i].hull.algebra->name() + "]";
    add(std::move(idh), "identity");
    auto idp = id_prox(m);
    idp.name = "idP[" + m->name() + "]";
    c.prox_identities.push_back(std::move(idp));
    add(zeta(ids[i]), "zeta");
    add(phi(ids[i]), "phi");
  }

  // Ordered pairs: all small pairs, plus sampled partners for larger algebras.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = 0; j < base.size(); ++j)
      if (atom_count(*base[i]) <= options.full_pair_atoms && atom_count(*base[j]) <= options.full_pair_atoms)
        pairs.emplace_back(i, j);
  std::vector<std::size_t> large;
  for (std::size_t i = 0; i < base.size(); ++i)
    if (atom_count(*base[i]) > options.full_pair_atoms) large.push_back(i);
  if (!large.empty())
    for (std::size_t s = 0; s < options.sampled_pairs; ++s) {
      const std::size_t a = large[pick(large.size())];
      const std::size_t b = pick(base.size());
      if (s % 2 == 0) pairs.emplace_back(a, b);
      else pairs.emplace_back(b, a);
    }

  for (auto [i, j] : pairs) {
    const std::string tag = pair_tag(*base[i], *base[j]);
    auto homs = extension_morphisms(ids[i].raney, ids[j].raney);
    // Keep a deterministic spread rather than the first few in search order.
    if (homs.size() > options.per_pair) {
      std::vector<ExtMorphism> kept;
      for (std::size_t k = 0; k < options.per_pair; ++k) kept.push_back(homs[k * homs.size() / options.per_pair]);
      homs = std::move(kept);
    }
    for (std::size_t k = 0; k < homs.size(); ++k) {
      auto& h = homs[k];
      h.name = "h[" + tag + "#" + std::to_string(k) + "]";
      auto fh = functor_F_mor(h, ids[i].hull, ids[j].hull);
      add(std::move(fh), "F-image");
      auto lift = raney_from_extension_morphism(h, ids[i], ids[j]);
      lift.name = "lift[" + tag + "#" + std::to_string(k) + "]";
      add(std::move(lift), "lift");
      c.ext_morphisms.push_back(std::move(h));
    }
    if (atom_count(*base[i]) <= 3 && atom_count(*base[j]) <= 3) {
      std::size_t k = 0;
      for (auto& f : mt_morphisms(base[i], base[j])) {
        f.name = "mt[" + tag + "#" + std::to_string(k++) + "]";
        if (check_raney_morphism(f).ok()) add(f, "mt");
        c.mt_morphisms.push_back(std::move(f));
      }
    }
  }

  // ⋆-composites of depth two over random composable pairs.
  {
    std::unordered_map<const MTAlgebra*, std::vector<std::size_t>> by_dom;
    for (std::size_t k = 0; k < c.morphisms.size(); ++k) by_dom[c.morphisms[k].dom.get()].push_back(k);
    const std::size_t pool = c.morphisms.size();
    for (std::size_t s = 0, tries = 0; s < options.composites && tries < options.composites * 20 && pool > 0; ++tries) {
      const auto& f = c.morphisms[pick(pool)];
      const auto it = by_dom.find(f.cod.get());
      if (it == by_dom.end()) continue;
      const auto& g = c.morphisms[it->second[pick(it->second.size())]];
      auto gf = star(g, f);
      gf.name = "star[" + g.name + "," + f.name + "]";
      add(std::move(gf), "composite");
      ++s;
    }
  }

  // Single-entry mutations of small valid tables.
  {
    const std::size_t max_r4_only = 120, max_other = 240;
    std::size_t r4_only = 0, other = 0;
    for (const auto& f : c.morphisms) {
      if (r4_only >= max_r4_only && other >= max_other) break;
      if (f.dom->size() > 8 || f.cod->size() > 8 || f.dom->size() < 2) continue;
      for (Elem a = 0; a < f.dom->size(); ++a)
        for (Elem v = 0; v < f.cod->size(); ++v) {
          if (v == f(a)) continue;
          MorphismTable g = f;
          g.map[a] = v;
          const auto report = check_raney_morphism(g);
          if (report.ok()) continue;
          const bool only_r4 = report.failed() == std::vector<std::string>{"R4"};
          if (only_r4 ? r4_only >= max_r4_only : other >= max_other) continue;
          (only_r4 ? r4_only : other) += 1;
          g.name = "mut[" + f.name + "@" + f.dom->lattice().name(a) + ":" + f.cod->lattice().name(v) + "]";
          c.negatives.push_back(std::move(g));
        }
    }
  }
  return c;
}

// ---- suite ---------------------------------------------------------------------------

bool SuiteReport::ok() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.failed == 0; });
}

const LawResult* SuiteReport::find(const std::string& law) const {
  for (const auto& l : laws)
    if (l.law == law) return &l;
  return nullptr;
}

std::string SuiteReport::text() const {
  std::ostringstream out;
  out << "law suite: " << algebras << " algebras, " << frames << " frames, " << morphisms << " morphisms, " << negatives
      << " negatives (" << all_false_negatives << " with all R4 forms false)\n";
  std::size_t width = 0;
  for (const auto& l : laws) width = std::max(width, l.law.size());
  std::size_t failures = 0;
  for (const auto& l : laws) {
    out << "  " << (l.failed == 0 ? "PASS" : "FAIL") << "  " << l.law << std::string(width - l.law.size() + 2, ' ')
        << l.passed << "/" << (l.passed + l.failed);
    if (!l.criteria.empty()) {
      out << "  [";
      for (std::size_t i = 0; i < l.criteria.size(); ++i) out << (i ? "," : "") << l.criteria[i];
      out << "]";
    }
    out << "\n";
    for (const auto& w : l.witnesses) out << "        " << w << "\n";
    failures += l.failed;
  }
  out << failures << " failures (" << std::fixed;
  out.precision(2);
  out << seconds << " s)\n";
  return out.str();
}

std::string SuiteReport::key_value() const {
  std::ostringstream out;
  out << "suite.algebras=" << algebras << "\n"
      << "suite.frames=" << frames << "\n"
      << "suite.morphisms=" << morphisms << "\n"
      << "suite.negatives=" << negatives << "\n"
      << "suite.negatives_all_false=" << all_false_negatives << "\n";
  for (const auto& l : laws) {
    out << "law." << l.law << ".passed=" << l.passed << "\n";
    out << "law." << l.law << ".failed=" << l.failed << "\n";
    if (!l.criteria.empty()) {
      out << "law." << l.law << ".criteria=";
      for (std::size_t i = 0; i < l.criteria.size(); ++i) out << (i ? "," : "") << l.criteria[i];
      out << "\n";
    }
    for (std::size_t i = 0; i < l.witnesses.size(); ++i) out << "law." << l.law << ".witness." << i << "=" << l.witnesses[i] << "\n";
  }
  out << "suite.status=" << (ok() ? "pass" : "fail") << "\n";
  return out.str();
}

namespace {

std::string elems(const MTAlgebra& m, const std::vector<Elem>& w) {
  std::string s;
  for (Elem e : w) s += (s.empty() ? "" : " ") + (e < m.size() ? m.lattice().name(e) : std::to_string(e));
  return s;
}

std::string describe(const MorphismTable& f) {
  return (f.name.empty() ? std::string("<unnamed>") : f.name) + " : " + f.dom->name() + " -> " + f.cod->name();
}

class Runner {
 public:
  Runner(const Corpus& corpus, const std::vector<std::string>& law_set) : corpus_(corpus), law_set_(law_set) {}

  /// Registers a law and returns its result slot, or null when filtered out.
  LawResult* law(const std::string& name, std::vector<std::string> criteria) {
    if (!law_set_.empty() && std::find(law_set_.begin(), law_set_.end(), name) == law_set_.end()) return nullptr;
    laws_.push_back(LawResult{name, std::move(criteria), 0, 0, {}});
    return &laws_.back();
  }

  static void record(LawResult* l, bool ok, const std::function<std::string()>& witness) {
    if (ok) {
      ++l->passed;
      return;
    }
    ++l->failed;
    if (l->witnesses.size() < 5) l->witnesses.push_back(witness());
  }

  /// Runs `body`; an exception counts as one failure carrying its message.
  static void guarded(LawResult* l, const std::string& subject, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      record(l, false, [&] { return subject + ": threw " + e.what(); });
    }
  }

  const Identification& identification(const AlgebraPtr& m) {
    auto it = ids_.find(m.get());
    if (it == ids_.end()) it = ids_.emplace(m.get(), identify(m)).first;
    return it->second;
  }

  SuiteReport run();

 private:
  void object_laws();
  void frame_laws();
  void morphism_laws();
  void composition_laws();
  void extension_laws();
  void negative_laws();
  void cantor_laws();

  const Corpus& corpus_;
  const std::vector<std::string>& law_set_;
  SuiteReport report_;
  std::deque<LawResult> laws_;  // stable addresses while laws register
  std::unordered_map<const MTAlgebra*, Identification> ids_;
};

void Runner::object_laws() {
  auto* roundtrip = law("mt.interior-roundtrip", {});
  auto* closure = law("mt.closure-duality", {});
  auto* saturated = law("mt.saturated-is-open", {});
  auto* normal_form = law("mt.generated-normal-form", {});
  auto* t0_def = law("mt.t0-definition", {"AC3"});
  auto* td_iff = law("ac2.td-iff-envelope-iso", {"AC2"});
  auto* t0_all = law("ac3.t0-characterizations", {"AC3"});
  auto* inverse = law("ac7.zeta-phi-inverse", {"AC7"});
  auto* triangles = law("ac7.triangles", {"AC7"});
  auto* reflector = law("ac9.reflector", {"AC9"});
  auto* surjective = law("ext.rho-iso", {"AC9"});
  auto* hat_id = law("ac6.hat-identity", {"AC6"});

  for (const auto& m : corpus_.algebras) {
    const MTAlgebra& a = *m;
    const FiniteLattice& l = a.lattice();
    const auto& cls = a.classes();
    const std::string who = a.name();

    if (roundtrip) guarded(roundtrip, who, [&] {
        record(roundtrip, from_subframe(a.lattice_ptr(), cls.opens)->box_table() == a.box_table(), [&] { return who; });
      });
    if (closure) {
      bool ok = true;
      Elem bad = 0;
      for (Elem x = 0; x < a.size(); ++x) {
        const bool law_ok = l.leq(x, a.diamond(x)) && a.diamond(a.diamond(x)) == a.diamond(x) &&
                            (a.diamond(x) == x) == cls.closeds.contains(x);
        if (!law_ok && ok) {
          ok = false;
          bad = x;
        }
      }
      record(closure, ok, [&] { return who + " at " + l.name(bad); });
    }
    if (saturated) {
      bool meet_closed = true;
      cls.saturated.for_each([&](Elem x) {
        cls.saturated.for_each([&](Elem y) { meet_closed = meet_closed && cls.saturated.contains(l.meet(x, y)); });
      });
      record(saturated, meet_closed && cls.saturated == cls.opens, [&] { return who; });
    }
    if (normal_form) {
      bool ok = true;
      cls.gen_boolean.for_each([&](Elem x) {
        Elem acc = l.bottom();
        cls.saturated.for_each([&](Elem s) {
          cls.saturated.for_each([&](Elem t) {
            const Elem term = l.meet(s, a.neg(t));
            if (l.leq(term, x)) acc = l.join(acc, term);
          });
        });
        ok = ok && acc == x;
      });
      record(normal_form, ok, [&] { return who; });
    }
    if (t0_def) record(t0_def, is_T0(a) == is_T0_by_definition(a), [&] { return who; });

    if (td_iff) guarded(td_iff, who, [&] {
        const auto opens = std::make_shared<const FiniteLattice>(induced_lattice(l, cls.opens));
        const auto envelope = funayama_envelope_frame(opens);
        bool found = false;
        const auto ma = atoms(l);
        auto fa = atoms(envelope->lattice());
        if (ma.size() == fa.size()) {
          std::sort(fa.begin(), fa.end());
          do {
            std::vector<Elem> map(a.size());
            for (Elem x = 0; x < a.size(); ++x) {
              Elem acc = envelope->bottom();
              for (std::size_t k = 0; k < ma.size(); ++k)
                if (l.leq(ma[k], x)) acc = envelope->join(acc, fa[k]);
              map[x] = acc;
            }
            const MorphismTable f{m, envelope, std::move(map), {}};
            found = is_order_iso(f) && check_raney_morphism(f).ok();
          } while (!found && std::next_permutation(fa.begin(), fa.end()));
        }
        record(td_iff, found == is_TD(a), [&] { return who + (found ? " has an iso but is not TD" : " is TD without an iso"); });
      });

    const Identification* id = nullptr;
    try {
      id = &identification(m);
    } catch (const std::exception& e) {
      for (auto* l2 : {t0_all, inverse, triangles, reflector, surjective})
        if (l2) record(l2, false, [&] { return who + ": identification failed: " + e.what(); });
      continue;
    }

    if (t0_all) guarded(t0_all, who, [&] {
        const bool t0 = is_T0(a);
        const bool devries = is_deVries(a);
        const bool identity = id_raney(m) == identity_map(m);
        const auto z = zeta(*id);
        std::vector<bool> hit(a.size(), false);
        bool bijective = z.dom->size() == a.size();
        for (Elem x = 0; x < z.dom->size() && bijective; ++x) {
          bijective = !hit[z(x)];
          hit[z(x)] = true;
        }
        record(t0_all, t0 == devries && devries == identity && identity == bijective, [&] {
          return who + " T0=" + std::to_string(t0) + " deVries=" + std::to_string(devries) +
                 " id=" + std::to_string(identity) + " zeta-bijective=" + std::to_string(bijective);
        });
      });
    if (inverse) guarded(inverse, who, [&] {
        const auto c = check_zeta_phi_inverse(*id);
        record(inverse, c.ok, [&] { return who + ": " + c.detail; });
      });
    if (triangles) guarded(triangles, who, [&] {
        const auto c = check_triangles(m, id->raney);
        record(triangles, c.ok, [&] { return who + ": " + c.detail; });
      });
    if (reflector) guarded(reflector, who, [&] {
        const auto& hull = id->hull.algebra;
        bool ok = is_T0(*hull);
        if (is_T0(a)) ok = ok && is_order_iso(zeta(*id));
        ok = ok && is_order_iso(zeta(identification(hull)));
        record(reflector, ok, [&] { return who; });
      });
    if (surjective) guarded(surjective, who, [&] {
        record(surjective, is_ext_iso(rho(id->hull)), [&] { return who; });
      });
    if (hat_id) guarded(hat_id, who, [&] { record(hat_id, hat(id_raney(m)) == id_prox(m), [&] { return who; }); });
  }
}

void Runner::frame_laws() {
  auto* frames = law("ac1.funayama-frames", {"AC1"});
  if (!frames) return;
  for (const auto& l : corpus_.frames) {
    const std::string who = "frame of size " + std::to_string(l->size());
    guarded(frames, who, [&] {
      const auto env = funayama_envelope_frame_with_embedding(l);
      const auto opens = induced_lattice(env.algebra->lattice(), env.algebra->opens());
      const bool iso = find_isomorphism(opens, *l).has_value();
      record(frames, iso && is_TD(*env.algebra) && env.embedding.flags.all(), [&] { return who; });
    });
  }
}

void Runner::morphism_laws() {
  auto* valid = law("raney.corpus-valid", {});
  auto* derived = law("raney.derived-properties", {});
  auto* r4 = law("ac5.r4-equivalents", {"AC5"});
  auto* units = law("ac4.unit-laws", {"AC4"});
  auto* hat_valid = law("hat.proximity-valid", {"AC6"});
  auto* zeta_nat = law("ac7.zeta-naturality", {"AC7"});
  auto* square = law("ac7.square", {"AC7"});
  auto* r_id = law("functor.R-identity", {});
  auto* iso_agree = law("ac8.iso-agreement", {"AC8"});
  auto* iso_forward = law("ac8.iso-implies-order-iso", {"AC8"});
  auto* iso_mt = law("ac8.iso-iff-mt-iso", {"AC8"});
  auto* mt_raney = law("mt.t0-morphisms-are-raney", {});

  auto* members = law("corpus.endpoints", {});
  std::unordered_map<const MTAlgebra*, bool> in_corpus;
  for (const auto& m : corpus_.algebras) in_corpus[m.get()] = true;

  for (const auto& f : corpus_.morphisms) {
    const std::string who = describe(f);
    if (members) record(members, in_corpus.count(f.dom.get()) && in_corpus.count(f.cod.get()), [&] { return who; });
    if (valid) {
      const auto report = check_raney_morphism(f);
      record(valid, report.ok(), [&] {
        const auto& first = report.at(report.failed().front());
        return who + ": " + first.id + " " + first.detail;
      });
      if (!report.ok()) continue;
    }
    if (derived) guarded(derived, who, [&] {
        const auto p = derived_properties(f);
        record(derived, p.ok(), [&] { return who; });
      });
    if (r4) guarded(r4, who, [&] {
        const auto e = check_r4_equivalents(f);
        record(r4, e.agree() && e.r4, [&] { return who; });
      });
    if (units) guarded(units, who, [&] {
        const bool left = star(id_raney(f.cod), f) == f;
        const bool right = star(f, id_raney(f.dom)) == f;
        record(units, left && right, [&] { return who + (left ? " right" : " left") + " unit fails"; });
      });
    if (hat_valid) guarded(hat_valid, who, [&] {
        const auto h = hat(f);
        bool agrees = true;
        f.dom->classes().locally_closed.for_each([&](Elem x) { agrees = agrees && h(x) == f(x); });
        record(hat_valid, agrees && check_proximity_morphism(h).ok(), [&] { return who; });
      });
    if (zeta_nat) guarded(zeta_nat, who, [&] {
        const auto c = check_zeta_naturality(f, zeta(identification(f.dom)), zeta(identification(f.cod)));
        record(zeta_nat, c.ok, [&] { return who + ": " + c.detail + " at " + elems(*f.dom, {c.witness.empty() ? 0 : c.witness[0]}); });
      });
    if (square) guarded(square, who, [&] {
        const auto c = check_square(f);
        record(square, c.ok, [&] { return who + ": " + c.detail; });
      });
    if (r_id && f.dom == f.cod && f == id_raney(f.dom)) guarded(r_id, who, [&] {
        record(r_id, functor_R_mor(f).map == ext_identity(functor_R_obj(f.dom)).map, [&] { return who; });
      });
    if ((iso_agree || iso_forward || iso_mt) && is_T0(*f.dom) && is_T0(*f.cod)) guarded(iso_agree ? iso_agree : iso_forward ? iso_forward : iso_mt, who, [&] {
        const bool rmt = is_rmt_iso(f);
        const bool order = is_order_iso(f);
        if (iso_agree) record(iso_agree, rmt == order, [&] { return who + " rmt-iso=" + std::to_string(rmt); });
        if (iso_forward) record(iso_forward, !rmt || order, [&] { return who; });
        if (iso_mt) record(iso_mt, rmt == is_mt_iso(f), [&] { return who; });
      });
  }

  if (mt_raney)
    for (const auto& f : corpus_.mt_morphisms) {
      if (!is_T0(*f.dom) || !is_T0(*f.cod)) continue;
      record(mt_raney, check_raney_morphism(f).ok(), [&] { return describe(f); });
    }

  // The indiscrete algebra on four elements: ζ is an isomorphism that is not a bijection.
  if (auto* witness = law("ac8.non-bijective-iso", {"AC8"})) {
    for (const auto& m : corpus_.algebras) {
      if (m->size() != 4 || m->opens().count() != 2) continue;
      guarded(witness, m->name(), [&] {
        const auto z = zeta(identification(m));
        record(witness, z.dom->size() == 2 && is_rmt_iso(z) && !is_order_iso(z), [&] { return m->name(); });
      });
    }
  }
}

void Runner::composition_laws() {
  auto* assoc = law("ac4.associativity", {"AC4"});
  auto* agree = law("star.generated-agreement", {"AC4"});
  auto* hat_fun = law("ac6.hat-functoriality", {"AC6"});
  auto* r_fun = law("functor.R-composition", {});
  if (!assoc && !agree && !hat_fun && !r_fun) return;

  const auto& ms = corpus_.morphisms;
  std::unordered_map<const MTAlgebra*, std::vector<std::size_t>> by_dom;
  for (std::size_t k = 0; k < ms.size(); ++k) by_dom[ms[k].dom.get()].push_back(k);
  std::mt19937_64 rng(corpus_.seed ^ 0x9e3779b97f4a7c15ULL);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  auto next = [&](const MorphismTable& f) -> const MorphismTable* {
    const auto it = by_dom.find(f.cod.get());
    if (it == by_dom.end()) return nullptr;
    return &ms[it->second[pick(it->second.size())]];
  };

  const std::size_t samples = ms.empty() ? 0 : std::max<std::size_t>(400, ms.size() / 4);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto& f = ms[pick(ms.size())];
    const auto* g = next(f);
    if (!g) continue;
    const std::string pair = g->name + " * " + f.name;
    const auto gf = star(*g, f);
    if (agree) {
      bool ok = true;
      for (Elem a = 0; a < f.dom->size(); ++a) {
        const Elem plain = (*g)(f(a));
        ok = ok && f.cod->size() > 0 && g->cod->leq(gf(a), plain);
        if (f.dom->classes().gen_boolean.contains(a)) ok = ok && gf(a) == plain;
      }
      record(agree, ok, [&] { return pair; });
    }
    if (hat_fun) guarded(hat_fun, pair, [&] {
        record(hat_fun, hat(gf) == star_prox(hat(*g), hat(f)), [&] { return pair; });
      });
    if (r_fun) guarded(r_fun, pair, [&] {
        const auto lhs = functor_R_mor(gf);
        const auto rhs = ext_compose(functor_R_mor(*g), functor_R_mor(f));
        record(r_fun, lhs.map == rhs.map, [&] { return pair; });
      });
    if (assoc) {
      const auto* h = next(*g);
      if (!h) continue;
      const bool ok = star(*h, gf) == star(star(*h, *g), f);
      record(assoc, ok, [&] { return h->name + " * " + pair; });
    }
  }
}

void Runner::extension_laws() {
  auto* rho_nat = law("ac7.rho-naturality", {"AC7"});
  auto* lift = law("lift.commutes", {});
  auto* f_fun = law("functor.F", {});
  const auto& hs = corpus_.ext_morphisms;
  std::unordered_map<const RaneyExtension*, std::vector<std::size_t>> by_dom;
  for (std::size_t k = 0; k < hs.size(); ++k) by_dom[hs[k].dom.get()].push_back(k);

  for (const auto& h : hs) {
    const std::string who = h.name;
    if (rho_nat) guarded(rho_nat, who, [&] {
        const auto c = check_rho_naturality(h);
        record(rho_nat, c.ok, [&] { return who + ": " + c.detail; });
      });
    if (lift) guarded(lift, who, [&] {
        const auto e1 = boolean_envelope(h.dom->coframe_ptr());
        const auto e2 = boolean_envelope(h.cod->coframe_ptr());
        const auto b = boolean_lift(e1, e2, h.map);
        bool ok = true;
        for (Elem a = 0; a < h.map.size(); ++a) ok = ok && b[e1(a)] == e2(h(a));
        record(lift, ok, [&] { return who; });
      });
    if (f_fun) guarded(f_fun, who, [&] {
        const auto fdom = funayama_envelope(h.dom);
        bool ok = functor_F_mor(ext_identity(h.dom), fdom, fdom) == id_raney(fdom.algebra);
        const auto it = by_dom.find(h.cod.get());
        if (it != by_dom.end()) {
          const auto& k = hs[it->second.front()];
          const auto fcod = funayama_envelope(h.cod);
          const auto fk = funayama_envelope(k.cod);
          ok = ok && functor_F_mor(ext_compose(k, h), fdom, fk) ==
                         star(functor_F_mor(k, fcod, fk), functor_F_mor(h, fdom, fcod));
        }
        record(f_fun, ok, [&] { return who; });
      });
  }
}

void Runner::negative_laws() {
  auto* rejected = law("negatives.rejected", {});
  auto* r4 = law("ac5.r4-negatives", {"AC5"});
  for (const auto& g : corpus_.negatives) {
    const auto report = check_raney_morphism(g);
    if (rejected) record(rejected, !report.ok(), [&] { return describe(g); });
    if (!r4) continue;
    const bool pre = report.passes("R1") && report.passes("R2") && report.passes("R3") && report.passes("R5");
    if (!pre) continue;
    guarded(r4, describe(g), [&] {
      const auto e = check_r4_equivalents(g);
      const bool all_false = !e.r4 && !e.two_pair && !e.neg_form;
      if (all_false) ++report_.all_false_negatives;
      record(r4, e.agree(), [&] { return describe(g); });
    });
  }
}

void Runner::cantor_laws() {
  using namespace cantor;
  auto* nucleus = law("ac10.nucleus", {"AC10"});
  auto* residuation = law("ac10.heyting-residuation", {"AC10"});
  auto* witness = law("ac10.witness", {"AC10"});
  auto* meets = law("ac10.j-finite-meets", {"AC10"});
  auto* chains = law("ac10.j-truncation", {"AC10"});
  if (corpus_.cantor_depth == 0) return;

  const auto pts = points_up_to_depth(corpus_.cantor_depth);
  for (const auto& a : pts) {
    if (nucleus)
      record(nucleus, a <= nucleus_j(a) && nucleus_j(nucleus_j(a)) == nucleus_j(a), [&] { return a.to_string(); });
    if (chains) {
      bool ok = check_j_truncation(a);
      const auto chain = truncation_chain(a, a.prefix().size() + 4);
      for (std::size_t k = 0; k + 1 < chain.size(); ++k) ok = ok && chain[k + 1] <= chain[k] && a <= chain[k + 1];
      record(chains, ok, [&] { return a.to_string(); });
    }
    for (const auto& b : pts) {
      const std::string who = a.to_string() + " " + b.to_string();
      if (nucleus) record(nucleus, nucleus_j(std::min(a, b)) == std::min(nucleus_j(a), nucleus_j(b)), [&] { return who; });
      if (meets) {
        const std::vector<CantorPoint> s{a, b};
        record(meets, check_j_meet_preservation(s), [&] { return who; });
      }
      if (residuation) {
        const auto h = heyting(a, b);
        bool ok = true;
        for (const auto& x : pts) ok = ok && ((x <= h) == (std::min(a, x) <= b));
        record(residuation, ok, [&] { return who; });
      }
      if (witness && b < a) guarded(witness, who, [&] {
          const auto x = witness_left_endpoint(a, b);
          record(witness, is_left_endpoint(x) && !in_fixpoints(x) && in_open_cap_closed(x, a, b), [&] { return who; });
        });
    }
  }
}

SuiteReport Runner::run() {
  const auto start = std::chrono::steady_clock::now();
  report_.algebras = corpus_.algebras.size();
  report_.frames = corpus_.frames.size();
  report_.morphisms = corpus_.morphisms.size();
  report_.negatives = corpus_.negatives.size();
  object_laws();
  frame_laws();
  morphism_laws();
  composition_laws();
  extension_laws();
  negative_laws();
  cantor_laws();
  for (auto& l : laws_)
    if (l.passed + l.failed > 0) report_.laws.push_back(std::move(l));
  report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report_;
}

}  // namespace

SuiteReport run_suite(const Corpus& corpus, const std::vector<std::string>& law_set) {
  Runner runner(corpus, law_set);
  return runner.run();
}

}  // namespace raneykit
