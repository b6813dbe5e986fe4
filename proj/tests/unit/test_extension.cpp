#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "raneykit/extension.hpp"
#include "support.hpp"

using namespace raneykit;
using oracle::Mask;

namespace {

LatticePtr ptr(FiniteLattice l) { return std::make_shared<const FiniteLattice>(std::move(l)); }

ExtensionPtr whole(const LatticePtr& l) { return validate_extension(l, Subset::full(l->size())); }

std::vector<Bits> random_poset(std::size_t n, std::mt19937_64& rng) {
  std::vector<Bits> rows(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng() % 2 == 0) rows[i].set(j);
  return reflexive_transitive_closure(std::move(rows));
}

/// Every map d1 -> d2 preserving bounds and binary meets and joins, by brute force.
std::size_t count_bounded_homs(const FiniteLattice& d1, const FiniteLattice& d2) {
  std::vector<Elem> map(d1.size(), 0);
  std::size_t count = 0;
  while (true) {
    bool ok = map[d1.bottom()] == d2.bottom() && map[d1.top()] == d2.top();
    for (Elem a = 0; a < d1.size() && ok; ++a)
      for (Elem b = 0; b < d1.size() && ok; ++b)
        ok = map[d1.meet(a, b)] == d2.meet(map[a], map[b]) && map[d1.join(a, b)] == d2.join(map[a], map[b]);
    count += ok;
    std::size_t pos = 0;
    while (pos < map.size() && ++map[pos] == d2.size()) map[pos++] = 0;
    if (pos == map.size()) break;
  }
  return count;
}

}  // namespace

TEST_CASE("validate_extension") {
  const auto b2 = support::powerset_ptr(2);
  SUBCASE("whole carrier is accepted") {
    const auto r = whole(b2);
    CHECK(r->certificate().meet_generating);
    CHECK(r->certificate().carrier_is_subframe);
  }
  SUBCASE("a proper subframe does not meet-generate") {
    try {
      validate_extension(b2, Subset::of(4, std::vector<Elem>{0, 1, 3}));
      FAIL("expected NotMeetGenerating");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotMeetGenerating);
      CHECK(e.witness() == std::vector<Elem>{2});
    }
  }
  SUBCASE("M3 is not a coframe") {
    const auto m3 = ptr(diamond_m3());
    try {
      validate_extension(m3, Subset::full(5));
      FAIL("expected NotCoframe");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotCoframe);
    }
  }
  SUBCASE("a subset that is not a subframe") {
    try {
      validate_extension(b2, Subset::of(4, std::vector<Elem>{0, 1, 2}));
      FAIL("expected NotASubframe");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotASubframe);
    }
  }
}

TEST_CASE("R on objects and morphisms") {
  const auto ind = support::to_algebra(support::indiscrete(2), "ind");
  const auto r = functor_R_obj(ind);
  CHECK(r->size() == 2);
  CHECK(r->subframe().count() == 2);

  const auto disc = support::to_algebra(support::discrete(2));
  CHECK(functor_R_obj(disc)->size() == 4);

  // R preserves identities and composition on the oracle's Raney maps.
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const auto bits = oracle::random_algebra(static_cast<unsigned>(rng() % 4), rng);
    const auto m = support::to_algebra(bits);
    CHECK(functor_R_mor(id_raney(m)) == ext_identity(functor_R_obj(m)));
    // The coframe of R M is the lattice of saturated elements.
    CHECK(functor_R_obj(m)->size() == oracle::classes(bits).saturated.size());
  }
  CHECK_THROWS_AS(functor_R_mor(make_morphism(disc, disc, {0, 0, 0, 3})), Error);
}

TEST_CASE("bounded lattice homs and the boolean lift") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 25; ++trial) {
    const auto d1 = ptr(downset_lattice(random_poset(rng() % 4, rng)));
    const auto d2 = ptr(downset_lattice(random_poset(rng() % 4, rng)));
    if (d1->size() > 6 || d2->size() > 6) continue;
    const auto homs = bounded_lattice_homs(d1, d2);
    CHECK(homs.size() == count_bounded_homs(*d1, *d2));
    const auto e1 = boolean_envelope(d1);
    const auto e2 = boolean_envelope(d2);
    for (const auto& h : homs) {
      const auto lift = boolean_lift(e1, e2, h.map);
      // 𝔅h ∘ e1 = e2 ∘ h, and 𝔅h is a boolean morphism of the bitmask algebras.
      for (Elem a = 0; a < d1->size(); ++a) CHECK(lift[e1(a)] == e2(h(a)));
      const Mask top1 = static_cast<Mask>(e1.cod->size() - 1), top2 = static_cast<Mask>(e2.cod->size() - 1);
      for (Mask x = 0; x <= top1; ++x) {
        CHECK(lift[top1 & ~x] == (top2 & ~lift[x]));
        for (Mask y = 0; y <= top1; ++y) CHECK(lift[x & y] == (lift[x] & lift[y]));
      }
    }
  }
  const auto c3 = ptr(chain(3));
  CHECK_THROWS_AS(boolean_lift(boolean_envelope(c3), boolean_envelope(c3), {0, 0, 1}), Error);
}

TEST_CASE("F of the 3-chain is the four-element T_D algebra") {
  const auto r = whole(ptr(chain(3)));
  const auto env = funayama_envelope(r);
  CHECK(env.algebra->size() == 4);
  CHECK(env.algebra->box_table() == std::vector<Elem>{0, 1, 0, 3});
  CHECK(env.embedding.map == std::vector<Elem>{0, 1, 3});
  CHECK(is_TD(*env.algebra));
  const auto f2 = functor_F_obj(whole(ptr(chain(2))));
  CHECK(f2->size() == 2);
}

TEST_CASE("zeta on the indiscrete algebra is a non-bijective isomorphism") {
  const auto ind = support::to_algebra(support::indiscrete(2), "ind");
  const auto id = identify(ind);
  const auto z = zeta(id);
  CHECK(z.dom->size() == 2);
  CHECK(z.cod->size() == 4);
  CHECK(z.map == std::vector<Elem>{0, 3});
  CHECK(is_rmt_iso(z));
  CHECK_FALSE(is_order_iso(z));
  const auto cert = rmt_iso_certificate(z);
  REQUIRE(cert.inverse);
  CHECK(star(*cert.inverse, z) == id_raney(z.dom));
  CHECK(star(z, *cert.inverse) == id_raney(ind));
  CHECK(check_zeta_phi_inverse(id));
}

TEST_CASE("a bijective order-isomorphism need not be a Raney isomorphism") {
  // Identity carrier map from (2^2, {0, a, 1}) to the discrete 2^2.
  const auto coarse = support::to_algebra(support::with_opens(2, {0, 1, 3}));
  const auto fine = support::to_algebra(support::discrete(2));
  const auto f = make_morphism(coarse, fine, {0, 1, 2, 3});
  CHECK(check_raney_morphism(f).ok());
  CHECK(is_T0(*coarse));
  CHECK(is_T0(*fine));
  CHECK(is_order_iso(f));
  CHECK_FALSE(is_mt_iso(f));
  CHECK_FALSE(is_rmt_iso(f));
  // The inverse table fails R2: the open {b} pulls back to a non-open.
  const auto back = make_morphism(fine, coarse, {0, 1, 2, 3});
  CHECK_FALSE(check_raney_morphism(back).passes("R2"));
  CHECK(is_rmt_iso(make_morphism(fine, fine, {0, 1, 2, 3})));
  CHECK(is_mt_iso(make_morphism(fine, fine, {0, 2, 1, 3})));
}

TEST_CASE("equivalence laws on random algebras") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const auto bits = oracle::random_algebra(static_cast<unsigned>(rng() % 4), rng);
    const auto m = support::to_algebra(bits);
    const auto id = identify(m);
    const auto z = zeta(id);
    const auto p = phi(id);
    CHECK(check_zeta_phi_inverse(id));
    CHECK(check_triangles(m, functor_R_obj(m)));
    // ζ is bijective exactly for T0 algebras.
    const bool bijective = z.dom->size() == z.cod->size() && is_order_iso(z);
    CHECK(bijective == oracle::t0(bits));
    CHECK(is_rmt_iso(z));
    CHECK(is_rmt_iso(p));
    CHECK(is_T0(*id.hull.algebra));
    CHECK(check_square(id_raney(m)));
    CHECK(check_zeta_naturality(id_raney(m)));
    CHECK(check_rho_naturality(ext_identity(functor_R_obj(m))));
  }
}

TEST_CASE("perturbed components break naturality") {
  const auto m = support::to_algebra(support::discrete(2));
  const auto g = id_raney(m);
  const auto z = zeta(identify(m));
  auto swapped = z;
  std::swap(swapped.map[1], swapped.map[2]);
  CHECK(check_zeta_naturality(g, z, z));
  CHECK_FALSE(check_zeta_naturality(g, z, swapped));

  const auto r = functor_R_obj(m);
  const auto env = funayama_envelope(r);
  const auto rh = rho(env);
  auto bad = rh;
  std::swap(bad.map[1], bad.map[2]);
  CHECK(check_rho_naturality(ext_identity(r), rh, rh));
  CHECK_FALSE(check_rho_naturality(ext_identity(r), bad, rh));
}

TEST_CASE("extension morphisms, inverses and universe-relative monos") {
  const auto r = functor_R_obj(support::to_algebra(support::discrete(2)));
  const auto endo = extension_morphisms(r, r);
  // Bounded lattice endomorphisms of 2^2 preserving the (full) subframe: four of them.
  CHECK(endo.size() == 4);
  std::size_t isos = 0;
  for (const auto& h : endo) {
    CHECK(check_ext_morphism(h).ok());
    isos += is_ext_iso(h);
  }
  CHECK(isos == 2);
  const auto id = ext_identity(r);
  CHECK(is_universe_mono(id, endo));
  CHECK(is_universe_epi(id, endo));
  for (const auto& h : endo)
    if (!is_ext_iso(h)) CHECK_FALSE(is_universe_mono(h, endo));

  const auto m = support::to_algebra(support::discrete(1));
  const std::vector<MorphismTable> probes{id_raney(m)};
  CHECK(is_universe_mono(id_raney(m), probes));
  CHECK(is_universe_epi(id_raney(m), probes));
}

TEST_CASE("lifting extension morphisms gives Raney morphisms") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = support::to_algebra(oracle::random_algebra(static_cast<unsigned>(rng() % 3), rng));
    const auto b = support::to_algebra(oracle::random_algebra(static_cast<unsigned>(rng() % 3), rng));
    const auto ia = identify(a), ib = identify(b);
    for (const auto& h : extension_morphisms(ia.raney, ib.raney)) {
      const auto f = raney_from_extension_morphism(h, ia, ib);
      CHECK(check_raney_morphism(f).ok());
      CHECK(functor_R_mor(f) == h);
      const auto fh = functor_F_mor(h, ia.hull, ib.hull);
      CHECK(check_raney_morphism(fh).ok());
    }
  }
}
