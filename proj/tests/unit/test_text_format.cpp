#include <cstdlib>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "raneykit/harness.hpp"
#include "raneykit/text_format.hpp"
#include "support.hpp"

using namespace raneykit;

namespace {

std::string data(const char* file) { return std::string(RANEYKIT_TEST_DATA) + "/" + file; }

/// Runs `load` and returns the error, failing the test if nothing is thrown.
Error load_error(std::string_view text) {
  try {
    Workspace ws;
    ws.load(text, "t.txt");
  } catch (const Error& e) {
    return e;
  }
  FAIL("load succeeded");
  return Error(ErrorCode::ParseError, "unreachable");
}

}  // namespace

TEST_CASE("loading the sample files") {
  Workspace ws;
  ws.load_file(data("b2_pair.txt"));
  CHECK(ws.order.size() == 5);
  const auto coarse = ws.algebra("coarse");
  CHECK(coarse->opens().count() == 3);
  CHECK(is_T0(*coarse));
  const auto& inc = ws.morphism("inclusion");
  CHECK(check_raney_morphism(inc).ok());
  CHECK_FALSE(check_raney_morphism(ws.morphism("back")).passes("R2"));
  CHECK_THROWS_AS(ws.algebra("inclusion"), Error);

  Workspace frame;
  frame.load_file(data("frame_chain3.txt"));
  CHECK(frame.lattice("c3")->size() == 3);
}

TEST_CASE("errors carry the source and line") {
  SUBCASE("validator failure") {
    Workspace ws;
    try {
      ws.load_file(data("bad_interior.txt"));
      FAIL("expected NotASubframe");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotASubframe);
      CHECK(std::string(e.what()).find("bad_interior.txt:6:") != std::string::npos);
      // The code appears once, not repeated by the rethrow.
      const std::string what = e.what();
      CHECK(what.find("NotASubframe", 1) == std::string::npos);
    }
  }
  SUBCASE("unknown base lattice") {
    Workspace ws;
    try {
      ws.load_file(data("bad_reference.txt"));
      FAIL("expected UnresolvedReference");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnresolvedReference);
      CHECK(std::string(e.what()).find("bad_reference.txt:6:") != std::string::npos);
    }
  }
  SUBCASE("syntax") {
    CHECK(load_error("elements: 0 1\n").code() == ErrorCode::ParseError);
    CHECK(load_error("lattice x\nelements: 0 1\ncovers: 0-1\n").code() == ErrorCode::ParseError);
    CHECK(load_error("lattice x\nelements: 0 0\n").code() == ErrorCode::ParseError);
    CHECK(load_error("lattice x\nelements: 0 1\nfoo: 1\n").code() == ErrorCode::ParseError);
    CHECK(load_error("lattice x\nelements: 0 1\ncovers: 0<2\n").code() == ErrorCode::UnresolvedReference);
    const auto twice = load_error("lattice x\nelements: 0 1\ncovers: 0<1\nlattice x\nelements: 0\n");
    CHECK(std::string(twice.what()).find("t.txt:4:") != std::string::npos);
    // Two incomparable maximal elements: not a lattice.
    CHECK(load_error("lattice v\nelements: 0 a b\ncovers: 0<a 0<b\n").code() == ErrorCode::NotALattice);
    CHECK(load_error("lattice c\nelements: 0 1\ncovers: 0<1\nmorphism f : c -> c\nmap: 0->0 1->1\n").code() ==
          ErrorCode::UnresolvedReference);
    const auto partial = load_error(
        "lattice c\nelements: 0 1\ncovers: 0<1\nmtalgebra m\nbase: c\nopens: 0 1\n"
        "morphism f : m -> m\nmap: 0->0\n");
    CHECK(partial.code() == ErrorCode::ParseError);
    CHECK(std::string(partial.what()).find("t.txt:8:") != std::string::npos);
  }
  CHECK_THROWS_AS(Workspace().load_file(data("missing.txt")), Error);
}

TEST_CASE("size cap from the environment") {
  CHECK(max_elements() == 4096);
  ::setenv("RANEYKIT_MAX_ELEMS", "3", 1);
  CHECK(max_elements() == 3);
  CHECK(load_error("lattice x\nelements: 0 a b 1\ncovers: 0<a 0<b a<1 b<1\n").code() == ErrorCode::SizeLimit);
  Workspace ws;
  CHECK_NOTHROW(ws.load("lattice x\nelements: 0 1\ncovers: 0<1\n"));
  ::setenv("RANEYKIT_MAX_ELEMS", "junk", 1);
  CHECK(max_elements() == 4096);
  ::unsetenv("RANEYKIT_MAX_ELEMS");
}

TEST_CASE("printed documents load back to equal structures") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 30; ++trial) {
    const auto m = support::to_algebra(oracle::random_algebra(static_cast<unsigned>(rng() % 4), rng), "m");
    Workspace ws;
    ws.load(print_algebra_document(*m));
    CHECK(*ws.algebra("m") == *m);

    const auto r = functor_R_obj(m);
    Workspace wr;
    wr.load(print_extension_document(*r));
    CHECK(*wr.extension(r->name()) == *r);

    const auto id = identify(m);
    const auto z = zeta(id);
    Workspace wz;
    wz.load(print_morphism_document(z));
    const auto& back = wz.morphism(wz.order.back().second);
    CHECK(back.map == z.map);
    CHECK(*back.dom == *z.dom);
    CHECK(*back.cod == *z.cod);

    const auto h = ext_identity(r);
    Workspace wh;
    wh.load(print_ext_morphism_document(h));
    CHECK(wh.ext_morphism(wh.order.back().second).map == h.map);
  }
  const auto c3 = std::make_shared<const FiniteLattice>(chain(3));
  const LatticeMap lm{c3, c3, {0, 2, 2}};
  Workspace wl;
  wl.load(print_lattice_map_document(lm, "k"));
  CHECK(wl.lattice_map("k") == lm);

  // Every corpus algebra survives a round trip.
  for (const auto& m : enumerate_mt_algebras(3)) {
    Workspace w;
    w.load(print_algebra_document(*m));
    CHECK(*w.algebra(m->name()) == *m);
  }
}
