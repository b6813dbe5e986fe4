#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "raneykit/cli.hpp"
#include "raneykit/text_format.hpp"

using namespace raneykit;

namespace {

std::string data(const char* file) { return std::string(RANEYKIT_TEST_DATA) + "/" + file; }

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

/// Writes `text` to a fresh file under the temp directory and returns its path.
std::string scratch(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("raneykit_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("usage and help") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({"laws", "--max-atoms", "9"}).code == kExitUsage);
  CHECK(run({"check-morphism", data("b2_pair.txt"), "--as", "nonsense"}).code == kExitUsage);
}

TEST_CASE("validate") {
  const auto ok = run({"validate", data("indiscrete.txt")});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("valid") != std::string::npos);
  // One morphism in the pair file is not Raney, so the file as a whole is invalid.
  const auto mixed = run({"validate", data("b2_pair.txt")});
  CHECK(mixed.code == kExitInvalid);
  CHECK(mixed.out.find("morphism back: mt no, proximity no, raney no") != std::string::npos);

  const auto bad = run({"validate", data("bad_interior.txt")});
  CHECK(bad.code == kExitInvalid);
  CHECK(bad.err.find("bad_interior.txt:6:") != std::string::npos);

  CHECK(run({"validate", data("bad_reference.txt")}).code == kExitUsage);
  CHECK(run({"validate", data("missing.txt")}).code == kExitUsage);
}

TEST_CASE("envelope of the 3-chain") {
  const auto r = run({"envelope", data("frame_chain3.txt")});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("# box: {}->{} {m}->{m} {1}->{} {m,1}->{m,1}") != std::string::npos);
  CHECK(r.out.find("opens: {} {m} {m,1}") != std::string::npos);
  // The output is itself a loadable document.
  Workspace ws;
  ws.load(r.out);
  const auto m = ws.algebra("F(c3)");
  CHECK(m->box_table() == std::vector<Elem>{0, 1, 0, 3});

  CHECK(run({"envelope", data("indiscrete.txt")}).code == kExitInvalid);  // not a lattice block
}

TEST_CASE("classify and check-morphism") {
  const auto c = run({"classify", data("indiscrete.txt")});
  CHECK(c.code == kExitOk);
  CHECK(c.out.find("T0: no") != std::string::npos);
  CHECK(c.out.find("locally-closed: 0 1") != std::string::npos);

  const auto good = run({"check-morphism", data("b2_pair.txt") + ":inclusion"});
  CHECK(good.code == kExitOk);
  const auto bad = run({"check-morphism", data("b2_pair.txt") + ":back"});
  CHECK(bad.code == kExitInvalid);
  CHECK(bad.out.find("R2  FAIL  at b") != std::string::npos);
  CHECK(run({"check-morphism", data("b2_pair.txt") + ":inclusion", "--as", "mt"}).code == kExitOk);
  CHECK(run({"check-morphism", data("b2_pair.txt") + ":nothing"}).code == kExitUsage);
}

TEST_CASE("compose and functors produce loadable documents") {
  const auto inc = data("b2_pair.txt") + ":inclusion";
  const auto fine_id = scratch("fine_id.txt",
                               "lattice b2\nelements: 0 a b 1\ncovers: 0<a 0<b a<1 b<1\n"
                               "mtalgebra fine\nbase: b2\nopens: 0 a b 1\n"
                               "morphism one : fine -> fine\nmap: 0->0 a->a b->b 1->1\n");
  const auto composed = run({"compose", fine_id, inc});
  REQUIRE(composed.code == kExitOk);
  Workspace ws;
  ws.load(composed.out);
  CHECK(ws.morphism("one*inclusion").map == std::vector<Elem>{0, 1, 2, 3});
  CHECK(run({"compose", inc, inc}).code == kExitInvalid);  // endpoints do not match

  const auto rmor = run({"functor", "R", inc});
  REQUIRE(rmor.code == kExitOk);
  Workspace wr;
  wr.load(rmor.out);
  CHECK(wr.ext_morphisms.size() == 1);

  const auto robj = run({"functor", "R", data("indiscrete.txt")});
  REQUIRE(robj.code == kExitOk);
  const auto ext = scratch("r_ind.txt", robj.out);
  const auto fobj = run({"functor", "F", ext});
  REQUIRE(fobj.code == kExitOk);
  Workspace wf;
  wf.load(fobj.out);
  CHECK(wf.algebras.begin()->second->size() == 2);
  CHECK(run({"functor", "U", ext}).code == kExitOk);
  CHECK(run({"functor", "I", inc}).code == kExitOk);
  CHECK(run({"functor", "F", inc}).code == kExitInvalid);
  CHECK(run({"functor", "R", data("b2_pair.txt") + ":back"}).code == kExitInvalid);
}

TEST_CASE("cantor subcommands") {
  CHECK(run({"cantor", "heyting", "0.2(0)", "0.0(2)"}).out == "0.0(2)\n");
  CHECK(run({"cantor", "j", "0.0(2)"}).out == "0.2(0)\n");
  CHECK(run({"cantor", "compare", "0.0(2)", "0.2(0)"}).out == "<\n");
  const auto show = run({"cantor", "show", "0.02(2)"});
  CHECK(show.out.find("0.0(2) = 1/3") == 0);
  CHECK(show.out.find("left endpoint") != std::string::npos);
  CHECK(run({"cantor", "cover", "0.2(0)"}).code == kExitInvalid);
  CHECK(run({"cantor", "show", "0.3(0)"}).code == kExitUsage);
  CHECK(run({"cantor", "witness", "0.0(2)", "0.2(0)"}).code == kExitInvalid);
  const auto demo = run({"cantor", "demo"});
  CHECK(demo.code == kExitOk);
  CHECK(demo.out.find("left endpoint") != std::string::npos);
}

TEST_CASE("law suite output") {
  const auto kv = run({"laws", "--max-atoms", "2", "--format", "kv", "--law", "ac7.square", "--law", "ac4.unit-laws"});
  CHECK(kv.code == kExitOk);
  CHECK(kv.out.find("law.ac7.square.failed=0") != std::string::npos);
  CHECK(kv.out.find("suite.status=pass") != std::string::npos);
  const auto text = run({"laws", "--max-atoms", "1"});
  CHECK(text.out.find("law suite:") == 0);
}
