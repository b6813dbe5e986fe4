#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "raneykit/harness.hpp"

using namespace raneykit;
using oracle::Mask;

namespace {

/// Subsets of 2^k containing 0 and top and closed under ∧ and ∨.
std::size_t count_subframes(unsigned atoms) {
  const Mask top = (Mask{1} << atoms) - 1;
  const std::size_t n = std::size_t{1} << atoms;
  std::vector<Mask> middle;
  for (Mask x = 1; x < top; ++x) middle.push_back(x);
  std::size_t count = 0;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << middle.size()); ++pick) {
    std::vector<bool> in(n, false);
    in[0] = in[top] = true;
    for (std::size_t i = 0; i < middle.size(); ++i)
      if (pick >> i & 1) in[middle[i]] = true;
    bool closed = true;
    for (Mask a = 0; a < n && closed; ++a)
      for (Mask b = 0; b < n && closed; ++b)
        if (in[a] && in[b]) closed = in[a & b] && in[a | b];
    count += closed;
  }
  return count;
}

}  // namespace

TEST_CASE("enumerated MT-algebras are the subframes of small powersets") {
  const auto all = enumerate_mt_algebras(3);
  std::map<std::size_t, std::size_t> by_size;
  for (const auto& m : all) by_size[m->size()]++;
  CHECK(by_size[1] == 1);
  CHECK(by_size[2] == 1);
  CHECK(by_size[4] == count_subframes(2));
  CHECK(by_size[8] == count_subframes(3));
  CHECK(count_subframes(2) == 4);
  // No two algebras of the same size share an interior table.
  std::set<std::vector<Elem>> tables;
  for (const auto& m : all) CHECK(tables.insert(m->box_table()).second);
  CHECK(all.front()->name().rfind("m0_", 0) == 0);
  CHECK_THROWS_AS(enumerate_mt_algebras(5), Error);
}

TEST_CASE("enumerated frames are the down-set lattices of unlabelled posets") {
  // Unlabelled posets on 0..4 points: 1, 1, 2, 5, 16.
  CHECK(enumerate_frames(3, 100).size() == 1 + 1 + 2 + 5);
  CHECK(enumerate_frames(4, 100).size() == 1 + 1 + 2 + 5 + 16);
  // Sizes at most 4: empty poset, one point, 2-chain, 2-antichain, 3-chain.
  CHECK(enumerate_frames(3, 4).size() == 5);
  for (const auto& l : enumerate_frames(4, 100)) CHECK(is_distributive(*l));
}

TEST_CASE("an empty corpus produces an empty, passing report") {
  const auto report = run_suite(Corpus{});
  CHECK(report.laws.empty());
  CHECK(report.ok());
  CHECK(report.key_value().find("suite.status=pass") != std::string::npos);
}

TEST_CASE("small corpus") {
  CorpusOptions opts;
  opts.max_atoms = 2;
  opts.frame_points = 3;
  opts.cantor_depth = 3;
  opts.composites = 60;
  const auto corpus = generate_corpus(opts);
  CHECK(corpus.algebras.size() >= 7);
  CHECK(corpus.frames.size() == 9);
  CHECK_FALSE(corpus.morphisms.empty());
  CHECK_FALSE(corpus.negatives.empty());
  for (const auto& f : corpus.negatives) CHECK_FALSE(check_raney_morphism(f).ok());

  const auto report = run_suite(corpus);
  for (const auto& law : report.laws) {
    if (law.law == "ac8.iso-agreement") continue;
    CHECK_MESSAGE(law.failed == 0, law.law);
    CHECK(law.passed > 0);
  }
  for (const char* name : {"ac1.funayama-frames", "ac3.t0-characterizations", "ac4.associativity", "ac4.unit-laws",
                           "ac6.hat-functoriality", "ac7.square", "ac9.reflector", "ac10.heyting-residuation"})
    CHECK_MESSAGE(report.find(name) != nullptr, name);
  CHECK(report.find("no.such.law") == nullptr);

  // key_value output carries no timing, so a rerun reproduces it exactly.
  CHECK(run_suite(generate_corpus(opts)).key_value() == report.key_value());
  CHECK(report.text().find("law suite:") == 0);

  const auto only = run_suite(corpus, {"ac7.square"});
  REQUIRE(only.laws.size() == 1);
  CHECK(only.laws[0].law == "ac7.square");
  CHECK(only.laws[0].criteria == std::vector<std::string>{"AC7"});
}

TEST_CASE("negatives include maps failing only R4") {
  CorpusOptions opts;
  opts.max_atoms = 3;
  opts.frame_points = 0;
  opts.cantor_depth = 0;
  const auto corpus = generate_corpus(opts);
  std::size_t r4_only = 0;
  for (const auto& f : corpus.negatives)
    if (check_raney_morphism(f).failed() == std::vector<std::string>{"R4"}) ++r4_only;
  CHECK(r4_only >= 20);
  const auto report = run_suite(corpus, {"ac5.r4-negatives", "ac5.r4-equivalents"});
  CHECK(report.ok());
  CHECK(report.all_false_negatives >= 20);
}
