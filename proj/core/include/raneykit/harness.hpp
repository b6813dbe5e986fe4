#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "raneykit/extension.hpp"

namespace raneykit {

/// All MT-algebras (2^k, L) with k ≤ max_atoms, one per subframe L. Each
/// carrier is a powerset with atoms a, b, c, d; every k is enumerated
/// exhaustively. Names are "m<k>_<i>".
std::vector<AlgebraPtr> enumerate_mt_algebras(std::size_t max_atoms);

/// Down-set lattices of all posets with at most `max_points` points, one per
/// isomorphism class, keeping those with at most `max_size` elements.
std::vector<LatticePtr> enumerate_frames(std::size_t max_points, std::size_t max_size);

struct CorpusOptions {
  std::size_t max_atoms = 3;
  /// Morphisms are searched between every pair of algebras with at most
  /// this many atoms; larger algebras only pair with `sampled_pairs` partners.
  std::size_t full_pair_atoms = 3;
  std::size_t sampled_pairs = 64;
  /// Cap on extension-derived Raney morphisms kept per ordered pair.
  std::size_t per_pair = 6;
  std::size_t composites = 400;
  std::size_t frame_points = 6;
  std::size_t frame_size = 20;
  std::size_t cantor_depth = 6;
  std::uint64_t seed = 1;
};

struct Corpus {
  std::vector<AlgebraPtr> algebras;
  std::vector<std::string> algebra_tags;
  std::vector<LatticePtr> frames;
  std::vector<ExtensionPtr> extensions;  // R M for each enumerated algebra
  std::vector<MorphismTable> morphisms;  // Raney morphisms
  std::vector<std::string> morphism_tags;
  std::vector<MorphismTable> prox_identities;
  std::vector<MorphismTable> mt_morphisms;  // MT-morphisms found by atom search
  std::vector<MorphismTable> negatives;     // mutated tables that fail some Raney axiom
  std::vector<ExtMorphism> ext_morphisms;
  std::size_t cantor_depth = 0;  // 0 skips the Cantor laws
  std::uint64_t seed = 1;
};

/// Algebras, frames, and the morphism corpus: identities, ζ and φ components,
/// F-images and ζ ⋆ Fh ⋆ φ lifts of extension morphisms, MT-morphisms, sampled
/// ⋆-composites, and mutated negatives.
Corpus generate_corpus(const CorpusOptions& options);

struct LawResult {
  std::string law;
  std::vector<std::string> criteria;  // e.g. {"AC4"}
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> witnesses;  // first few failures
};

struct SuiteReport {
  std::vector<LawResult> laws;
  std::size_t algebras = 0;
  std::size_t frames = 0;
  std::size_t morphisms = 0;
  std::size_t negatives = 0;
  std::size_t all_false_negatives = 0;  // R1,R2,R3,R5 hold and the three R4 forms fail
  double seconds = 0;

  bool ok() const;
  const LawResult* find(const std::string& law) const;
  /// Human-readable summary including wall time.
  std::string text() const;
  /// `key=value` lines; deterministic, no timing.
  std::string key_value() const;
};

/// Runs every law over the corpus. An empty law set means all laws; laws
/// with nothing to check are left out of the report.
SuiteReport run_suite(const Corpus& corpus, const std::vector<std::string>& law_set = {});

}  // namespace raneykit
