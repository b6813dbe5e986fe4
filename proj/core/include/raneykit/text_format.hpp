#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "raneykit/extension.hpp"

namespace raneykit {

/// Carrier-size cap for parsed structures: $RANEYKIT_MAX_ELEMS, default 4096.
std::size_t max_elements();

/// Named structures loaded from text. Blocks are
///
///     lattice <name>                      mtalgebra <name>
///     elements: e0 e1 ...                 base: <lattice>
///     covers: e0<e1 ...                   opens: e0 e3 ...
///
///     raney <name>                        morphism <name> : <alg> -> <alg>
///     coframe: <lattice>                  map: e0->u0 e1->u3 ...
///     subframe: e0 e2 ...
///
///     extmorphism <name> : <raney> -> <raney>
///     map: ...
///     latticemap <name> : <lattice> -> <lattice>
///     map: ...
///
/// `#` starts a comment. References must name blocks loaded earlier.
struct Workspace {
  enum class Kind { Lattice, Algebra, Extension, Morphism, ExtMorphism, LatticeMap };

  std::map<std::string, LatticePtr> lattices;
  std::map<std::string, AlgebraPtr> algebras;
  std::map<std::string, ExtensionPtr> extensions;
  std::map<std::string, MorphismTable> morphisms;
  std::map<std::string, ExtMorphism> ext_morphisms;
  std::map<std::string, LatticeMap> lattice_maps;
  std::vector<std::pair<Kind, std::string>> order;  // load order

  bool contains(const std::string& name) const;
  LatticePtr lattice(const std::string& name) const;       // throws UnresolvedReference
  AlgebraPtr algebra(const std::string& name) const;       // throws UnresolvedReference
  ExtensionPtr extension(const std::string& name) const;   // throws UnresolvedReference
  const MorphismTable& morphism(const std::string& name) const;
  const ExtMorphism& ext_morphism(const std::string& name) const;
  const LatticeMap& lattice_map(const std::string& name) const;

  /// Parses and validates every block. Syntax problems raise `ParseError` and
  /// unknown names `UnresolvedReference`, both prefixed "<source>:<line>:";
  /// failed validation rethrows the validator's error with the same prefix.
  void load(std::string_view text, const std::string& source = "<input>");
  void load_file(const std::string& path);
};

std::string print_lattice(const FiniteLattice& l, const std::string& name);
std::string print_algebra(const MTAlgebra& m, const std::string& name, const std::string& base_name);
std::string print_extension(const RaneyExtension& r, const std::string& name, const std::string& coframe_name);
std::string print_morphism(const MorphismTable& f, const std::string& name, const std::string& dom_name,
                           const std::string& cod_name);
std::string print_ext_morphism(const ExtMorphism& h, const std::string& name, const std::string& dom_name,
                               const std::string& cod_name);
std::string print_lattice_map(const LatticeMap& h, const std::string& name, const std::string& dom_name,
                              const std::string& cod_name);

/// Self-contained documents: the carrier lattice(s) followed by the structure.
/// Carrier blocks are named "<name>.base" (or ".coframe"); empty names
/// become "m", "r", or "f".
std::string print_algebra_document(const MTAlgebra& m);
std::string print_extension_document(const RaneyExtension& r);
/// Both algebras with their carriers, then the morphism. Endpoints that are
/// the same algebra are printed once.
std::string print_morphism_document(const MorphismTable& f);
std::string print_ext_morphism_document(const ExtMorphism& h);
/// Lattice maps carry no names of their own; `name` labels the blocks.
std::string print_lattice_map_document(const LatticeMap& h, const std::string& name);

}  // namespace raneykit
