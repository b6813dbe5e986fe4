#pragma once
// Bridges between the bitmask oracles and library values.

#include <memory>
#include <vector>

#include "oracles.hpp"
#include "raneykit/morphism.hpp"

namespace support {

inline raneykit::LatticePtr powerset_ptr(unsigned atoms) {
  return std::make_shared<const raneykit::FiniteLattice>(raneykit::powerset(atoms));
}

/// Library algebra on powerset(k); element index equals the atom bitmask.
inline raneykit::AlgebraPtr to_algebra(const oracle::BitAlgebra& m, const std::string& name = {}) {
  std::vector<raneykit::Elem> opens;
  for (oracle::Mask x = 0; x < m.size(); ++x)
    if (m.open[x]) opens.push_back(x);
  return raneykit::from_subframe(powerset_ptr(m.atoms), raneykit::Subset::of(m.size(), opens), name);
}

inline oracle::BitAlgebra indiscrete(unsigned atoms) {
  oracle::BitAlgebra m{atoms, std::vector<bool>(std::size_t{1} << atoms, false)};
  m.open[0] = m.open[m.top()] = true;
  return m;
}

inline oracle::BitAlgebra discrete(unsigned atoms) {
  return oracle::BitAlgebra{atoms, std::vector<bool>(std::size_t{1} << atoms, true)};
}

inline oracle::BitAlgebra with_opens(unsigned atoms, std::initializer_list<oracle::Mask> opens) {
  oracle::BitAlgebra m{atoms, std::vector<bool>(std::size_t{1} << atoms, false)};
  for (auto o : opens) m.open[o] = true;
  return m;
}

inline std::vector<oracle::Mask> masks(const std::vector<raneykit::Elem>& v) { return {v.begin(), v.end()}; }

}  // namespace support
