// Integer lattice operations: pairings, Weyl reflections, chamber tests, and
// splitting a hyperbolic plane off an even unimodular lattice.
#pragma once

#include <tuple>
#include <vector>

#include "t237/qmatrix.hpp"
#include "t237/rational.hpp"

namespace t237 {

using LatticeVector = std::vector<Integer>;

Integer pairing(const QMatrix& gram, const LatticeVector& v, const LatticeVector& w);

// v + (v . root) root; requires root^2 = -2.
LatticeVector weyl_reflect(const QMatrix& gram, const LatticeVector& v,
                           const LatticeVector& root);

// v . alpha >= 0 for every supplied simple root.
bool in_fundamental_chamber(const QMatrix& gram, const LatticeVector& v,
                            const std::vector<LatticeVector>& simple_roots);

// Inertia (positive, negative, zero) of a symmetric Gram matrix.
std::tuple<int, int, int> signature(const QMatrix& gram);

struct HyperbolicSplitting {
  LatticeVector e;
  LatticeVector e_prime;                       // e'^2 = 0, e . e' = 1
  std::vector<LatticeVector> complement_basis; // basis of {x : x.e = x.e' = 0}
  QMatrix complement_gram;
};

// Splits U = <e, e'> off an even unimodular lattice along a primitive isotropic e.
HyperbolicSplitting split_hyperbolic(const QMatrix& gram, const LatticeVector& e);

}  // namespace t237
