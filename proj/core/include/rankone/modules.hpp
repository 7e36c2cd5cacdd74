#pragma once

// Indecomposable H-modules as explicit matrices.
//
// M(k,i) = V_i + x V_i + ... + x^{k-1} V_i with blocks ordered bottom to
// top, so z is a strict lower block-shift killing the top block, and a
// group element s acts on block l by chi^{-l}(s) rep_i(s).  For the
// non-nilpotent type, P_j additionally wraps the top block back to block 0
// scaled by lambda_j - 1.

#include "rankone/hopf.hpp"

#include <string>
#include <vector>

namespace rankone {

// The permutation tau with chi_{tau(i)} = chi^{-1} chi_i, derived from the
// character table and cross-validated against z e_s = e_{tau(s)} z.
struct Tau {
  std::vector<std::size_t> perm;
  std::vector<std::size_t> inv;
  std::size_t order = 1;

  std::size_t apply(std::size_t i, long power = 1) const;
};

Tau compute_tau(const DatumPtr& datum);

struct IndexPartition {
  DatumKind kind;
  // Nilpotent type: all indices.
  std::vector<std::size_t> omega0;
  // Non-nilpotent type: lambda_i = 1 versus lambda_i != 1, and the tau
  // orbits of the latter (each of size n).
  std::vector<std::size_t> lambda0;
  std::vector<std::size_t> lambda1;
  std::vector<std::vector<std::size_t>> lambda1_orbits;
};

IndexPartition partition_indices(const DatumPtr& datum);

struct ModuleRep {
  DatumPtr datum;
  std::string label;
  std::size_t dim = 0;
  std::vector<Matrix> act_group;  // one matrix per group element
  Matrix act_z;

  // rho(z^l h) = act_z^l act_group[h], extended linearly.
  Matrix act_basis(unsigned l, int h) const;
  Matrix act_element(const HopfElement& a) const;
};

ModuleRep build_M(const DatumPtr& datum, unsigned k, std::size_t i);
ModuleRep build_P(const DatumPtr& datum, std::size_t j);

// H acting on itself by left multiplication.
ModuleRep regular_module(const DatumPtr& datum);

// Checks the defining relations in the representation: act_group is a
// homomorphism, act_z act_s = chi(s) act_s act_z, act_z^n = alpha(rho(g)^n - I).
CheckReport module_verify(const ModuleRep& m);

}  // namespace rankone
