#pragma once

#include <string>

#include "mckay/group.hpp"
#include "mckay/orbifold.hpp"

namespace mckay {

enum class FamilyKind { cyclic_sl2, binary_dihedral, symmetric, wreath };

/// A named built-in group. `m` parametrises the cyclic and binary dihedral
/// groups (also as the wreath inner factor), `n` the symmetric and wreath
/// degree.
struct FamilySpec {
  FamilyKind kind = FamilyKind::cyclic_sl2;
  unsigned m = 1;
  unsigned n = 1;
  FamilyKind inner = FamilyKind::cyclic_sl2;  // wreath only

  std::string name() const;
};

/// Standard symplectic form on C^2k: k copies of [[0, 1], [-1, 0]] down the diagonal.
CycMatrix standard_symplectic_blocks(std::size_t k, unsigned conductor = 1);

/// Cyclic group generated by diag(zeta_m, zeta_m^-1) on C^2.
FiniteMatrixGroup cyclic_sl2(unsigned m, const GroupCaps& caps = {});

/// Binary dihedral group of order 4m, generated by diag(zeta_2m, zeta_2m^-1)
/// and [[0, 1], [-1, 0]].
FiniteMatrixGroup binary_dihedral(unsigned m, const GroupCaps& caps = {});

/// Inner generators of cyclic_sl2 / binary_dihedral, for wreath products.
std::vector<CycMatrix> inner_generators(FamilyKind kind, unsigned m);

/// S_n permuting C^n + C^n diagonally (doubled permutation matrices), with
/// omega pairing the two summands. Generated by adjacent transpositions.
/// Degrees above 6 are refused unless `allow_large` is set.
FiniteMatrixGroup symmetric_group_action(unsigned n, const GroupCaps& caps = {},
                                         bool allow_large = false);

/// Gamma^n semidirect S_n on (C^2)^n, Gamma = cyclic_sl2(m) or
/// binary_dihedral(m).
FiniteMatrixGroup wreath_product(FamilyKind inner, unsigned m, unsigned n,
                                 const GroupCaps& caps = {});

FiniteMatrixGroup build_family(const FamilySpec& spec, const GroupCaps& caps = {},
                               bool allow_large = false);

/// Betti numbers of Hilb^n(C^2): dims[2k] = #partitions of n into n - k parts.
DegreeTable hilbert_betti(unsigned n);

}  // namespace mckay
