#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "mckay/linalg.hpp"

namespace mckay {

struct GroupCaps {
  std::size_t max_group_order = 20000;
  std::size_t max_element_order = 10000;
};

/// Groups up to this order carry a full Cayley table; larger ones multiply
/// matrices on demand.
inline constexpr std::size_t kCayleyTableLimit = 5040;

/// A finite matrix group, enumerated element by element.
///
/// Elements are stored over the smallest cyclotomic field containing the
/// entries of the generators and of omega (the *base* conductor); `element()`
/// hands them out embedded at the ambient conductor, which is the lcm of the
/// group exponent and the base conductor. Index 0 is always the identity.
class FiniteMatrixGroup {
 public:
  std::size_t dim() const noexcept { return dim_; }
  std::size_t order() const noexcept { return base_elements_.size(); }
  unsigned conductor() const noexcept { return conductor_; }
  unsigned base_conductor() const noexcept { return base_conductor_; }
  unsigned exponent() const noexcept { return exponent_; }

  /// Element i at the ambient conductor.
  CycMatrix element(std::size_t i) const { return base_elements_.at(i).embed(conductor_); }
  /// Element i at the base conductor.
  const CycMatrix& base_element(std::size_t i) const { return base_elements_.at(i); }

  const std::optional<CycMatrix>& base_omega() const noexcept { return omega_; }
  std::optional<CycMatrix> omega() const;

  std::span<const std::size_t> generator_indices() const noexcept { return generator_indices_; }
  std::span<const unsigned> orders() const noexcept { return orders_; }
  unsigned element_order(std::size_t i) const { return orders_.at(i); }

  bool in_SL() const noexcept { return in_sl_; }
  bool in_Sp() const noexcept { return in_sp_; }

  std::size_t product(std::size_t i, std::size_t j) const;
  std::size_t inverse(std::size_t i) const { return inverses_.at(i); }
  bool has_cayley_table() const noexcept { return !cayley_.empty(); }

  /// Index of a matrix (any conductor compatible with the base field), if it
  /// belongs to the group.
  std::optional<std::size_t> index_of(const CycMatrix& g) const;

 private:
  friend FiniteMatrixGroup close_generators(std::span<const CycMatrix> gens,
                                            const std::optional<CycMatrix>& omega,
                                            const GroupCaps& caps);

  std::size_t dim_ = 0;
  unsigned conductor_ = 1;
  unsigned base_conductor_ = 1;
  unsigned exponent_ = 1;
  std::optional<CycMatrix> omega_;
  std::vector<CycMatrix> base_elements_;
  std::unordered_map<CycMatrix, std::uint32_t, CycMatrixHash> lookup_;
  std::vector<std::size_t> generator_indices_;
  std::vector<unsigned> orders_;
  std::vector<std::size_t> inverses_;
  std::vector<std::uint32_t> cayley_;  // row-major order() x order()
  bool in_sl_ = false;
  bool in_sp_ = false;
};

/// Breadth-first closure of `gens` under right multiplication. `omega` is
/// validated when given; without it the group is never flagged symplectic.
/// Throws CapExceeded past `caps.max_group_order` elements.
FiniteMatrixGroup close_generators(std::span<const CycMatrix> gens,
                                   const std::optional<CycMatrix>& omega,
                                   const GroupCaps& caps = {});

/// Least r >= 1 with g^r = I; throws CapExceeded past `cap`.
unsigned element_order(const CycMatrix& g, std::size_t cap);

struct ConjugacyClass {
  std::size_t representative = 0;
  std::vector<std::size_t> members;  // sorted
  std::optional<unsigned> age;
  std::optional<unsigned> codim;

  std::size_t size() const noexcept { return members.size(); }
};

/// Orbits under conjugation, ordered by smallest member.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteMatrixGroup& g);

/// class_of[element] for a class list.
std::vector<std::size_t> class_lookup(std::span<const ConjugacyClass> classes,
                                      std::size_t group_order);

/// Structure constants of Z(C[G]) on the class-sum basis:
/// C_i * C_j = sum_k N_ij^k C_k, where N_ij^k counts ordered pairs (x, y)
/// in C_i x C_j with x y = z for the fixed representative z of C_k. In this
/// convention the identity class acts as the unit: N_{e,j}^k = [j == k].
std::map<std::size_t, std::size_t> class_sum_product(const FiniteMatrixGroup& g,
                                                     std::span<const ConjugacyClass> classes,
                                                     std::span<const std::size_t> class_of,
                                                     std::size_t i, std::size_t j);

struct Membership {
  bool in_SL = false;
  bool in_Sp = false;
};

/// Exact per-element determinant and symplectic-form checks.
Membership check_membership(const FiniteMatrixGroup& g);

}  // namespace mckay
