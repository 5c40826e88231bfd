#include "mckay/families.hpp"

#include <functional>

#include "mckay/error.hpp"

namespace mckay {

namespace {

const char* kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::cyclic_sl2: return "cyclic";
    case FamilyKind::binary_dihedral: return "binary_dihedral";
    case FamilyKind::symmetric: return "symmetric";
    case FamilyKind::wreath: return "wreath";
  }
  return "?";
}

// Permutation matrix sending basis vector e_i to e_perm[i].
CycMatrix permutation_matrix(const std::vector<std::size_t>& perm) {
  CycMatrix p(perm.size(), perm.size(), 1);
  for (std::size_t i = 0; i < perm.size(); ++i) p(perm[i], i) = CycNum(1, 1);
  return p;
}

std::vector<std::size_t> identity_perm(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  return p;
}

}  // namespace

std::string FamilySpec::name() const {
  switch (kind) {
    case FamilyKind::cyclic_sl2:
    case FamilyKind::binary_dihedral:
      return std::string(kind_name(kind)) + "(m=" + std::to_string(m) + ")";
    case FamilyKind::symmetric: return "symmetric(n=" + std::to_string(n) + ")";
    case FamilyKind::wreath:
      return "wreath(" + std::string(kind_name(inner)) + "(m=" + std::to_string(m) +
             "), n=" + std::to_string(n) + ")";
  }
  return "?";
}

CycMatrix standard_symplectic_blocks(std::size_t k, unsigned conductor) {
  CycMatrix omega(2 * k, 2 * k, conductor);
  for (std::size_t b = 0; b < k; ++b) {
    omega(2 * b, 2 * b + 1) = CycNum(conductor, 1);
    omega(2 * b + 1, 2 * b) = CycNum(conductor, -1);
  }
  return omega;
}

std::vector<CycMatrix> inner_generators(FamilyKind kind, unsigned m) {
  if (kind == FamilyKind::cyclic_sl2) {
    if (m < 1) throw PreconditionError("cyclic group needs m >= 1");
    CycMatrix a(2, 2, m);
    a(0, 0) = CycNum::zeta(m, 1);
    a(1, 1) = CycNum::zeta(m, -1);
    return {a};
  }
  if (kind == FamilyKind::binary_dihedral) {
    if (m < 2) throw PreconditionError("binary dihedral group needs m >= 2");
    const unsigned c = 2 * m;
    CycMatrix a(2, 2, c);
    a(0, 0) = CycNum::zeta(c, 1);
    a(1, 1) = CycNum::zeta(c, -1);
    CycMatrix b(2, 2, c);
    b(0, 1) = CycNum(c, 1);
    b(1, 0) = CycNum(c, -1);
    return {a, b};
  }
  throw PreconditionError("wreath products take a cyclic or binary dihedral inner group");
}

FiniteMatrixGroup cyclic_sl2(unsigned m, const GroupCaps& caps) {
  const auto gens = inner_generators(FamilyKind::cyclic_sl2, m);
  return close_generators(gens, standard_symplectic_blocks(1), caps);
}

FiniteMatrixGroup binary_dihedral(unsigned m, const GroupCaps& caps) {
  const auto gens = inner_generators(FamilyKind::binary_dihedral, m);
  return close_generators(gens, standard_symplectic_blocks(1), caps);
}

FiniteMatrixGroup symmetric_group_action(unsigned n, const GroupCaps& caps, bool allow_large) {
  if (n == 0) throw PreconditionError("symmetric group needs n >= 1");
  if (n > 6 && !allow_large) {
    throw PreconditionError("symmetric group of degree " + std::to_string(n) +
                            " is above the verification budget (n <= 6)");
  }
  std::vector<CycMatrix> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    auto perm = identity_perm(2 * n);
    std::swap(perm[i], perm[i + 1]);
    std::swap(perm[n + i], perm[n + i + 1]);
    gens.push_back(permutation_matrix(perm));
  }
  CycMatrix omega(2 * n, 2 * n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    omega(i, n + i) = CycNum(1, 1);
    omega(n + i, i) = CycNum(1, -1);
  }
  return close_generators(gens, omega, caps);
}

FiniteMatrixGroup wreath_product(FamilyKind inner, unsigned m, unsigned n, const GroupCaps& caps) {
  if (n == 0) throw PreconditionError("wreath product needs n >= 1");
  const auto inner_gens = inner_generators(inner, m);
  const std::size_t inner_order = inner == FamilyKind::cyclic_sl2 ? m : 4 * m;
  // |Gamma|^n n!, refused up front rather than discovered by closure.
  double predicted = 1;
  for (unsigned i = 1; i <= n; ++i) predicted *= static_cast<double>(inner_order) * i;
  if (predicted > static_cast<double>(caps.max_group_order)) {
    throw CapExceeded("wreath product of order " + std::to_string(static_cast<long long>(predicted)) +
                          " exceeds the closure cap " + std::to_string(caps.max_group_order),
                      0);
  }
  const unsigned c = inner_gens.front().conductor();
  const std::size_t dim = 2 * n;
  std::vector<CycMatrix> gens;
  for (const auto& g : inner_gens) {
    CycMatrix block = CycMatrix::identity(dim, c);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) block(i, j) = g(i, j);
    gens.push_back(std::move(block));
  }
  for (std::size_t b = 0; b + 1 < n; ++b) {
    auto perm = identity_perm(dim);
    std::swap(perm[2 * b], perm[2 * b + 2]);
    std::swap(perm[2 * b + 1], perm[2 * b + 3]);
    gens.push_back(permutation_matrix(perm).embed(c));
  }
  return close_generators(gens, standard_symplectic_blocks(n, c), caps);
}

FiniteMatrixGroup build_family(const FamilySpec& spec, const GroupCaps& caps, bool allow_large) {
  switch (spec.kind) {
    case FamilyKind::cyclic_sl2: return cyclic_sl2(spec.m, caps);
    case FamilyKind::binary_dihedral: return binary_dihedral(spec.m, caps);
    case FamilyKind::symmetric: return symmetric_group_action(spec.n, caps, allow_large);
    case FamilyKind::wreath: return wreath_product(spec.inner, spec.m, spec.n, caps);
  }
  throw PreconditionError("unknown family");
}

DegreeTable hilbert_betti(unsigned n) {
  if (n == 0) throw PreconditionError("Hilbert scheme of 0 points is not in the family");
  DegreeTable dims;
  // Enumerate partitions as non-increasing part sequences.
  std::function<void(unsigned, unsigned, unsigned)> walk = [&](unsigned left, unsigned max_part,
                                                              unsigned parts) {
    if (left == 0) {
      ++dims[2 * (n - parts)];
      return;
    }
    for (unsigned p = std::min(left, max_part); p >= 1; --p) walk(left - p, p, parts + 1);
  };
  walk(n, n, 0);
  return dims;
}

}  // namespace mckay
