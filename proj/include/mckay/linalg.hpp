#pragma once

#include <cstddef>
#include <vector>

#include "mckay/cyclotomic.hpp"

namespace mckay {

/// Dense row-major matrix over Q(zeta_m). All entries share the matrix
/// conductor.
class CycMatrix {
 public:
  CycMatrix() = default;
  /// Zero matrix.
  CycMatrix(std::size_t rows, std::size_t cols, unsigned conductor);
  CycMatrix(std::size_t rows, std::size_t cols, unsigned conductor, std::vector<CycNum> entries);

  static CycMatrix identity(std::size_t n, unsigned conductor);
  /// Rational matrix from integer rows.
  static CycMatrix from_integers(unsigned conductor,
                                 const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  unsigned conductor() const noexcept { return conductor_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const CycNum& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  CycNum& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const std::vector<CycNum>& entries() const noexcept { return entries_; }

  CycMatrix transpose() const;
  CycMatrix embed(unsigned target) const;
  /// Entrywise cyc_restrict; nullopt if some entry leaves the subfield.
  std::optional<CycMatrix> restrict_to(unsigned d) const;

  bool is_identity() const;
  bool is_zero() const;
  std::size_t hash() const noexcept;

  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator-(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator*(const CycNum& s, const CycMatrix& a);
  friend bool operator==(const CycMatrix& a, const CycMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  unsigned conductor_ = 1;
  std::vector<CycNum> entries_;
};

struct CycMatrixHash {
  std::size_t operator()(const CycMatrix& a) const noexcept { return a.hash(); }
};

CycMatrix mat_pow(const CycMatrix& g, unsigned k);
CycNum trace(const CycMatrix& a);
CycNum determinant(const CycMatrix& a);

/// A subspace of Q(zeta_m)^n given by linearly independent basis vectors.
struct Subspace {
  std::size_t ambient_dim = 0;
  unsigned conductor = 1;
  std::vector<std::vector<CycNum>> basis;

  std::size_t dim() const noexcept { return basis.size(); }
  std::size_t codim() const noexcept { return ambient_dim - basis.size(); }
  /// Basis vectors as the columns of an ambient_dim x dim matrix.
  CycMatrix as_columns() const;
};

/// Rank by Gaussian elimination, pivoting on the first nonzero entry of each column.
std::size_t mat_rank(const CycMatrix& a);

/// Right kernel. One basis vector per free column of the reduced row echelon
/// form, with a 1 in that column.
Subspace kernel_basis(const CycMatrix& a);

/// V^g = ker(g - I).
Subspace fixed_space(const CycMatrix& g);

/// Full space Q(zeta_m)^n.
Subspace whole_space(std::size_t n, unsigned conductor);

std::size_t subspace_sum_dim(const Subspace& u, const Subspace& w);
std::size_t subspace_intersection_dim(const Subspace& u, const Subspace& w);
Subspace subspace_intersection(const Subspace& u, const Subspace& w);
/// inner is contained in outer.
bool subspace_contains(const Subspace& outer, const Subspace& inner);
bool same_subspace(const Subspace& u, const Subspace& w);
/// u + w is the whole ambient space.
bool transversal(const Subspace& u, const Subspace& w);

/// Throws PreconditionError unless omega is square, skew-symmetric and of full rank.
void validate_symplectic_form(const CycMatrix& omega);

/// g^T omega g == omega. Validates omega first.
bool is_symplectic(const CycMatrix& g, const CycMatrix& omega);

/// m_j = dim ker(g - zeta_r^j I) for j = 0..r-1, computed in
/// Q(zeta_lcm(conductor, r)). Throws PreconditionError unless g^r = I.
std::vector<std::size_t> eigen_multiplicities(const CycMatrix& g, unsigned r);

}  // namespace mckay
