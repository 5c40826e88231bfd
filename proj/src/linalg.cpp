#include "mckay/linalg.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "mckay/error.hpp"

namespace mckay {

namespace {

std::string shape(const CycMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_same_conductor(const CycMatrix& a, const CycMatrix& b) {
  if (a.conductor() != b.conductor()) {
    throw ArithmeticError("matrix conductor mismatch: " + std::to_string(a.conductor()) + " vs " +
                          std::to_string(b.conductor()));
  }
}

struct Echelon {
  CycMatrix m;
  std::vector<std::size_t> pivot_cols;
  // Product of pivots before normalization, times the sign of the row swaps.
  CycNum pivot_product;
};

// Gauss-Jordan elimination. Each pivot row is scaled to a leading 1; when
// `reduced` is set, entries above pivots are cleared too (RREF).
Echelon eliminate(CycMatrix a, bool reduced) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  Echelon out{CycMatrix{}, {}, CycNum(a.conductor(), 1)};
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != row) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(p, k), a(row, k));
      out.pivot_product = -out.pivot_product;
    }
    out.pivot_product *= a(row, c);
    if (!a(row, c).is_one()) {
      const CycNum inv = cyc_inv(a(row, c));
      for (std::size_t k = c; k < cols; ++k)
        if (!a(row, k).is_zero()) a(row, k) *= inv;
    }
    const std::size_t first = reduced ? 0 : row + 1;
    for (std::size_t r = first; r < rows; ++r) {
      if (r == row || a(r, c).is_zero()) continue;
      const CycNum factor = a(r, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!a(row, k).is_zero()) a(r, k).sub_mul(factor, a(row, k));
    }
    out.pivot_cols.push_back(c);
    ++row;
  }
  out.m = std::move(a);
  return out;
}

CycMatrix stack_columns(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim != w.ambient_dim) {
    throw DimensionError("subspaces live in different ambient spaces (" +
                         std::to_string(u.ambient_dim) + " vs " + std::to_string(w.ambient_dim) +
                         ")");
  }
  if (u.conductor != w.conductor) {
    throw ArithmeticError("subspace conductor mismatch: " + std::to_string(u.conductor) +
                          " vs " + std::to_string(w.conductor));
  }
  CycMatrix m(u.ambient_dim, u.dim() + w.dim(), u.conductor);
  for (std::size_t j = 0; j < u.dim(); ++j)
    for (std::size_t i = 0; i < u.ambient_dim; ++i) m(i, j) = u.basis[j][i];
  for (std::size_t j = 0; j < w.dim(); ++j)
    for (std::size_t i = 0; i < w.ambient_dim; ++i) m(i, u.dim() + j) = w.basis[j][i];
  return m;
}

}  // namespace

CycMatrix::CycMatrix(std::size_t rows, std::size_t cols, unsigned conductor)
    : rows_(rows), cols_(cols), conductor_(conductor), entries_(rows * cols, CycNum(conductor)) {}

CycMatrix::CycMatrix(std::size_t rows, std::size_t cols, unsigned conductor,
                     std::vector<CycNum> entries)
    : rows_(rows), cols_(cols), conductor_(conductor), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionError("expected " + std::to_string(rows * cols) + " entries, got " +
                         std::to_string(entries_.size()));
  }
  for (const auto& e : entries_) {
    if (e.conductor() != conductor) {
      throw ArithmeticError("entry conductor " + std::to_string(e.conductor()) +
                            " differs from matrix conductor " + std::to_string(conductor));
    }
  }
}

CycMatrix CycMatrix::identity(std::size_t n, unsigned conductor) {
  CycMatrix m(n, n, conductor);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = CycNum(conductor, 1);
  return m;
}

CycMatrix CycMatrix::from_integers(unsigned conductor,
                                   const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  CycMatrix m(r, c, conductor);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged integer matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = CycNum(conductor, rows[i][j]);
  }
  return m;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix t(cols_, rows_, conductor_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

CycMatrix CycMatrix::embed(unsigned target) const {
  std::vector<CycNum> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(cyc_embed(e, target));
  CycMatrix m;
  m.rows_ = rows_;
  m.cols_ = cols_;
  m.conductor_ = target;
  m.entries_ = std::move(out);
  return m;
}

std::optional<CycMatrix> CycMatrix::restrict_to(unsigned d) const {
  std::vector<CycNum> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) {
    auto r = cyc_restrict(e, d);
    if (!r) return std::nullopt;
    out.push_back(std::move(*r));
  }
  return CycMatrix(rows_, cols_, d, std::move(out));
}

bool CycMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const CycNum& e = (*this)(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

bool CycMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

std::size_t CycMatrix::hash() const noexcept {
  std::size_t h = rows_ * 131 + cols_;
  for (const auto& e : entries_) h = h * 0x100000001b3ull ^ e.hash();
  return h;
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  require_same_conductor(a, b);
  if (a.cols() != b.rows()) {
    throw DimensionError("cannot multiply " + shape(a) + " by " + shape(b));
  }
  CycMatrix out(a.rows(), b.cols(), a.conductor());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const CycNum& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const CycNum& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j).add_mul(aik, bkj);
      }
    }
  }
  return out;
}

CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
  require_same_conductor(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("cannot add " + shape(a) + " and " + shape(b));
  }
  CycMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) {
  require_same_conductor(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("cannot subtract " + shape(b) + " from " + shape(a));
  }
  CycMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

CycMatrix operator*(const CycNum& s, const CycMatrix& a) {
  CycMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= s;
  return out;
}

CycMatrix mat_pow(const CycMatrix& g, unsigned k) {
  if (!g.is_square()) throw DimensionError("power of non-square matrix " + shape(g));
  CycMatrix result = CycMatrix::identity(g.rows(), g.conductor());
  CycMatrix base = g;
  while (k != 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return result;
}

CycNum trace(const CycMatrix& a) {
  if (!a.is_square()) throw DimensionError("trace of non-square matrix " + shape(a));
  CycNum t(a.conductor());
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

CycNum determinant(const CycMatrix& a) {
  if (!a.is_square()) throw DimensionError("determinant of non-square matrix " + shape(a));
  Echelon e = eliminate(a, false);
  if (e.pivot_cols.size() < a.rows()) return CycNum(a.conductor());
  return e.pivot_product;
}

CycMatrix Subspace::as_columns() const {
  CycMatrix m(ambient_dim, basis.size(), conductor);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < ambient_dim; ++i) m(i, j) = basis[j][i];
  return m;
}

// Rank only: rows below a non-rational pivot are cleared by cross-multiplication,
// which avoids field inversions in large cyclotomic fields.
std::size_t mat_rank(const CycMatrix& a_in) {
  CycMatrix a = a_in;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != row)
      for (std::size_t k = c; k < cols; ++k) std::swap(a(p, k), a(row, k));
    const CycNum pivot = a(row, c);
    const bool rational = pivot.is_rational();
    if (rational && !pivot.is_one()) {
      const Rational inv = 1 / pivot.constant();
      for (std::size_t k = c; k < cols; ++k)
        if (!a(row, k).is_zero()) a(row, k) *= inv;
    }
    for (std::size_t r = row + 1; r < rows; ++r) {
      if (a(r, c).is_zero()) continue;
      const CycNum factor = a(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (!rational) a(r, k) *= pivot;
        if (!a(row, k).is_zero()) a(r, k).sub_mul(factor, a(row, k));
      }
    }
    ++row;
  }
  return row;
}

Subspace kernel_basis(const CycMatrix& a) {
  Echelon e = eliminate(a, true);
  Subspace out{a.cols(), a.conductor(), {}};
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<CycNum> v(a.cols(), CycNum(a.conductor()));
    v[f] = CycNum(a.conductor(), 1);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.m(i, f);
    out.basis.push_back(std::move(v));
  }
  return out;
}

Subspace fixed_space(const CycMatrix& g) {
  if (!g.is_square()) throw DimensionError("fixed space of non-square matrix " + shape(g));
  return kernel_basis(g - CycMatrix::identity(g.rows(), g.conductor()));
}

Subspace whole_space(std::size_t n, unsigned conductor) {
  Subspace s{n, conductor, {}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<CycNum> v(n, CycNum(conductor));
    v[i] = CycNum(conductor, 1);
    s.basis.push_back(std::move(v));
  }
  return s;
}

std::size_t subspace_sum_dim(const Subspace& u, const Subspace& w) {
  return mat_rank(stack_columns(u, w));
}

std::size_t subspace_intersection_dim(const Subspace& u, const Subspace& w) {
  return u.dim() + w.dim() - subspace_sum_dim(u, w);
}

Subspace subspace_intersection(const Subspace& u, const Subspace& w) {
  // Kernel vectors (a, b) of [U | W] give U a = -W b in both subspaces; the
  // map (a, b) -> U a is injective on that kernel since U and W have
  // independent columns.
  const CycMatrix stacked = stack_columns(u, w);
  const Subspace relations = kernel_basis(stacked);
  Subspace out{u.ambient_dim, u.conductor, {}};
  for (const auto& rel : relations.basis) {
    std::vector<CycNum> v(u.ambient_dim, CycNum(u.conductor));
    for (std::size_t j = 0; j < u.dim(); ++j) {
      if (rel[j].is_zero()) continue;
      for (std::size_t i = 0; i < u.ambient_dim; ++i) v[i].add_mul(rel[j], u.basis[j][i]);
    }
    out.basis.push_back(std::move(v));
  }
  return out;
}

bool subspace_contains(const Subspace& outer, const Subspace& inner) {
  return subspace_sum_dim(outer, inner) == outer.dim();
}

bool same_subspace(const Subspace& u, const Subspace& w) {
  return u.dim() == w.dim() && subspace_contains(u, w);
}

bool transversal(const Subspace& u, const Subspace& w) {
  if (u.dim() + w.dim() < u.ambient_dim) {
    if (u.ambient_dim != w.ambient_dim) stack_columns(u, w);  // reports the mismatch
    return false;
  }
  return subspace_sum_dim(u, w) == u.ambient_dim;
}

void validate_symplectic_form(const CycMatrix& omega) {
  if (!omega.is_square()) {
    throw PreconditionError("symplectic form must be square, got " + shape(omega));
  }
  for (std::size_t i = 0; i < omega.rows(); ++i) {
    for (std::size_t j = i; j < omega.cols(); ++j) {
      if (!(omega(i, j) + omega(j, i)).is_zero()) {
        throw PreconditionError("symplectic form is not skew-symmetric at (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
      }
    }
  }
  if (mat_rank(omega) != omega.rows()) throw PreconditionError("symplectic form is degenerate");
}

bool is_symplectic(const CycMatrix& g, const CycMatrix& omega) {
  validate_symplectic_form(omega);
  if (!g.is_square() || g.rows() != omega.rows()) {
    throw DimensionError("matrix " + shape(g) + " does not act on the symplectic space of size " +
                         std::to_string(omega.rows()));
  }
  const unsigned m = std::lcm(g.conductor(), omega.conductor());
  const CycMatrix gm = g.embed(m);
  const CycMatrix om = omega.embed(m);
  return gm.transpose() * om * gm == om;
}

std::vector<std::size_t> eigen_multiplicities(const CycMatrix& g, unsigned r) {
  if (!g.is_square()) throw DimensionError("eigenvalues of non-square matrix " + shape(g));
  if (r == 0) throw PreconditionError("element order must be positive");
  if (!mat_pow(g, r).is_identity()) {
    throw PreconditionError("g^" + std::to_string(r) + " is not the identity");
  }
  const unsigned m = std::lcm(g.conductor(), r);
  const CycMatrix gm = g.embed(m);
  const std::size_t n = g.rows();
  std::vector<std::size_t> mult(r);
  std::size_t total = 0;
  for (unsigned j = 0; j < r; ++j) {
    CycMatrix shifted = gm;
    const CycNum lambda = CycNum::zeta(m, static_cast<long>(j * (m / r)));
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
    mult[j] = n - mat_rank(shifted);
    total += mult[j];
  }
  if (total != n) {
    throw ConsistencyError("eigenvalue multiplicities sum to " + std::to_string(total) +
                           ", expected " + std::to_string(n));
  }
  return mult;
}

}  // namespace mckay
