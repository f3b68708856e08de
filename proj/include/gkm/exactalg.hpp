#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkm {

using Int = mpz_class;
using IntVector = std::vector<Int>;

class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class NotPrimeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);
void require_prime(std::uint64_t p);

/// Dense integer matrix, row-major, exact entries.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::size_t cols, const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Int> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Int> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  IntVector row_vector(std::size_t i) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVector operator*(std::span<const Int> v) const;
  bool operator==(const IntMatrix& rhs) const = default;

  bool is_zero() const;
  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// [a | b], both with the same row count.
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);

Int determinant(const IntMatrix& m);

struct HermiteResult {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
};

/// Row Hermite normal form: u unimodular with u*m == h. Nonzero rows come
/// first, pivots are positive, entries above a pivot lie in [0, pivot).
HermiteResult hnf(const IntMatrix& m);

struct SmithResult {
  IntMatrix d;
  IntMatrix left;
  IntMatrix right;
};

/// left * m * right == d, diagonal with d_1 | d_2 | ..., entries >= 0.
SmithResult snf(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Sublattice of Z^ambient_dim in canonical row-HNF form.
class LatticeBasis {
public:
  LatticeBasis() = default;
  explicit LatticeBasis(std::size_t ambient_dim);
  /// Canonicalises an arbitrary generating set (rows may be dependent).
  static LatticeBasis from_generators(std::size_t ambient_dim, const std::vector<IntVector>& gens);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& matrix() const { return basis_; }
  IntVector vector(std::size_t i) const { return basis_.row_vector(i); }

  /// Exact membership test, v in the Z-span of the basis.
  bool contains(std::span<const Int> v) const;

  bool operator==(const LatticeBasis& rhs) const = default;

private:
  std::size_t ambient_ = 0;
  IntMatrix basis_;
};

/// Saturated integer kernel {v : m v = 0}.
LatticeBasis kernel(const IntMatrix& m);

/// {v in Z^a : m v in image(d)}. Not saturated in general.
LatticeBasis kernel_into_cokernel(const IntMatrix& m, const IntMatrix& d);

/// Some v with m v == target modulo image(d), or nullopt.
std::optional<IntVector> solve_with_image(const IntMatrix& m, const IntMatrix& d,
                                          std::span<const Int> target);

// ---- prime field ------------------------------------------------------

using ModVector = std::vector<std::uint64_t>;

std::uint64_t mod_reduce(const Int& a, std::uint64_t p);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

/// Basis of the kernel of m reduced mod p.
std::vector<ModVector> modp_kernel(const IntMatrix& m, std::uint64_t p);

/// Reduced row echelon basis of the span of the given vectors over F_p.
std::vector<ModVector> modp_span_basis(std::vector<ModVector> vectors, std::uint64_t p);

std::size_t modp_rank(const IntMatrix& m, std::uint64_t p);

}  // namespace gkm
