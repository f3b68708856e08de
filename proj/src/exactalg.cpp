#include "gkm/exactalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace gkm {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw NotPrimeError("not a prime: " + std::to_string(p));
}

// ---- IntMatrix ----------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, const std::vector<IntVector>& rows) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("row length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

IntVector IntMatrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return {r.begin(), r.end()};
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const Int& s = (*this)(src, j);
    if (s != 0) (*this)(dst, j) += factor * s;
  }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Int& s = (*this)(i, src);
    if (s != 0) (*this)(i, dst) += factor * s;
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (auto& v : row(i)) v = -v;
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("matrix product dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Int& b = rhs(k, j);
        if (b != 0) out(i, j) += a * b;
      }
    }
  }
  return out;
}

IntVector IntMatrix::operator*(std::span<const Int> v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector dimension mismatch");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& v) { return v == 0; });
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack: row count mismatch");
  IntMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

// Fraction-free Bareiss elimination.
Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return 0;
      a.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---- Hermite normal form -------------------------------------------------

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int trunc_div(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteResult hnf(const IntMatrix& m) {
  HermiteResult out{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    bool have_pivot = false;
    for (;;) {
      // smallest nonzero |entry| in column c at or below row r
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        if (best == h.rows() || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == h.rows()) break;
      have_pivot = true;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        Int q = trunc_div(h(i, c), h(r, c));
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!have_pivot) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (h(i, c) == 0) continue;
      Int q = floor_div(h(i, c), h(r, c));
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const IntMatrix& m) { return hnf(m).rank; }

// ---- Smith normal form ---------------------------------------------------

SmithResult snf(const IntMatrix& m) {
  SmithResult out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& d = out.d;
  IntMatrix& left = out.left;
  IntMatrix& right = out.right;
  const std::size_t n = std::min(d.rows(), d.cols());

  auto move_to = [&](std::size_t t, std::size_t i, std::size_t j) {
    d.swap_rows(t, i);
    left.swap_rows(t, i);
    d.swap_cols(t, j);
    right.swap_cols(t, j);
  };

  for (std::size_t t = 0; t < n; ++t) {
    std::size_t bi = d.rows(), bj = d.cols();
    for (std::size_t i = t; i < d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j)
        if (d(i, j) != 0 && (bi == d.rows() || abs(d(i, j)) < abs(d(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == d.rows()) break;
    move_to(t, bi, bj);

    for (;;) {
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Int q = trunc_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        left.add_row_multiple(i, t, -q);
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Int q = trunc_div(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -q);
        right.add_col_multiple(j, t, -q);
      }
      // a remainder smaller than the pivot becomes the next pivot
      std::size_t ri = 0, rj = 0;
      bool remainder = false;
      for (std::size_t i = t + 1; i < d.rows() && !remainder; ++i)
        if (d(i, t) != 0) { ri = i; rj = t; remainder = true; }
      for (std::size_t j = t + 1; j < d.cols() && !remainder; ++j)
        if (d(t, j) != 0) { ri = t; rj = j; remainder = true; }
      if (remainder) {
        move_to(t, ri, rj);
        continue;
      }
      bool fixed = false;
      for (std::size_t i = t + 1; i < d.rows() && !fixed; ++i)
        for (std::size_t j = t + 1; j < d.cols() && !fixed; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            left.add_row_multiple(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      left.negate_row(t);
    }
  }
  return out;
}

// ---- lattices ------------------------------------------------------------

LatticeBasis::LatticeBasis(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

LatticeBasis LatticeBasis::from_generators(std::size_t ambient_dim, const std::vector<IntVector>& gens) {
  LatticeBasis out(ambient_dim);
  if (gens.empty()) return out;
  auto h = hnf(IntMatrix::from_rows(ambient_dim, gens));
  out.basis_ = IntMatrix(h.rank, ambient_dim);
  for (std::size_t i = 0; i < h.rank; ++i)
    std::copy(h.h.row(i).begin(), h.h.row(i).end(), out.basis_.row(i).begin());
  return out;
}

bool LatticeBasis::contains(std::span<const Int> v) const {
  if (v.size() != ambient_) throw DimensionError("lattice membership: wrong length");
  IntVector rest(v.begin(), v.end());
  std::size_t col = 0;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    while (basis_(i, col) == 0) {
      if (rest[col] != 0) return false;
      ++col;
    }
    const Int& pivot = basis_(i, col);
    if (!mpz_divisible_p(rest[col].get_mpz_t(), pivot.get_mpz_t())) return false;
    Int q = rest[col] / pivot;
    if (q != 0)
      for (std::size_t j = col; j < ambient_; ++j) rest[j] -= q * basis_(i, j);
    ++col;
  }
  return std::all_of(rest.begin(), rest.end(), [](const Int& x) { return x == 0; });
}

LatticeBasis kernel(const IntMatrix& m) {
  auto h = hnf(m.transpose());
  std::vector<IntVector> gens;
  for (std::size_t i = h.rank; i < h.u.rows(); ++i) gens.push_back(h.u.row_vector(i));
  return LatticeBasis::from_generators(m.cols(), gens);
}

LatticeBasis kernel_into_cokernel(const IntMatrix& m, const IntMatrix& d) {
  if (m.rows() != d.rows()) throw DimensionError("kernel_into_cokernel: row count mismatch");
  IntMatrix neg = d;
  for (std::size_t j = 0; j < neg.cols(); ++j) neg.negate_col(j);
  auto k = kernel(hstack(m, neg));
  std::vector<IntVector> proj;
  proj.reserve(k.rank());
  for (std::size_t i = 0; i < k.rank(); ++i) {
    auto r = k.matrix().row(i);
    proj.emplace_back(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(m.cols()));
  }
  return LatticeBasis::from_generators(m.cols(), proj);
}

std::optional<IntVector> solve_with_image(const IntMatrix& m, const IntMatrix& d,
                                          std::span<const Int> target) {
  if (m.rows() != d.rows()) throw DimensionError("solve_with_image: row count mismatch");
  if (target.size() != m.rows()) throw DimensionError("solve_with_image: target length mismatch");
  IntMatrix neg = d;
  for (std::size_t j = 0; j < neg.cols(); ++j) neg.negate_col(j);
  const IntMatrix a = hstack(m, neg);
  // u a^T = h  =>  a u^T = h^T; solve h^T y = target by forward substitution.
  auto h = hnf(a.transpose());
  IntVector y(a.cols());
  std::size_t pivot_col = 0;
  for (std::size_t i = 0; i < h.rank; ++i) {
    while (h.h(i, pivot_col) == 0) ++pivot_col;
    Int rhs = target[pivot_col];
    for (std::size_t k = 0; k < i; ++k) rhs -= h.h(k, pivot_col) * y[k];
    if (!mpz_divisible_p(rhs.get_mpz_t(), h.h(i, pivot_col).get_mpz_t())) return std::nullopt;
    y[i] = rhs / h.h(i, pivot_col);
    ++pivot_col;
  }
  IntVector x = h.u.transpose() * std::span<const Int>(y);
  if (a * std::span<const Int>(x) != IntVector(target.begin(), target.end())) return std::nullopt;
  x.resize(m.cols());
  return x;
}

// ---- prime field ---------------------------------------------------------

std::uint64_t mod_reduce(const Int& a, std::uint64_t p) {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), p);
  return r.get_ui();
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

// In-place RREF; returns pivot columns.
std::vector<std::size_t> rref(std::vector<ModVector>& rows, std::size_t cols, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t s = r;
    while (s < rows.size() && rows[s][c] == 0) ++s;
    if (s == rows.size()) continue;
    std::swap(rows[r], rows[s]);
    const std::uint64_t inv = mod_inverse(rows[r][c], p);
    for (auto& v : rows[r]) v = mulmod(v, inv, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint64_t f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        rows[i][j] = (rows[i][j] + p - mulmod(f, rows[r][j], p)) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<ModVector> reduce_matrix(const IntMatrix& m, std::uint64_t p) {
  std::vector<ModVector> rows(m.rows(), ModVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = mod_reduce(m(i, j), p);
  return rows;
}

}  // namespace

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  Int r;
  Int aa(static_cast<unsigned long>(a % p));
  Int pp(static_cast<unsigned long>(p));
  if (mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), pp.get_mpz_t()) == 0)
    throw std::domain_error("mod_inverse: not invertible");
  return r.get_ui();
}

std::vector<ModVector> modp_kernel(const IntMatrix& m, std::uint64_t p) {
  require_prime(p);
  auto rows = reduce_matrix(m, p);
  const auto pivots = rref(rows, m.cols(), p);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<ModVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ModVector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - rows[i][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<ModVector> modp_span_basis(std::vector<ModVector> vectors, std::uint64_t p) {
  require_prime(p);
  if (vectors.empty()) return vectors;
  const std::size_t cols = vectors.front().size();
  for (auto& v : vectors) {
    if (v.size() != cols) throw DimensionError("modp_span_basis: ragged input");
    for (auto& x : v) x %= p;
  }
  rref(vectors, cols, p);
  return vectors;
}

std::size_t modp_rank(const IntMatrix& m, std::uint64_t p) {
  require_prime(p);
  auto rows = reduce_matrix(m, p);
  return rref(rows, m.cols(), p).size();
}

}  // namespace gkm
