#include "gkm/exactalg.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace gkm;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> pick(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = pick(rng);
  return m;
}

testing::QMatrix to_q(const IntMatrix& m) {
  testing::QMatrix q(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q[i][j] = mpq_class(m(i, j));
  return q;
}

bool is_row_echelon(const IntMatrix& h, std::size_t rank) {
  std::size_t last_pivot = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t j = 0;
    while (j < h.cols() && h(i, j) == 0) ++j;
    if (i >= rank) {
      if (j != h.cols()) return false;
      continue;
    }
    if (j == h.cols() || h(i, j) <= 0) return false;
    if (i > 0 && j <= last_pivot) return false;
    for (std::size_t r = 0; r < i; ++r)
      if (h(r, j) < 0 || h(r, j) >= h(i, j)) return false;
    last_pivot = j;
  }
  return true;
}

}  // namespace

TEST_SUITE("exactalg") {
  TEST_CASE("hnf of a small matrix") {
    const IntMatrix m{{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
    const auto r = hnf(m);
    CHECK(r.u * m == r.h);
    CHECK(abs(determinant(r.u)) == 1);
    CHECK(r.rank == 3);
    CHECK(r.h(0, 0) * r.h(1, 1) * r.h(2, 2) == abs(determinant(m)));
    CHECK(determinant(m) == 624);
  }

  TEST_CASE("hnf properties on random matrices") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
      const auto m = random_matrix(rng, 1 + t % 5, 1 + (t / 5) % 5, 6);
      const auto r = hnf(m);
      CHECK(r.u * m == r.h);
      CHECK(abs(determinant(r.u)) == 1);
      CHECK(r.rank == testing::rational_rank(to_q(m)));
      CHECK(is_row_echelon(r.h, r.rank));
    }
  }

  TEST_CASE("snf divisibility chain and transforms") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
      const auto m = random_matrix(rng, 1 + t % 4, 1 + (t / 4) % 4, 8);
      const auto s = snf(m);
      CHECK(s.left * m * s.right == s.d);
      CHECK(abs(determinant(s.left)) == 1);
      CHECK(abs(determinant(s.right)) == 1);
      const std::size_t n = std::min(m.rows(), m.cols());
      for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
          if (i != j) CHECK(s.d(i, j) == 0);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        CHECK(s.d(i, i) >= 0);
        if (s.d(i, i) == 0) CHECK(s.d(i + 1, i + 1) == 0);
        else CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
      }
    }
  }

  TEST_CASE("snf of a known matrix") {
    const auto s = snf(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    CHECK(s.d == IntMatrix{{2, 0, 0}, {0, 6, 0}, {0, 0, 12}});
  }

  TEST_CASE("kernel satisfies rank-nullity and is saturated") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
      const auto m = random_matrix(rng, 1 + t % 4, 1 + (t / 4) % 5, 4);
      const auto k = kernel(m);
      CHECK(k.rank() + testing::rational_rank(to_q(m)) == m.cols());
      for (std::size_t i = 0; i < k.rank(); ++i) {
        const auto v = k.vector(i);
        const auto mv = m * v;
        for (const auto& x : mv) CHECK(x == 0);
      }
      // saturation: the basis extends to a unimodular matrix iff its SNF is 1s
      if (k.rank() > 0) {
        const auto s = snf(k.matrix());
        for (std::size_t i = 0; i < k.rank(); ++i) CHECK(s.d(i, i) == 1);
      }
    }
  }

  TEST_CASE("kernel_into_cokernel matches brute force") {
    std::mt19937_64 rng(5);
    int compared = 0;
    while (compared < 15) {
      std::uniform_int_distribution<int> dim(1, 3);
      const std::size_t a = static_cast<std::size_t>(dim(rng));
      const std::size_t r = static_cast<std::size_t>(dim(rng)) + 1;
      const std::size_t b = std::min<std::size_t>(r, static_cast<std::size_t>(dim(rng)));
      const auto m = random_matrix(rng, r, a, 5);
      const auto d = random_matrix(rng, r, b, 5);
      if (testing::rational_rank(to_q(d)) != b) continue;
      ++compared;
      const auto lat = kernel_into_cokernel(m, d);
      std::vector<int> v(a, -5);
      while (true) {
        IntVector iv(v.begin(), v.end());
        const auto mv = m * iv;
        std::vector<mpq_class> w(mv.begin(), mv.end());
        CHECK(lat.contains(iv) == testing::in_integer_image_full_rank(to_q(d), w));
        std::size_t i = 0;
        while (i < a && v[i] == 5) v[i++] = -5;
        if (i == a) break;
        ++v[i];
      }
    }
  }

  TEST_CASE("solve_with_image finds solutions exactly when they exist") {
    const IntMatrix m{{1, 0}, {0, 1}};
    const IntMatrix d{{2}, {2}};
    const IntVector ok{3, 5};
    const auto sol = solve_with_image(m, d, ok);
    REQUIRE(sol);
    const auto mv = m * *sol;
    CHECK((mv[0] - 3) % 2 == 0);
    CHECK(mv[0] - 3 == mv[1] - 5);
    const IntMatrix m2{{2, 0}, {0, 2}};
    CHECK_FALSE(solve_with_image(m2, IntMatrix(2, 0), IntVector{1, 0}));
  }

  TEST_CASE("lattice basis is canonical") {
    const auto a = LatticeBasis::from_generators(2, {{2, 0}, {0, 2}, {1, 1}});
    const auto b = LatticeBasis::from_generators(2, {{1, 1}, {1, -1}});
    CHECK(a == b);
    CHECK(a.contains(IntVector{3, 1}));
    CHECK_FALSE(a.contains(IntVector{1, 0}));
  }

  TEST_CASE("mod p rank agrees with an independent elimination") {
    std::mt19937_64 rng(13);
    for (std::uint64_t p : {2, 3, 5, 7}) {
      for (int t = 0; t < 30; ++t) {
        const auto m = random_matrix(rng, 1 + t % 5, 1 + (t / 5) % 5, 9);
        std::vector<std::vector<std::int64_t>> raw(m.rows(), std::vector<std::int64_t>(m.cols()));
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j) raw[i][j] = m(i, j).get_si();
        const std::size_t r = testing::fp_rank(raw, static_cast<std::int64_t>(p));
        CHECK(modp_rank(m, p) == r);
        CHECK(modp_kernel(m, p).size() == m.cols() - r);
      }
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(IntMatrix({{1, 2}}) * IntMatrix({{1, 2}}), DimensionError);
    CHECK_THROWS_AS(hstack(IntMatrix(2, 1), IntMatrix(3, 1)), DimensionError);
    CHECK_THROWS_AS(require_prime(4), NotPrimeError);
    CHECK_THROWS_AS(modp_rank(IntMatrix(1, 1), 9), NotPrimeError);
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK(mod_inverse(3, 7) == 5);
  }

  TEST_CASE("to_string") { CHECK(IntMatrix{{1, 2}, {3, -4}}.to_string() == "[[1,2],[3,-4]]"); }
}
