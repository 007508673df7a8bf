#include "pvk/intlinalg.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace pvk;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = d(rng);
    return m;
}

// Cofactor expansion.
Integer cofactor_det(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m(0, 0);
    Integer det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, k = 0; j < n; ++j)
                if (j != c)
                    minor(i - 1, k++) = m(i, j);
        const Integer term = m(0, c) * cofactor_det(minor);
        det += (c % 2 == 0) ? term : Integer(-term);
    }
    return det;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// Invariant factors from determinantal divisors: d_k = gcd of k x k minors.
std::vector<Integer> invariant_factors_oracle(const IntMatrix& m) {
    std::vector<Integer> divisors{1};
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(m.rows(), k, 0, cur, rs);
        subsets(m.cols(), k, 0, cur, cs);
        Integer g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                IntMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        sub(i, j) = m(r[i], c[j]);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(abs(cofactor_det(sub))).get_mpz_t());
            }
        if (g == 0)
            break;
        divisors.push_back(g);
    }
    std::vector<Integer> out;
    for (std::size_t k = 1; k < divisors.size(); ++k)
        out.push_back(divisors[k] / divisors[k - 1]);
    return out;
}

} // namespace

TEST_CASE("Smith form of small matrices") {
    CHECK(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).diagonal == std::vector<Integer>{1, 6});
    CHECK(smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).diagonal ==
          std::vector<Integer>{2, 6, 12});
    const SmithForm s = smith_normal_form(IntMatrix{{2, 0}, {0, 0}});
    CHECK(s.rank() == 1);
    CHECK(s.torsion() == std::vector<Integer>{2});
}

TEST_CASE("property: Smith form against determinantal divisors") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        const IntMatrix m = random_matrix(rng, r, c);
        const SmithForm s = smith_normal_form(m);
        IntMatrix d(r, c);
        for (std::size_t i = 0; i < s.diagonal.size(); ++i)
            d(i, i) = s.diagonal[i];
        CHECK(s.left * m * s.right == d);
        CHECK(is_unit_determinant(s.left));
        CHECK(is_unit_determinant(s.right));
        std::vector<Integer> nonzero;
        for (const auto& x : s.diagonal)
            if (x != 0)
                nonzero.push_back(x);
        CHECK(nonzero == invariant_factors_oracle(m));
    }
}

TEST_CASE("property: determinant against cofactor expansion") {
    std::mt19937 rng(22);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const IntMatrix m = random_matrix(rng, n, n);
        CHECK(determinant(m) == cofactor_det(m));
    }
    CHECK_THROWS_AS(is_unit_determinant(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("property: Hermite form spans the same lattice") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const IntMatrix m = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 5);
        const HermiteForm h = hermite_normal_form(m);
        CHECK(h.h.rows() == rank(m));
        CHECK(same_row_lattice(h.h, m));
        for (std::size_t i = 0; i < h.h.rows(); ++i) {
            const std::size_t p = h.pivot_cols[i];
            CHECK(h.h(i, p) > 0);
            for (std::size_t k = 0; k < i; ++k) {
                CHECK(h.h(k, p) >= 0);
                CHECK(h.h(k, p) < h.h(i, p));
            }
            for (std::size_t j = 0; j < p; ++j)
                CHECK(h.h(i, j) == 0);
        }
    }
}

TEST_CASE("property: kernels") {
    std::mt19937 rng(24);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
        const IntMatrix m = random_matrix(rng, r, c, -2, 2);
        const IntMatrix k = kernel_basis(m);
        CHECK(k.rows() == c - rank(m));
        CHECK((m * k.transpose()).is_zero());
        const IntMatrix lk = left_kernel_basis(m);
        CHECK(lk.rows() == r - rank(m));
        if (lk.rows() > 0)
            CHECK((lk * m).is_zero());
    }
}

TEST_CASE("row lattice membership") {
    const IntMatrix m{{2, 0}, {0, 3}};
    CHECK(solve_row_combination(m, {4, 9}) == std::vector<Integer>{2, 3});
    CHECK_FALSE(solve_row_combination(m, {1, 0}));
    CHECK(row_lattice_contains(m, IntMatrix{{2, 3}}));
    CHECK_FALSE(same_row_lattice(m, IntMatrix::identity(2)));
    CHECK(same_row_lattice(IntMatrix{{1, 1}, {0, 1}}, IntMatrix::identity(2)));
}

TEST_CASE("property: echelon lattice agrees with dense rank and Smith torsion") {
    std::mt19937 rng(25);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        const IntMatrix m = random_matrix(rng, r, c, -3, 3);
        EchelonLattice lat(c);
        for (std::size_t i = 0; i < r; ++i)
            lat.insert_dense(m.row(i));
        CHECK(lat.rank() == rank(m));
        CHECK(lat.quotient_torsion() == smith_normal_form(m).torsion());
        CHECK(same_row_lattice(lat.to_matrix(), m));
        for (std::size_t i = 0; i < r; ++i)
            CHECK(lat.contains(to_sparse(m.row(i))));
    }
}

TEST_CASE("sparse conversion") {
    const std::vector<Integer> v{0, 3, 0, -1};
    const SparseVector s = to_sparse(v);
    CHECK(s.size() == 2);
    CHECK(to_dense(s, 4) == v);
}
