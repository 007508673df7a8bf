#include "pvk/grcohom.hpp"

#include <doctest.h>

#include <random>

using namespace pvk;

namespace {

long choose(long n, long k) {
    if (k < 0 || k > n)
        return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

IntVector random_vector(std::mt19937& rng, std::size_t m) {
    std::uniform_int_distribution<int> d(-3, 3);
    IntVector v(m);
    for (auto& x : v)
        x = d(rng);
    return v;
}

IntVector negate(IntVector v) {
    for (auto& x : v)
        x = -x;
    return v;
}

} // namespace

TEST_CASE("monomial bookkeeping") {
    for (std::size_t m = 1; m <= 7; ++m) {
        for (std::size_t d = 0; d <= m; ++d) {
            CHECK(exterior_monomials(m, d).size() == static_cast<std::size_t>(choose(m, d)));
            CHECK(binomial(m, d) == static_cast<std::size_t>(choose(m, d)));
        }
        const auto pairs = exterior_monomials(m, 2);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            CHECK(pair_index(m, pairs[i][0], pairs[i][1]) == i);
    }
    CHECK(wedge_term(4, 2, 1) == negate(wedge_term(4, 1, 2)));
    CHECK(wedge_term(4, 3, 3) == IntVector(6));
}

TEST_CASE("property: wedge is bilinear and alternating") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t m = 2 + rng() % 5;
        const IntVector u = random_vector(rng, m), v = random_vector(rng, m), w = random_vector(rng, m);
        CHECK(wedge(u, v) == negate(wedge(v, u)));
        CHECK(wedge(u, u) == IntVector(choose(m, 2)));
        IntVector vw(m);
        for (std::size_t i = 0; i < m; ++i)
            vw[i] = v[i] + w[i];
        IntVector sum = wedge(u, v);
        const IntVector uw = wedge(u, w);
        for (std::size_t i = 0; i < sum.size(); ++i)
            sum[i] += uw[i];
        CHECK(wedge(u, vw) == sum);
    }
}

TEST_CASE("property: second exterior power is functorial") {
    std::mt19937 rng(62);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t a = 2 + rng() % 3, b = 2 + rng() % 3, c = 2 + rng() % 3;
        IntMatrix f(a, b), g(b, c);
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < b; ++j)
                f(i, j) = d(rng);
        for (std::size_t i = 0; i < b; ++i)
            for (std::size_t j = 0; j < c; ++j)
                g(i, j) = d(rng);
        const IntMatrix wf = wedge2_map(f);
        const auto pairs = exterior_monomials(a, 2);
        for (std::size_t r = 0; r < pairs.size(); ++r)
            CHECK(wf.row(r) == wedge(f.row(pairs[r][0]), f.row(pairs[r][1])));
        CHECK(wedge2_map(f * g) == wf * wedge2_map(g));
    }
    CHECK(wedge2_map(IntMatrix::identity(4)) == IntMatrix::identity(6));
}

TEST_CASE("exterior quotients") {
    // No relations: binomial ranks.
    const ExteriorQuotient free({"a", "b", "c", "d"}, {});
    CHECK(free.ranks(4) == std::vector<std::size_t>{1, 4, 6, 4, 1});
    // a^b = 0 on three generators: degree 3 dies.
    const ExteriorQuotient q({"a", "b", "c"}, {wedge_term(3, 0, 1)});
    CHECK(q.ranks(3) == std::vector<std::size_t>{1, 3, 2, 0});
    CHECK(q.in_relation_span(wedge_term(3, 1, 0)));
    CHECK_FALSE(q.in_relation_span(wedge_term(3, 0, 2)));
    // 2 a^b = 0 leaves torsion.
    const GradedPiece p = ExteriorQuotient({"a", "b"}, {wedge_term(2, 0, 1, 2)}).piece(2);
    CHECK(p.rank == 0);
    CHECK(p.torsion == std::vector<Integer>{2});
    CHECK_THROWS(ExteriorQuotient({"a", "b"}, {IntVector{1, 2}}));
}

TEST_CASE("closed rank formula") {
    for (long n = 2; n <= 6; ++n)
        for (long r = 0; r <= n; ++r) {
            long falling = 1;
            for (long k = 0; k < r; ++k)
                falling *= n - k;
            CHECK(beer_rank(n, r) == (r <= n - 1 ? choose(n - 1, r) * falling : 0));
        }
}

TEST_CASE("cohomology of PV3") {
    const ExteriorQuotient r = pv3_ring();
    CHECK(r.ranks(3) == std::vector<std::size_t>{1, 6, 6, 0});
    for (const auto& p : r.pieces(3))
        CHECK(p.torsion.empty());
    CHECK(pv3_ring_transported().ranks(3) == std::vector<std::size_t>{1, 6, 6, 0});
    CHECK(same_span(pv3_relations(), pv3_transported_relations()));
    CHECK(relation_span_rank(pv3_condition2_relations()) == 5);
    CHECK(pv3_condition2_relations().size() == 6);
}

TEST_CASE("cohomology of G3") {
    const ExteriorQuotient r = g3_ring();
    CHECK(r.ranks(3) == std::vector<std::size_t>{1, 5, 6, 0});
    CHECK(r.ideal_component(3).rows() > 0);
    const IntMatrix k = g3_theta_kernel();
    CHECK(rank(k) == 4);
    CHECK(same_row_lattice(k, IntMatrix::from_rows(g3_relations(), 10)));
}

TEST_CASE("wedge model") {
    const SurfaceWedgeModel m = build_wedge_model();
    CHECK(m.h1_rank() == 20);
    CHECK(m.h2_rank() == 6);
    CHECK(theta_lower(m) == theta_lower_table());
    CHECK(theta_upper(m) == theta_upper_table());
    CHECK(theta_upper(m) == theta_lower(m).transpose());
    for (std::size_t u = 0; u < 5; ++u)
        for (std::size_t v = 0; v < 5; ++v)
            CHECK(pullback_cup(m, u, v) == pullback_cup_minors(m, u, v));
    // Cup products on a single torus piece: x1 x2 = -x2 x1 = top class.
    const std::size_t x1 = m.h1_index("x1"), x2 = m.h1_index("x2");
    CHECK(m.cup(x1, x2) == negate(m.cup(x2, x1)));
    CHECK(m.cup(x1, x2)[m.h2_index("x1x2")] == 1);
    CHECK(m.cup(x1, m.h1_index("x3")) == IntVector(6));
    CHECK(delta_matrices_check().ok());
    CHECK(delta_lower() == delta_lower_table());
}
