#include "pvk/fpres.hpp"
#include "pvk/lie.hpp"
#include "pvk/nq.hpp"
#include "pvk/parse.hpp"

#include <doctest.h>

#include <random>

using namespace pvk;

namespace {

long mobius(long n) {
    long m = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        m = -m;
    }
    return n > 1 ? -m : m;
}

// (1/d) sum_{e | d} mu(e) n^(d/e)
long witt_oracle(long n, long d) {
    long s = 0;
    for (long e = 1; e <= d; ++e)
        if (d % e == 0) {
            long p = 1;
            for (long k = 0; k < d / e; ++k)
                p *= n;
            s += mobius(e) * p;
        }
    return s / d;
}

std::vector<std::size_t> ranks(const LcsRanks& r) {
    std::vector<std::size_t> out;
    for (const auto& d : r)
        out.push_back(d.rank);
    return out;
}

} // namespace

TEST_CASE("free groups match the Witt formula") {
    for (long n = 2; n <= 3; ++n) {
        const Presentation p = parse_presentation(n == 2 ? "gens: a b\n" : "gens: a b c\n");
        const int c = n == 2 ? 5 : 4;
        const NqResult r = nilpotent_quotient(p, c);
        REQUIRE(r.ranks.size() == static_cast<std::size_t>(c));
        for (int d = 1; d <= c; ++d) {
            CHECK(r.ranks[d - 1].degree == d);
            CHECK(r.ranks[d - 1].rank == static_cast<std::size_t>(witt_oracle(n, d)));
            CHECK(r.ranks[d - 1].torsion.empty());
        }
        CHECK(r.presentation.consistency_failures().empty());
    }
}

TEST_CASE("Heisenberg group") {
    const Presentation h = parse_presentation("gens: a b\nrel: [[a, b], a]\nrel: [[a, b], b]\n");
    CHECK(ranks(nilpotent_quotient(h, 3).ranks) == std::vector<std::size_t>{2, 1, 0});
}

TEST_CASE("finite abelian quotients") {
    const NqResult r = nilpotent_quotient(parse_presentation("gens: a b\nrel: a^6\nrel: b^4\nrel: [a, b]\n"), 2);
    CHECK(r.ranks[0].rank == 0);
    CHECK(r.ranks[0].torsion == std::vector<Integer>{2, 12});
    CHECK(r.ranks[1].rank == 0);
    CHECK(r.ranks[1].torsion.empty());
}

TEST_CASE("class-2 quotient of Z/2 x| Z") {
    // t a t^-1 = a^-1: gamma_2 / gamma_3 = Z/2.
    const NqResult r = nilpotent_quotient(inversion_torus().presentation(), 3);
    CHECK(r.ranks[0].rank == 1);
    CHECK(r.ranks[0].torsion == std::vector<Integer>{2});
    CHECK(r.ranks[1].torsion == std::vector<Integer>{2});
    CHECK(r.ranks[2].torsion == std::vector<Integer>{2});
}

TEST_CASE("PV3 quotients agree with the Lie ring of the quotient presentation") {
    const NqResult r = lcs_ranks_pv3(3);
    CHECK(ranks(r.ranks) == ranks_of(lie_quotient_dims(6, pv3_lie_relations(), 3)));
    CHECK(r.presentation.consistency_failures().empty());
}

TEST_CASE("normal forms and weights") {
    const Presentation p = parse_presentation("gens: a b\n");
    const NqResult r = nilpotent_quotient(p, 3);
    const Word a = p.generator("a"), b = p.generator("b");
    const auto& np = r.presentation;
    CHECK(leading_weight(np, element_in_quotient(np, a * b)) == 1);
    CHECK(leading_weight(np, element_in_quotient(np, commutator(a, b))) == 2);
    CHECK(leading_weight(np, element_in_quotient(np, commutator(commutator(a, b), b))) == 3);
    // a b and b a differ by a commutator.
    CHECK_FALSE(element_in_quotient(np, a * b) == element_in_quotient(np, b * a));
}

TEST_CASE("property: evaluation is a homomorphism into the quotient") {
    const Presentation p = pv_presentation(3);
    const NqResult r = nilpotent_quotient(p, 3);
    const auto& np = r.presentation;
    std::mt19937 rng(51);
    auto random_word = [&] {
        Word w(p.alphabet());
        for (int k = 0; k < 6; ++k)
            w *= Word::generator(p.alphabet(), rng() % 6, rng() % 2 ? 1 : -1);
        return w;
    };
    for (int trial = 0; trial < 40; ++trial) {
        const Word u = random_word(), v = random_word();
        CHECK(np.evaluate(u * v) == np.multiply(np.evaluate(u), np.evaluate(v)));
        CHECK(np.evaluate(u.inverse()) == np.inverse(np.evaluate(u)));
        CHECK(np.evaluate(commutator(u, v)) == np.commutator(np.evaluate(u), np.evaluate(v)));
    }
    for (const auto& rel : p.relators())
        CHECK(np.evaluate(rel) == np.identity());
}

TEST_CASE("step limit") {
    CHECK_THROWS_AS(nilpotent_quotient(pv_presentation(3), 4, NqOptions{100}), ResourceLimit);
}
