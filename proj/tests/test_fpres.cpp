#include "pvk/fpres.hpp"
#include "pvk/parse.hpp"

#include <doctest.h>

#include <random>

using namespace pvk;

namespace {

Presentation z2() { return parse_presentation("gens: a b\nrel: [a, b]\n"); }

std::size_t count_triples(int n) {
    std::size_t c = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                c += (i != j && j != k && i != k);
    return c;
}

// Unordered pairs {(i,j),(k,l)} of ordered pairs with {i,j} and {k,l} disjoint.
std::size_t count_disjoint(int n) {
    std::size_t c = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l)
                    c += (i != j && k != l && k != i && k != j && l != i && l != j);
    return c / 2;
}

} // namespace

TEST_CASE("pure virtual braid presentations") {
    for (int n = 2; n <= 5; ++n) {
        const Presentation p = pv_presentation(n);
        CHECK(p.generator_count() == static_cast<std::size_t>(n * (n - 1)));
        CHECK(pv_six_letter_count(n) == count_triples(n));
        CHECK(pv_commutator_count(n) == count_disjoint(n));
        CHECK(p.relators().size() == count_triples(n) + count_disjoint(n));
    }
    const Presentation p3 = pv_presentation(3);
    CHECK(p3.alphabet()->name(0) == "l12");
    CHECK(p3.alphabet()->name(5) == "l32");
    for (const auto& r : p3.relators())
        CHECK(r.length() == 6);
    CHECK_THROWS(pv_presentation(1));
}

TEST_CASE("G3 presentations") {
    CHECK(g3_presentation().generator_count() == 5);
    CHECK(g3_free_product_presentation().generator_count() == 6);
    const Presentation q = q3_family_presentation(2);
    REQUIRE(q.families().size() >= 1);
    CHECK(q.materialized().relators().size() > q.relators().size());
}

TEST_CASE("generator change round trips on generators") {
    const GeneratorChange ch = pv3_new_generators();
    for (std::size_t i = 0; i < ch.f.source()->size(); ++i) {
        const Word x = Word::generator(ch.f.source(), i);
        CHECK(ch.f.then(ch.g).apply(x) == x);
    }
    for (std::size_t i = 0; i < ch.g.source()->size(); ++i) {
        const Word x = Word::generator(ch.g.source(), i);
        CHECK(ch.g.then(ch.f).apply(x) == x);
    }
}

TEST_CASE("certificates") {
    const Presentation p = z2();
    const Word a = p.generator("a"), b = p.generator("b");
    const Word w = conjugate(commutator(a, b), b).inverse();
    const ConsequenceCertificate cert{{b.inverse(), 0, -1}};
    CHECK(expand_certificate(p, cert) == w);
    CHECK(verify_certificate(p, w, cert));
    CHECK_FALSE(verify_certificate(p, a, cert));
    CHECK(check_syzygy(p, {{a, 0, 1}, {a, 0, -1}}));
    CHECK_THROWS_AS(expand_certificate(p, {{a, 3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(expand_certificate(p, {{a, 0, 2}}), std::invalid_argument);
}

TEST_CASE("consequence search and refutation") {
    const Presentation p = z2();
    const Word a = p.generator("a"), b = p.generator("b");
    const ConsequenceResult yes = is_consequence(b * a * b.inverse() * a.inverse(), p);
    CHECK(yes.verdict == Verdict::Verified);
    REQUIRE(yes.certificate);
    CHECK(verify_certificate(p, b * a * b.inverse() * a.inverse(), *yes.certificate));

    const ConsequenceResult no = is_consequence(a * a, p);
    CHECK(no.verdict == Verdict::Refuted);
    CHECK(no.refuting_class == 1);

    // [a,[a,b]] is nontrivial in F2 but dies in class 2; the search bound is tiny.
    const Presentation free2 = parse_presentation("gens: a b\nrel: a^5\n");
    SearchBounds tight;
    tight.factors = 1;
    tight.conjugator_length = 1;
    tight.node_budget = 10;
    tight.refutation_class = 1;
    const ConsequenceResult unknown = is_consequence(commutator(a, commutator(a, b)), free2, std::nullopt, tight);
    CHECK(unknown.verdict == Verdict::Unknown);
}

TEST_CASE("homomorphism checks") {
    const Presentation p = z2();
    const AlphabetPtr F = Alphabet::make({"x", "y"});
    const Word x = Word::generator(F, "x");
    // a -> x, b -> x^2 kills [a,b] in the free group; a -> x, b -> y does not.
    const auto ok = check_homomorphism(p, GenMap(p.alphabet(), F, {x, x.pow(2)}), FreeGroupTarget{F});
    CHECK(ok[0].result.verdict == Verdict::Verified);
    const auto bad = check_homomorphism(p, GenMap(p.alphabet(), F, {x, Word::generator(F, "y")}), FreeGroupTarget{F});
    CHECK(bad[0].result.verdict == Verdict::Refuted);

    // All PV3 relators vanish in Aut(F3).
    const Presentation pv = pv_presentation(3);
    const AutomorphismTarget t = epsilon_target(3, CompositionOrder::LeftFirst);
    const GenMap m(pv.alphabet(), t.alphabet, [&] {
        std::vector<Word> im;
        for (std::size_t i = 0; i < 6; ++i)
            im.push_back(Word::generator(t.alphabet, i));
        return im;
    }());
    for (const auto& v : check_homomorphism(pv, m, t))
        CHECK(v.result.verdict == Verdict::Verified);
}

TEST_CASE("mapping torus multiplication") {
    const MappingTorus T = non_residually_nilpotent_torus();
    const AlphabetPtr& A = T.alphabet();
    const Word a = Word::generator(A, "a"), b = Word::generator(A, "b");
    const Word F_a = T.phi().apply(Word::generator(T.phi().alphabet(), "a"));
    // t x t^-1 = phi(x)
    const auto lhs = T.multiply(T.multiply(T.t_power(1), T.evaluate(a)), T.t_power(-1));
    CHECK(lhs.fiber == F_a);
    CHECK(lhs.t == 0);
    std::mt19937 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<MappingTorus::Element> e;
        for (int k = 0; k < 3; ++k) {
            const Word w = (rng() % 2 ? a : b).pow(static_cast<long>(rng() % 3) + 1);
            e.push_back(T.multiply(T.evaluate(w), T.t_power(static_cast<long>(rng() % 5) - 2)));
        }
        CHECK(T.multiply(T.multiply(e[0], e[1]), e[2]) == T.multiply(e[0], T.multiply(e[1], e[2])));
        const auto id = T.multiply(e[0], T.inverse(e[0]));
        CHECK(id.fiber.is_identity());
        CHECK(id.t == 0);
    }
    const Presentation tp = T.presentation();
    for (const auto& r : tp.relators())
        CHECK(T.evaluate(r).fiber.is_identity());
}

TEST_CASE("mapping torus rejects a wrong inverse") {
    const AlphabetPtr A = free_alphabet(1);
    const Word x = Word::generator(A, 0);
    CHECK_THROWS_AS(MappingTorus(FreeEndomorphism(A, {x.inverse()}), FreeEndomorphism(A, {x})),
                    std::invalid_argument);
}

TEST_CASE("residual nilpotence criterion") {
    const CriterionVerdict v = residual_nilpotence_criterion(non_residually_nilpotent_torus().phi());
    CHECK(v.determinant == -1);
    CHECK(v.applies);
    const CriterionVerdict inv = residual_nilpotence_criterion(inversion_torus().phi());
    CHECK(inv.determinant == -2);
    CHECK(inv.verdict() == "INCONCLUSIVE");
    // Identity: det(A - E) = 0.
    CHECK_FALSE(residual_nilpotence_criterion(FreeEndomorphism::identity(free_alphabet(2))).applies);
}
