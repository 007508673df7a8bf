#include "pvk/autf.hpp"

#include <doctest.h>

#include <random>

using namespace pvk;

namespace {

std::vector<Word> basis(const AlphabetPtr& A) {
    std::vector<Word> out;
    for (std::size_t i = 0; i < A->size(); ++i)
        out.push_back(Word::generator(A, i));
    return out;
}

bool all_hold(const std::vector<IdentityCheck>& checks) {
    for (const auto& c : checks)
        if (!c.holds)
            return false;
    return !checks.empty();
}

} // namespace

TEST_CASE("e_ij conjugates x_i by x_j and fixes the other generators") {
    for (int n = 2; n <= 4; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j)
                    continue;
                const FreeEndomorphism e = epsilon(i, j, n);
                const auto x = basis(e.alphabet());
                for (int k = 1; k <= n; ++k) {
                    const Word expect = k == i ? conjugate(x[i - 1], x[j - 1]) : x[k - 1];
                    CHECK(e.image(k - 1) == expect);
                }
                CHECK(e.then(epsilon_inverse(i, j, n)).is_identity());
                CHECK(epsilon_inverse(i, j, n).then(e).is_identity());
            }
}

TEST_CASE("composition order") {
    const FreeEndomorphism e12 = epsilon(1, 2, 3), e23 = epsilon(2, 3, 3);
    const auto x = basis(e12.alphabet());
    // LeftFirst applies the leftmost factor to the generators first.
    const FreeEndomorphism lf = compose({e12, e23}, CompositionOrder::LeftFirst);
    const FreeEndomorphism rf = compose({e12, e23}, CompositionOrder::RightFirst);
    CHECK(lf == e12.then(e23));
    CHECK(rf == e23.then(e12));
    CHECK_FALSE(lf == rf);
    for (std::size_t k = 0; k < 3; ++k)
        CHECK(lf.image(k) == e23.apply(e12.image(k)));
}

TEST_CASE("inner automorphisms") {
    const AlphabetPtr A = free_alphabet(3);
    const Word w = Word::from_powers(A, {{"x1", 1}, {"x3", -2}});
    const FreeEndomorphism f = FreeEndomorphism::inner(w);
    CHECK(check_inner(f, w));
    const auto found = find_inner_conjugator(f);
    REQUIRE(found);
    CHECK(check_inner(f, *found));
    CHECK_FALSE(find_inner_conjugator(epsilon(1, 2, 3)));
    // e13 e23 is conjugation by x3.
    CHECK(check_inner(compose({epsilon(1, 3, 3), epsilon(2, 3, 3)}, CompositionOrder::LeftFirst),
                      Word::generator(A, "x3")));
}

TEST_CASE("McCool relations") {
    CHECK(pinned_composition_order() == CompositionOrder::LeftFirst);
    CHECK(all_hold(mccool_relations_check(3, CompositionOrder::LeftFirst)));
    CHECK(mccool_relations_check(3).size() == mccool_relations_check(3, CompositionOrder::RightFirst).size());
}

TEST_CASE("HNN data") {
    const HnnReport r = hnn_data_check();
    CHECK(r.all_hold());
    CHECK(r.a_conjugators.size() == 3);
}

TEST_CASE("evaluating words in the e_ij") {
    const AlphabetPtr E = epsilon_alphabet(3);
    CHECK(E->size() == 6);
    const Word w = Word::from_powers(E, {{"e12", 1}, {"e21", -1}});
    const FreeEndomorphism f = evaluate_epsilon_word(w, 3, CompositionOrder::LeftFirst);
    CHECK(f == epsilon(1, 2, 3).then(epsilon_inverse(2, 1, 3)));
}

TEST_CASE("property: composition is associative and respects inverses") {
    std::mt19937 rng(31);
    const int n = 3;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j)
                pairs.push_back({i, j});
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<FreeEndomorphism> fs, inv;
        for (int k = 0; k < 4; ++k) {
            const auto [i, j] = pairs[rng() % pairs.size()];
            fs.push_back(epsilon(i, j, n));
            inv.insert(inv.begin(), epsilon_inverse(i, j, n));
        }
        const FreeEndomorphism f = compose(fs, CompositionOrder::LeftFirst);
        CHECK(f.then(compose(inv, CompositionOrder::LeftFirst)).is_identity());
        CHECK(fs[0].then(fs[1]).then(fs[2]) == fs[0].then(fs[1].then(fs[2])));
    }
}
