#include "pvk/word.hpp"

#include <doctest.h>

#include <random>

using namespace pvk;

namespace {

AlphabetPtr abc() { return Alphabet::make({"a", "b", "c"}); }

// Unreduced letter sequence; reduction happens in Word::reduce.
std::vector<Letter> random_letters(std::mt19937& rng, std::size_t gens, std::size_t len) {
    std::uniform_int_distribution<std::uint32_t> g(0, static_cast<std::uint32_t>(gens - 1));
    std::bernoulli_distribution inv;
    std::vector<Letter> out;
    for (std::size_t i = 0; i < len; ++i)
        out.push_back({g(rng), inv(rng)});
    return out;
}

// Stack reduction, written independently of Word.
std::vector<Letter> naive_reduce(const std::vector<Letter>& in) {
    std::vector<Letter> st;
    for (const auto& l : in) {
        if (!st.empty() && st.back() == l.inverse())
            st.pop_back();
        else
            st.push_back(l);
    }
    return st;
}

} // namespace

TEST_CASE("free reduction") {
    const auto A = abc();
    const Word a = Word::generator(A, "a"), b = Word::generator(A, "b");
    CHECK((a * b * b.inverse() * a).to_string() == "a^2");
    CHECK((a * a.inverse()).is_identity());
    CHECK(Word::identity(A).to_string() == "1");
    CHECK(a.pow(-3) == a.inverse().pow(3));
    CHECK(a.pow(0).is_identity());
    CHECK((a * b * a.inverse()).cyclic_core() == b);
}

TEST_CASE("commutator and conjugate conventions") {
    const auto A = abc();
    const Word x = Word::generator(A, "a"), y = Word::generator(A, "b");
    CHECK(commutator(x, y) == x.inverse() * y.inverse() * x * y);
    CHECK(conjugate(y, x) == x.inverse() * y * x);
}

TEST_CASE("exponent sums") {
    const auto A = abc();
    const Word w = Word::from_powers(A, {{"a", 3}, {"b", -1}, {"a", -1}, {"c", 2}});
    CHECK(w.exponent_sums() == std::vector<long>{2, -1, 2});
}

TEST_CASE("unknown generator is rejected") {
    const auto A = abc();
    CHECK_THROWS(Word::generator(A, "d"));
    const std::vector<Letter> bad = {{7, false}};
    CHECK_THROWS(Word::reduce(A, bad));
}

TEST_CASE("GenMap::then applies the receiver first") {
    const auto A = Alphabet::make({"x", "y"});
    const Word x = Word::generator(A, "x"), y = Word::generator(A, "y");
    const GenMap f(A, A, {x * y, y});
    const GenMap g(A, A, {x, y * x});
    const Word w = x * y.inverse();
    CHECK(f.then(g).apply(w) == g.apply(f.apply(w)));
    CHECK_FALSE(f.then(g).apply(x) == f.apply(g.apply(x)));
    CHECK(GenMap::identity(A).apply(w) == w);
}

TEST_CASE("property: reduction matches a stack oracle") {
    std::mt19937 rng(11);
    const auto A = abc();
    for (int trial = 0; trial < 300; ++trial) {
        const auto letters = random_letters(rng, 3, 20);
        const Word w = Word::reduce(A, letters);
        CHECK(w.letters() == naive_reduce(letters));
    }
}

TEST_CASE("property: group axioms on random words") {
    std::mt19937 rng(12);
    const auto A = abc();
    for (int trial = 0; trial < 200; ++trial) {
        const Word u = Word::reduce(A, random_letters(rng, 3, 12));
        const Word v = Word::reduce(A, random_letters(rng, 3, 12));
        const Word w = Word::reduce(A, random_letters(rng, 3, 12));
        CHECK((u * u.inverse()).is_identity());
        CHECK((u * v) * w == u * (v * w));
        CHECK((u * v).inverse() == v.inverse() * u.inverse());
        CHECK(commutator(u, v).inverse() == commutator(v, u));
        CHECK(u.shortlex_less(v) != (v.shortlex_less(u) || u == v));
    }
}

TEST_CASE("property: substitution is a homomorphism") {
    std::mt19937 rng(13);
    const auto A = abc();
    const auto B = Alphabet::make({"s", "t"});
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Word> images;
        for (int g = 0; g < 3; ++g)
            images.push_back(Word::reduce(B, random_letters(rng, 2, 5)));
        const GenMap m(A, B, images);
        const Word u = Word::reduce(A, random_letters(rng, 3, 10));
        const Word v = Word::reduce(A, random_letters(rng, 3, 10));
        CHECK(m.apply(u * v) == m.apply(u) * m.apply(v));
        CHECK(m.apply(u.inverse()) == m.apply(u).inverse());
    }
}
