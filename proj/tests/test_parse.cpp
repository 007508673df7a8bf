#include "pvk/parse.hpp"

#include <doctest.h>

#include <random>

using namespace pvk;

namespace {

// Runs f and returns the (line, column) of the ParseError it throws.
template <class F>
std::pair<std::size_t, std::size_t> error_position(F f) {
    try {
        f();
    } catch (const ParseError& e) {
        return {e.line(), e.column()};
    }
    FAIL("no ParseError");
    return {0, 0};
}

} // namespace

TEST_CASE("word grammar") {
    const AlphabetPtr A = Alphabet::make({"a", "b", "l12"});
    const Word a = Word::generator(A, "a"), b = Word::generator(A, "b"), l = Word::generator(A, "l12");
    CHECK(parse_word("a b^-1 l12^2", A) == a * b.inverse() * l * l);
    CHECK(parse_word("a*b", A) == a * b);
    CHECK(parse_word("(a b)^-2", A) == (a * b).pow(-2));
    CHECK(parse_word("[a, b]", A) == commutator(a, b));
    CHECK(parse_word("[a, [b, l12]]^2", A) == commutator(a, commutator(b, l)).pow(2));
    CHECK(parse_word("1", A).is_identity());
    CHECK(parse_word("  ", A).is_identity());
    CHECK(parse_word("a ^ +3", A) == a.pow(3));
}

TEST_CASE("word errors carry positions") {
    const AlphabetPtr A = Alphabet::make({"a", "b"});
    CHECK(error_position([&] { parse_word("a c", A); }) == std::pair<std::size_t, std::size_t>{1, 3});
    CHECK(error_position([&] { parse_word("a^0", A); }) == std::pair<std::size_t, std::size_t>{1, 3});
    CHECK(error_position([&] { parse_word("(a b", A); }) == std::pair<std::size_t, std::size_t>{1, 5});
    CHECK(error_position([&] { parse_word("[a b]", A); }) == std::pair<std::size_t, std::size_t>{1, 5});
    CHECK(error_position([&] { parse_word("a ^", A); }) == std::pair<std::size_t, std::size_t>{1, 4});
    CHECK(error_position([&] { parse_word("a)", A); }) == std::pair<std::size_t, std::size_t>{1, 2});
}

TEST_CASE("presentation files") {
    const Presentation p = parse_presentation("# Z^2\ngens: a, b\n\nrel: [a, b]   # commutator\n");
    CHECK(p.generator_count() == 2);
    CHECK(p.relators().size() == 1);
    CHECK(parse_presentation(p.to_string()).relators() == p.relators());

    CHECK(error_position([] { parse_presentation("gens: a\nrel: a b\n"); }) ==
          std::pair<std::size_t, std::size_t>{2, 8});
    CHECK(error_position([] { parse_presentation("rel: a\n"); }) == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(error_position([] { parse_presentation("gens: a a\n"); }) == std::pair<std::size_t, std::size_t>{1, 9});
    CHECK(error_position([] { parse_presentation("gens: a\nrel: a a^-1\n"); }).first == 2);
    CHECK(error_position([] { parse_presentation("gens: a\nfoo\n"); }) == std::pair<std::size_t, std::size_t>{2, 1});
    CHECK(error_position([] { parse_presentation("# nothing\n"); }).first == 2); // end of input
    CHECK(error_position([] { parse_presentation("gens: 1a\n"); }) == std::pair<std::size_t, std::size_t>{1, 7});
}

TEST_CASE("generator maps") {
    const AlphabetPtr S = Alphabet::make({"x", "y"});
    const AlphabetPtr T = Alphabet::make({"a", "b"});
    const GenMap m = parse_genmap("x = a b\ny -> b^-1\n", S, T);
    CHECK(m.image(0) == parse_word("a b", T));
    CHECK(m.image(1) == parse_word("b^-1", T));
    CHECK(error_position([&] { parse_genmap("x = a\n", S, T); }).first == 2);
    CHECK(error_position([&] { parse_genmap("x = a\nz = b\n", S, T); }) == std::pair<std::size_t, std::size_t>{2, 1});
    CHECK(error_position([&] { parse_genmap("x = a\nx = b\n", S, T); }).first == 2);
    CHECK(error_position([&] { parse_genmap("x = a\ny = c\n", S, T); }) == std::pair<std::size_t, std::size_t>{2, 5});
}

TEST_CASE("certificates") {
    const Presentation p = parse_presentation("gens: a b\nrel: [a, b]\nrel: a^3\n");
    const ConsequenceCertificate c = parse_certificate("[(a b, r1, +1), (1, r2, -1)]", p);
    REQUIRE(c.size() == 2);
    CHECK(c[0].conjugator == parse_word("a b", p.alphabet()));
    CHECK(c[0].relator == 0);
    CHECK(c[1].sign == -1);
    CHECK(parse_certificate("[]", p).empty());
    CHECK(error_position([&] { parse_certificate("[(a, r3, 1)]", p); }) == std::pair<std::size_t, std::size_t>{1, 7});
    CHECK(error_position([&] { parse_certificate("[(a, r1, 2)]", p); }) == std::pair<std::size_t, std::size_t>{1, 10});
}

TEST_CASE("alphabet inference") {
    const AlphabetPtr A = alphabet_of("[b, a] c1 b^2");
    REQUIRE(A->size() == 3);
    CHECK(A->name(0) == "b");
    CHECK(A->name(1) == "a");
    CHECK(A->name(2) == "c1");
}

TEST_CASE("property: printed words parse back") {
    std::mt19937 rng(81);
    const AlphabetPtr A = Alphabet::make({"a", "b", "l12", "x3"});
    for (int trial = 0; trial < 200; ++trial) {
        Word w(A);
        for (int k = 0; k < 10; ++k)
            w *= Word::generator(A, rng() % 4, static_cast<long>(rng() % 7) - 3);
        CHECK(parse_word(w.to_string(), A) == w);
    }
}
