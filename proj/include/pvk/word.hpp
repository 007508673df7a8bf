// Free-group words over a named alphabet.
//
// Conventions used throughout the library:
//   conjugation  y^x   = x^-1 y x
//   commutator   [x,y] = x^-1 y^-1 x y
//
// Words are freely reduced at construction, so equality of group elements of
// a free group is plain structural equality.

#ifndef PVK_WORD_HPP
#define PVK_WORD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pvk {

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Ordered list of generator names. Names are a letter followed by letters or
/// digits and are unique within an alphabet.
class Alphabet {
public:
    static AlphabetPtr make(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    /// Index of `name`, or throws std::invalid_argument("unknown generator ...").
    std::size_t index(std::string_view name) const;
    bool contains(std::string_view name) const;

    bool operator==(const Alphabet& other) const { return names_ == other.names_; }

    static bool valid_name(std::string_view name);

private:
    explicit Alphabet(std::vector<std::string> names);
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> lookup_;
};

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

/// One letter g^{+1} or g^{-1}.
struct Letter {
    std::uint32_t gen = 0;
    bool inverted = false;

    Letter inverse() const { return {gen, !inverted}; }
    int sign() const { return inverted ? -1 : 1; }
    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter& o) const {
        // g < g^-1 < h < h^-1 for g < h
        return std::pair(gen, inverted) <=> std::pair(o.gen, o.inverted);
    }
};

class Word {
public:
    Word() = default;
    explicit Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

    /// Freely reduces `letters`. Throws if a letter is outside the alphabet.
    static Word reduce(AlphabetPtr alphabet, std::span<const Letter> letters);
    /// Same, from (name, exponent) pairs; exponents may be any integer.
    static Word from_powers(AlphabetPtr alphabet,
                            const std::vector<std::pair<std::string, long>>& powers);
    static Word generator(AlphabetPtr alphabet, std::size_t g, long exponent = 1);
    static Word generator(AlphabetPtr alphabet, std::string_view name, long exponent = 1);
    static Word identity(AlphabetPtr alphabet) { return Word(std::move(alphabet)); }

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }

    Word inverse() const;
    Word pow(long k) const;
    /// Cyclically reduced core (drops a prefix that cancels against the suffix).
    Word cyclic_core() const;
    /// Exponent sum per generator.
    std::vector<long> exponent_sums() const;

    Word operator*(const Word& rhs) const;
    Word& operator*=(const Word& rhs);

    bool operator==(const Word& other) const;
    /// Shortlex order: length first, then letters.
    bool shortlex_less(const Word& other) const;

    /// "a^2 b a^-1", or "1" for the identity.
    std::string to_string() const;

private:
    void append_reduced(const Letter& l);
    AlphabetPtr alphabet_;
    std::vector<Letter> letters_;
};

/// x^-1 y^-1 x y
Word commutator(const Word& x, const Word& y);
/// y^x = x^-1 y x
Word conjugate(const Word& y, const Word& x);

/// Homomorphism of free groups given by one image per source generator.
class GenMap {
public:
    GenMap(AlphabetPtr source, AlphabetPtr target, std::vector<Word> images);
    static GenMap identity(const AlphabetPtr& alphabet);

    const AlphabetPtr& source() const { return source_; }
    const AlphabetPtr& target() const { return target_; }
    const Word& image(std::size_t g) const { return images_.at(g); }
    const std::vector<Word>& images() const { return images_; }

    /// Maps `w` (over the source alphabet) into the target.
    Word apply(const Word& w) const;
    /// `this` first, then `next`.
    GenMap then(const GenMap& next) const;

private:
    AlphabetPtr source_;
    AlphabetPtr target_;
    std::vector<Word> images_;
};

Word substitute(const Word& w, const GenMap& m);

} // namespace pvk

#endif
