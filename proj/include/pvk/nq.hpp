// Integral nilpotent quotients G / gamma_{c+1}(G) of finitely presented
// groups, as weighted polycyclic presentations built class by class with
// central tails.

#ifndef PVK_NQ_HPP
#define PVK_NQ_HPP

#include "pvk/fpres.hpp"
#include "pvk/intlinalg.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pvk {

class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Exponents = std::vector<Integer>;

/// Polycyclic generators a_0 < a_1 < ... with weights, relative orders
/// (0 = infinite), power relations a_i^m_i = P_i and conjugates
/// a_j^(a_i) = a_i^-1 a_j a_i for j > i. Elements are exponent vectors of
/// the normal form a_0^e_0 a_1^e_1 ..., with 0 <= e_i < m_i for finite a_i.
class NilpotentPresentation {
public:
    /// How a generator was introduced.
    struct Definition {
        enum Kind { Image, Conjugate, Power } kind = Image;
        std::size_t a = 0; // Image: input generator; Conjugate: j; Power: i
        std::size_t b = 0; // Conjugate: i
    };

    std::size_t size() const { return weights_.size(); }
    int weight(std::size_t i) const { return weights_.at(i); }
    const Integer& relative_order(std::size_t i) const { return orders_.at(i); }
    const Exponents& power(std::size_t i) const { return powers_.at(i); }
    const Definition& definition(std::size_t i) const { return definitions_.at(i); }
    /// a_j^(a_i) for j > i.
    Exponents conjugate_relation(std::size_t j, std::size_t i) const;
    /// Images of the input generators.
    const std::vector<Exponents>& epimorphism() const { return images_; }
    const AlphabetPtr& input_alphabet() const { return input_alphabet_; }
    int nilpotency_class() const { return class_; }

    Exponents identity() const { return Exponents(size()); }
    Exponents generator(std::size_t i, long e = 1) const;
    Exponents multiply(const Exponents& x, const Exponents& y) const;
    Exponents inverse(const Exponents& x) const;
    Exponents power(const Exponents& x, const Integer& k) const;
    /// x^g = g^-1 x g
    Exponents conjugate(const Exponents& x, const Exponents& g) const;
    /// x^-1 y^-1 x y
    Exponents commutator(const Exponents& x, const Exponents& y) const;
    /// Image of a word over the input alphabet.
    Exponents evaluate(const Word& w) const;

    /// Runs every overlap test; returns the failing test names (empty when consistent).
    std::vector<std::string> consistency_failures() const;

    void set_step_limit(std::uint64_t limit) const { step_limit_ = limit; }
    std::uint64_t steps() const { return steps_; }

    std::string to_string() const;

private:
    friend class NilpotentQuotientEngine;

    void mul_gen(Exponents& v, std::size_t k, const Integer& e) const;
    void mul_into(Exponents& v, const Exponents& y) const;
    Exponents conj_by_gen(const Exponents& x, std::size_t k, const Integer& e) const;
    Exponents conj_once(const Exponents& x, std::size_t k, bool inverse) const;
    void tick() const;
    void rebuild_inverse_conjugates();

    std::vector<int> weights_;
    std::vector<Integer> orders_;
    std::vector<Exponents> powers_;
    std::vector<Definition> definitions_;
    std::map<std::pair<std::size_t, std::size_t>, Exponents> conj_;     // (j,i) -> a_j^(a_i), nontrivial only
    std::map<std::pair<std::size_t, std::size_t>, Exponents> conj_inv_; // (j,i) -> a_j^(a_i^-1), a_i infinite
    std::vector<bool> acts_trivially_; // no nontrivial conj_ entry (., i)
    std::vector<Exponents> images_;
    AlphabetPtr input_alphabet_;
    int class_ = 0;
    mutable std::uint64_t steps_ = 0;
    mutable std::uint64_t step_limit_ = 10'000'000;
};

struct LayerData {
    int degree = 0;
    std::size_t rank = 0;
    std::vector<Integer> torsion;
    bool operator==(const LayerData&) const = default;
};
using LcsRanks = std::vector<LayerData>;

std::string to_string(const LayerData& d);

struct NqOptions {
    std::uint64_t step_limit = 10'000'000;
};

/// Builds the quotients class by class.
class NilpotentQuotientEngine {
public:
    explicit NilpotentQuotientEngine(const Presentation& p, NqOptions options = {});

    /// Computes the next class. Returns false once gamma_c = gamma_{c+1}
    /// (every further layer is trivial); the class still advances.
    bool extend();
    const NilpotentPresentation& current() const { return np_; }
    int nilpotency_class() const { return class_; }
    const LcsRanks& ranks() const { return ranks_; }

private:
    void first_class();
    void next_class();

    Presentation presentation_;
    NqOptions options_;
    NilpotentPresentation np_;
    LcsRanks ranks_;
    int class_ = 0;
    bool stable_ = false;
};

struct NqResult {
    NilpotentPresentation presentation;
    LcsRanks ranks;
};

/// G / gamma_{c+1}(G). Families are materialized first. Throws ResourceLimit
/// when the collector exceeds the step limit.
NqResult nilpotent_quotient(const Presentation& p, int c, NqOptions options = {});

/// Normal form of the image of w; zero iff w is trivial in the quotient.
Exponents element_in_quotient(const NilpotentPresentation& np, const Word& w);
/// Smallest weight carrying a nonzero exponent, or 0 for the zero vector:
/// the least c with w nontrivial in G / gamma_{c+1}.
int leading_weight(const NilpotentPresentation& np, const Exponents& v);

NqResult lcs_ranks_pv3(int c, NqOptions options = {});

} // namespace pvk

#endif
