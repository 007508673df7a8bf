// Finitely presented groups: the pure virtual braid presentations and the
// G_3 rewriting, consequence certificates, homomorphism checks, mapping tori.

#ifndef PVK_FPRES_HPP
#define PVK_FPRES_HPP

#include "pvk/autf.hpp"
#include "pvk/intlinalg.hpp"
#include "pvk/word.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace pvk {

/// base^(conjugator^k) for -bound <= k <= bound.
struct RelatorFamily {
    std::string label;
    Word base;
    Word conjugator;
    long bound = 3;
};

class Presentation {
public:
    Presentation() = default;
    /// Relators are reduced on entry; an empty relator is rejected.
    Presentation(AlphabetPtr alphabet, std::vector<Word> relators, std::vector<RelatorFamily> families = {});

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<Word>& relators() const { return relators_; }
    const std::vector<RelatorFamily>& families() const { return families_; }
    std::size_t generator_count() const { return alphabet_->size(); }
    Word generator(std::string_view name) const { return Word::generator(alphabet_, name); }

    /// Families expanded into plain relators (appended after the fixed ones).
    Presentation materialized() const;
    /// "gens: ...\nrel: ...\n" in the text format read by parse_presentation.
    std::string to_string() const;

private:
    AlphabetPtr alphabet_;
    std::vector<Word> relators_;
    std::vector<RelatorFamily> families_;
};

/// "l12", "l21", ...; indices of two digits or more are joined with an 'x'
/// ("l1x10") to keep names unambiguous.
std::string pv_generator_name(int i, int j);

/// Generators l_ij (i != j), ordered l12, l21, l13, l31, l23, l32, l14, ...
/// Six-letter relators l_ki l_kj l_ij l_ki^-1 l_kj^-1 l_ij^-1 for distinct
/// i, j, k come first (for n = 3 in the order of the standard presentation),
/// followed by commutators [l_ij, l_kl] for disjoint index pairs.
Presentation pv_presentation(int n);
/// Closed-form counts for pv_presentation(n).
std::size_t pv_six_letter_count(int n);
std::size_t pv_commutator_count(int n);

/// G_3 on a1, a2, b1, b2, c1.
Presentation g3_presentation();
/// G_3 * <c2>.
Presentation g3_free_product_presentation();
/// G_3 with the family [a_i, b_i]^(c1^k), |k| <= bound, attached.
Presentation q3_family_presentation(long bound = 3);

struct GeneratorChange {
    GenMap f; // l_ij -> words in a_i, b_i, c_i
    GenMap g; // a_i, b_i, c_i -> words in l_ij
};
GeneratorChange pv3_new_generators();

// ---------------------------------------------------------------------------
// Consequence certificates

struct CertificateFactor {
    Word conjugator;
    std::size_t relator = 0;
    int sign = 1;
    bool operator==(const CertificateFactor&) const = default;
};
using ConsequenceCertificate = std::vector<CertificateFactor>;

/// prod u_i r_i^s_i u_i^-1, reduced. Throws std::invalid_argument on a bad index or sign.
Word expand_certificate(const Presentation& p, const ConsequenceCertificate& cert);
bool verify_certificate(const Presentation& p, const Word& w, const ConsequenceCertificate& cert);
/// The certificate multiplies out to the identity.
bool check_syzygy(const Presentation& p, const ConsequenceCertificate& cert);
std::string to_string(const ConsequenceCertificate& cert);

struct SearchBounds {
    std::size_t conjugator_length = 8;
    std::size_t factors = 12;
    std::size_t node_budget = 200000;
    int refutation_class = 4;
    std::uint64_t nq_step_limit = 10'000'000;
};

enum class Verdict { Verified, Refuted, Unknown };
std::string to_string(Verdict v);

struct ConsequenceResult {
    Verdict verdict = Verdict::Unknown;
    std::optional<ConsequenceCertificate> certificate;
    int refuting_class = 0;
    std::string detail;
};

/// Bounded search for a certificate of minimal length: repeatedly insert a
/// cyclic conjugate of a relator (or its inverse) that cancels against the
/// current word, best-first on (factors used + lower bound on factors left).
std::optional<ConsequenceCertificate> search_certificate(const Word& w, const Presentation& p,
                                                         const SearchBounds& bounds = {});

/// With a certificate: verify it. Without: search, then try to refute in a
/// nilpotent quotient of class 1..refutation_class, else UNKNOWN.
ConsequenceResult is_consequence(const Word& w, const Presentation& p,
                                 const std::optional<ConsequenceCertificate>& cert = std::nullopt,
                                 const SearchBounds& bounds = {});

/// Smallest class c <= max_class in which w is nontrivial in G / gamma_{c+1}.
std::optional<int> refute_in_nilpotent_quotient(const Word& w, const Presentation& p, int max_class,
                                                std::uint64_t step_limit);

// ---------------------------------------------------------------------------
// Homomorphism checks

struct FreeGroupTarget {
    AlphabetPtr alphabet;
};

/// Each target generator names an automorphism of F_n; words are evaluated by
/// composing under `order`.
struct AutomorphismTarget {
    AlphabetPtr alphabet;
    std::vector<FreeEndomorphism> generators;
    std::vector<FreeEndomorphism> inverses;
    CompositionOrder order = CompositionOrder::LeftFirst;

    FreeEndomorphism evaluate(const Word& w) const;
};

struct PresentedTarget {
    Presentation presentation;
    SearchBounds bounds;
};

using TargetEvaluator = std::variant<FreeGroupTarget, AutomorphismTarget, PresentedTarget>;

/// Target for l_ij -> e_ij into Aut(F_n).
AutomorphismTarget epsilon_target(int n, CompositionOrder order);

struct RelatorVerdict {
    std::size_t relator = 0;
    Word image;
    ConsequenceResult result;
};

std::vector<RelatorVerdict> check_homomorphism(const Presentation& src, const GenMap& images,
                                               const TargetEvaluator& target);

// ---------------------------------------------------------------------------
// Mapping tori F_n x|_phi Z

class MappingTorus {
public:
    struct Element {
        Word fiber;
        long t = 0;
        bool operator==(const Element&) const = default;
        std::string to_string() const;
    };

    /// Throws std::invalid_argument unless phi_inverse is a two-sided inverse.
    MappingTorus(FreeEndomorphism phi, FreeEndomorphism phi_inverse);

    const FreeEndomorphism& phi() const { return phi_; }
    /// Fiber generators followed by "t".
    const AlphabetPtr& alphabet() const { return alphabet_; }

    Element element(const Word& fiber, long t = 0) const;
    Element t_power(long k) const;
    Element multiply(const Element& a, const Element& b) const;
    Element inverse(const Element& a) const;
    Element commutator(const Element& x, const Element& y) const;
    Element conjugate(const Element& y, const Element& x) const;
    /// Value of a word over alphabet().
    Element evaluate(const Word& w) const;
    /// phi^k(w)
    Word phi_power(long k, const Word& w) const;

    /// Fiber generators and t, relators t x t^-1 phi(x)^-1.
    Presentation presentation() const;

private:
    FreeEndomorphism phi_;
    FreeEndomorphism phi_inverse_;
    AlphabetPtr alphabet_;
};

/// F_2 = <a, b> with a -> a^2 b, b -> a b.
MappingTorus non_residually_nilpotent_torus();
/// F_1 = <a> with a -> a^-1.
MappingTorus inversion_torus();

struct CriterionVerdict {
    IntMatrix a;         // abelianization, row i = exponent sums of phi(x_i)
    IntMatrix a_minus_e;
    Integer determinant;
    bool applies = false;
    std::string verdict() const { return applies ? "CRITERION_APPLIES" : "INCONCLUSIVE"; }
};

/// |det(A - E)| = 1 forces every gamma_i(G_phi) = F_n.
CriterionVerdict residual_nilpotence_criterion(const FreeEndomorphism& phi);

} // namespace pvk

#endif
