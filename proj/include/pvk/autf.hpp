// Endomorphisms of free groups, the basis-conjugating automorphisms e_ij of
// F_3, the McCool relators and the HNN data of Cb_3.

#ifndef PVK_AUTF_HPP
#define PVK_AUTF_HPP

#include "pvk/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pvk {

/// LeftFirst: in a product f g, f acts first, i.e. x(fg) = (x f) g.
/// RightFirst: the usual function composition, (f g)(x) = f(g(x)).
enum class CompositionOrder { LeftFirst, RightFirst };

std::string to_string(CompositionOrder order);

class FreeEndomorphism {
public:
    FreeEndomorphism(AlphabetPtr alphabet, std::vector<Word> images);
    static FreeEndomorphism identity(AlphabetPtr alphabet);
    /// x_i -> w^-1 x_i w
    static FreeEndomorphism inner(const Word& w);

    std::size_t rank() const { return map_.source()->size(); }
    const AlphabetPtr& alphabet() const { return map_.source(); }
    const Word& image(std::size_t i) const { return map_.image(i); }
    const std::vector<Word>& images() const { return map_.images(); }
    const GenMap& map() const { return map_; }

    Word apply(const Word& w) const { return map_.apply(w); }
    /// `this` acts first, then `next`.
    FreeEndomorphism then(const FreeEndomorphism& next) const;
    bool is_identity() const;

    bool operator==(const FreeEndomorphism& other) const;
    /// "(x3^-1 x1 x3, x2, x3)"
    std::string to_string() const;

private:
    GenMap map_;
};

/// Alphabet x1..xn.
AlphabetPtr free_alphabet(std::size_t n);

/// e_ij : x_i -> x_j^-1 x_i x_j, other generators fixed. Indices are 1-based.
FreeEndomorphism epsilon(int i, int j, int n);
/// x_i -> x_j x_i x_j^-1
FreeEndomorphism epsilon_inverse(int i, int j, int n);

FreeEndomorphism compose(const std::vector<FreeEndomorphism>& factors, CompositionOrder order);

/// f(x_i) = w^-1 x_i w for every i.
bool check_inner(const FreeEndomorphism& f, const Word& w);
/// The conjugator w with f = inner(w), when f is inner. Rank >= 2.
std::optional<Word> find_inner_conjugator(const FreeEndomorphism& f);

/// Alphabet e12, e21, e13, e31, ... (same order as the pure virtual braid
/// generators l12, l21, ...).
AlphabetPtr epsilon_alphabet(int n);
/// Value of a word in the e_ij (inverse letters allowed) as an endomorphism of F_n.
FreeEndomorphism evaluate_epsilon_word(const Word& w, int n, CompositionOrder order);

struct IdentityCheck {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool holds = false;
    std::string detail;
};

/// Order under which every McCool relator for n = 3 holds; LeftFirst when
/// both orders work. Throws std::logic_error if neither does.
CompositionOrder pinned_composition_order();

/// McCool relators e_ij e_kj = e_kj e_ij and e_ij e_kj e_ik = e_ik e_ij e_kj
/// for distinct i, j, k, plus the three extra commutations
/// e13 e23 = e23 e13, e12 e32 = e32 e12, e21 e31 = e31 e21. Checked as
/// identities of endomorphisms of F_n under `order`.
std::vector<IdentityCheck> mccool_relations_check(int n, CompositionOrder order);
std::vector<IdentityCheck> mccool_relations_check(int n = 3);

struct HnnReport {
    CompositionOrder order = CompositionOrder::LeftFirst;
    std::vector<IdentityCheck> checks;
    /// Conjugating words found for the generators of A, in order.
    std::vector<Word> a_conjugators;
    bool all_hold() const;
};

HnnReport hnn_data_check();

} // namespace pvk

#endif
