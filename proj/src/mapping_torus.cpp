#include "pvk/fpres.hpp"

#include <stdexcept>

namespace pvk {

std::string MappingTorus::Element::to_string() const {
    return "(" + fiber.to_string() + ", t^" + std::to_string(t) + ")";
}

MappingTorus::MappingTorus(FreeEndomorphism phi, FreeEndomorphism phi_inverse)
    : phi_(std::move(phi)), phi_inverse_(std::move(phi_inverse)) {
    if (!same_alphabet(phi_.alphabet(), phi_inverse_.alphabet()))
        throw std::invalid_argument("rank mismatch");
    if (!phi_.then(phi_inverse_).is_identity() || !phi_inverse_.then(phi_).is_identity())
        throw std::invalid_argument("phi is not invertible under the supplied inverse");
    std::vector<std::string> names = phi_.alphabet()->names();
    if (phi_.alphabet()->contains("t"))
        throw std::invalid_argument("fiber generator named t");
    names.push_back("t");
    alphabet_ = Alphabet::make(std::move(names));
}

Word MappingTorus::phi_power(long k, const Word& w) const {
    Word r = w;
    const FreeEndomorphism& f = k >= 0 ? phi_ : phi_inverse_;
    for (long i = 0; i < (k >= 0 ? k : -k); ++i)
        r = f.apply(r);
    return r;
}

MappingTorus::Element MappingTorus::element(const Word& fiber, long t) const {
    if (!same_alphabet(fiber.alphabet(), phi_.alphabet()))
        throw std::invalid_argument("alphabet mismatch");
    return {fiber, t};
}

MappingTorus::Element MappingTorus::t_power(long k) const { return {Word(phi_.alphabet()), k}; }

MappingTorus::Element MappingTorus::multiply(const Element& a, const Element& b) const {
    return {a.fiber * phi_power(a.t, b.fiber), a.t + b.t};
}

MappingTorus::Element MappingTorus::inverse(const Element& a) const {
    return {phi_power(-a.t, a.fiber.inverse()), -a.t};
}

MappingTorus::Element MappingTorus::commutator(const Element& x, const Element& y) const {
    return multiply(multiply(inverse(x), inverse(y)), multiply(x, y));
}

MappingTorus::Element MappingTorus::conjugate(const Element& y, const Element& x) const {
    return multiply(multiply(inverse(x), y), x);
}

MappingTorus::Element MappingTorus::evaluate(const Word& w) const {
    if (!same_alphabet(w.alphabet(), alphabet_))
        throw std::invalid_argument("alphabet mismatch");
    const std::size_t t = alphabet_->size() - 1;
    Element r = t_power(0);
    for (const Letter& l : w.letters()) {
        Element x = l.gen == t ? t_power(1) : Element{Word::generator(phi_.alphabet(), l.gen), 0};
        r = multiply(r, l.inverted ? inverse(x) : x);
    }
    return r;
}

Presentation MappingTorus::presentation() const {
    const std::size_t n = phi_.rank();
    Word t = Word::generator(alphabet_, n);
    std::vector<Word> letters_map;
    for (std::size_t i = 0; i < n; ++i)
        letters_map.push_back(Word::generator(alphabet_, i));
    GenMap embed(phi_.alphabet(), alphabet_, letters_map);
    std::vector<Word> rel;
    for (std::size_t i = 0; i < n; ++i)
        rel.push_back(t * letters_map[i] * t.inverse() * embed.apply(phi_.image(i)).inverse());
    return Presentation(alphabet_, std::move(rel));
}

MappingTorus non_residually_nilpotent_torus() {
    AlphabetPtr f = Alphabet::make({"a", "b"});
    const Word a = Word::generator(f, 0), b = Word::generator(f, 1);
    return MappingTorus(FreeEndomorphism(f, {a * a * b, a * b}),
                        FreeEndomorphism(f, {a * b.inverse(), b * a.inverse() * b}));
}

MappingTorus inversion_torus() {
    AlphabetPtr f = Alphabet::make({"a"});
    const Word a = Word::generator(f, 0);
    return MappingTorus(FreeEndomorphism(f, {a.inverse()}), FreeEndomorphism(f, {a.inverse()}));
}

} // namespace pvk
