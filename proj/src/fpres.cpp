#include "pvk/fpres.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace pvk {

Presentation::Presentation(AlphabetPtr alphabet, std::vector<Word> relators, std::vector<RelatorFamily> families)
    : alphabet_(std::move(alphabet)), relators_(std::move(relators)), families_(std::move(families)) {
    if (!alphabet_)
        throw std::invalid_argument("presentation needs an alphabet");
    for (const Word& r : relators_) {
        if (!same_alphabet(r.alphabet(), alphabet_))
            throw std::invalid_argument("alphabet mismatch");
        if (r.is_identity())
            throw std::invalid_argument("empty relator");
    }
    for (const auto& f : families_) {
        if (!same_alphabet(f.base.alphabet(), alphabet_) || !same_alphabet(f.conjugator.alphabet(), alphabet_))
            throw std::invalid_argument("alphabet mismatch");
        if (f.base.is_identity())
            throw std::invalid_argument("empty relator");
        if (f.bound < 0)
            throw std::invalid_argument("negative family bound");
    }
}

Presentation Presentation::materialized() const {
    std::vector<Word> rel = relators_;
    for (const auto& f : families_)
        for (long k = -f.bound; k <= f.bound; ++k)
            rel.push_back(conjugate(f.base, f.conjugator.pow(k)));
    return Presentation(alphabet_, std::move(rel));
}

std::string Presentation::to_string() const {
    std::ostringstream out;
    out << "gens:";
    for (const auto& n : alphabet_->names())
        out << ' ' << n;
    out << '\n';
    const Presentation m = materialized();
    for (const Word& r : m.relators())
        out << "rel: " << r.to_string() << '\n';
    return out.str();
}

std::string pv_generator_name(int i, int j) {
    if (i < 10 && j < 10)
        return "l" + std::to_string(i) + std::to_string(j);
    return "l" + std::to_string(i) + "x" + std::to_string(j);
}

Presentation pv_presentation(int n) {
    if (n < 2)
        throw std::invalid_argument("pv_presentation needs n >= 2");
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> index;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) {
            index.emplace_back(i, j);
            index.emplace_back(j, i);
        }
    for (auto [i, j] : index)
        names.push_back(pv_generator_name(i, j));
    AlphabetPtr a = Alphabet::make(names);
    auto l = [&](int i, int j) { return Word::generator(a, pv_generator_name(i, j)); };

    std::vector<Word> rel;
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q)
            for (int s = q + 1; s <= n; ++s) {
                const int t[3] = {p, q, s};
                for (int jj = 2; jj >= 0; --jj) {
                    const int j = t[jj];
                    int other[2], m = 0;
                    for (int x = 0; x < 3; ++x)
                        if (x != jj)
                            other[m++] = t[x];
                    const std::pair<int, int> ki[2] = {{other[0], other[1]}, {other[1], other[0]}};
                    for (auto [k, i] : ki)
                        rel.push_back(l(k, i) * l(k, j) * l(i, j) * l(k, i).inverse() * l(k, j).inverse() *
                                      l(i, j).inverse());
                }
            }
    const std::size_t g = a->size();
    for (std::size_t x = 0; x < g; ++x)
        for (std::size_t y = x + 1; y < g; ++y) {
            auto [i, j] = index[x];
            auto [k, m] = index[y];
            if (i == k || i == m || j == k || j == m)
                continue;
            rel.push_back(commutator(Word::generator(a, x), Word::generator(a, y)));
        }
    return Presentation(a, std::move(rel));
}

std::size_t pv_six_letter_count(int n) {
    return n < 3 ? 0 : static_cast<std::size_t>(n) * (n - 1) * (n - 2);
}

std::size_t pv_commutator_count(int n) {
    return n < 4 ? 0 : static_cast<std::size_t>(n) * (n - 1) * (n - 2) * (n - 3) / 2;
}

namespace {

std::vector<Word> g3_relators(const AlphabetPtr& a) {
    auto g = [&](const char* name) { return Word::generator(a, name); };
    const Word a1 = g("a1"), a2 = g("a2"), b1 = g("b1"), b2 = g("b2"), c1 = g("c1");
    return {
        commutator(a1, b1),
        commutator(a2, b2),
        conjugate(b1, c1) * conjugate(b1, a2).inverse(),
        conjugate(a1, c1) * conjugate(a1, b2).inverse(),
        conjugate(b2, c1) * conjugate(b2, a1 * b2).inverse(),
        conjugate(a2, c1) * conjugate(a2, b1 * a2).inverse(),
    };
}

} // namespace

Presentation g3_presentation() {
    AlphabetPtr a = Alphabet::make({"a1", "a2", "b1", "b2", "c1"});
    return Presentation(a, g3_relators(a));
}

Presentation g3_free_product_presentation() {
    AlphabetPtr a = Alphabet::make({"a1", "a2", "b1", "b2", "c1", "c2"});
    return Presentation(a, g3_relators(a));
}

Presentation q3_family_presentation(long bound) {
    Presentation g3 = g3_presentation();
    const AlphabetPtr& a = g3.alphabet();
    auto g = [&](const char* name) { return Word::generator(a, name); };
    std::vector<RelatorFamily> families = {
        {"[a1,b1]^(c1^k)", commutator(g("a1"), g("b1")), g("c1"), bound},
        {"[a2,b2]^(c1^k)", commutator(g("a2"), g("b2")), g("c1"), bound},
    };
    return Presentation(a, g3.relators(), std::move(families));
}

GeneratorChange pv3_new_generators() {
    AlphabetPtr old_a = pv_presentation(3).alphabet();
    AlphabetPtr new_a = g3_free_product_presentation().alphabet();
    auto o = [&](const char* name) { return Word::generator(old_a, name); };
    auto n = [&](const char* name) { return Word::generator(new_a, name); };

    // old generators l12, l21, l13, l31, l23, l32
    std::vector<Word> f_images = {
        n("c2").inverse() * n("b1"),
        n("b2") * n("c1").inverse() * n("c2"),
        n("c2"),
        n("c2").inverse() * n("c1"),
        n("c2").inverse() * n("a1"),
        n("a2") * n("c1").inverse() * n("c2"),
    };
    // new generators a1, a2, b1, b2, c1, c2
    std::vector<Word> g_images = {
        o("l13") * o("l23"), o("l32") * o("l31"), o("l13") * o("l12"),
        o("l21") * o("l31"), o("l13") * o("l31"), o("l13"),
    };
    return {GenMap(old_a, new_a, std::move(f_images)), GenMap(new_a, old_a, std::move(g_images))};
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Verified:
        return "VERIFIED";
    case Verdict::Refuted:
        return "REFUTED";
    case Verdict::Unknown:
        return "UNKNOWN";
    }
    return "UNKNOWN";
}

FreeEndomorphism AutomorphismTarget::evaluate(const Word& w) const {
    if (!same_alphabet(w.alphabet(), alphabet))
        throw std::invalid_argument("alphabet mismatch");
    std::vector<FreeEndomorphism> factors;
    factors.push_back(FreeEndomorphism::identity(generators.front().alphabet()));
    for (const Letter& l : w.letters())
        factors.push_back(l.inverted ? inverses.at(l.gen) : generators.at(l.gen));
    return compose(factors, order);
}

AutomorphismTarget epsilon_target(int n, CompositionOrder order) {
    AutomorphismTarget t;
    t.alphabet = epsilon_alphabet(n);
    t.order = order;
    for (const auto& name : t.alphabet->names()) {
        const int i = name[1] - '0', j = name[2] - '0';
        t.generators.push_back(epsilon(i, j, n));
        t.inverses.push_back(epsilon_inverse(i, j, n));
    }
    return t;
}

namespace {

void validate(const AutomorphismTarget& t) {
    if (!t.alphabet || t.generators.size() != t.alphabet->size() || t.inverses.size() != t.alphabet->size() ||
        t.generators.empty())
        throw std::invalid_argument("invalid evaluator configuration: one automorphism and one inverse per generator");
    for (std::size_t i = 0; i < t.generators.size(); ++i) {
        if (!same_alphabet(t.generators[i].alphabet(), t.generators.front().alphabet()) ||
            !same_alphabet(t.inverses[i].alphabet(), t.generators.front().alphabet()))
            throw std::invalid_argument("invalid evaluator configuration: rank mismatch");
        if (!t.generators[i].then(t.inverses[i]).is_identity() || !t.inverses[i].then(t.generators[i]).is_identity())
            throw std::invalid_argument("invalid evaluator configuration: inverse of " + t.alphabet->name(i) +
                                        " does not verify");
    }
}

const AlphabetPtr& target_alphabet(const TargetEvaluator& target) {
    return std::visit(
        [](const auto& t) -> const AlphabetPtr& {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, PresentedTarget>)
                return t.presentation.alphabet();
            else
                return t.alphabet;
        },
        target);
}

} // namespace

std::vector<RelatorVerdict> check_homomorphism(const Presentation& src, const GenMap& images,
                                               const TargetEvaluator& target) {
    if (!same_alphabet(images.source(), src.alphabet()))
        throw std::invalid_argument("alphabet mismatch");
    if (!target_alphabet(target) || !same_alphabet(images.target(), target_alphabet(target)))
        throw std::invalid_argument("invalid evaluator configuration: target alphabet differs from the images");
    if (auto* at = std::get_if<AutomorphismTarget>(&target))
        validate(*at);

    std::vector<RelatorVerdict> out;
    const Presentation p = src.materialized();
    for (std::size_t r = 0; r < p.relators().size(); ++r) {
        RelatorVerdict v;
        v.relator = r;
        v.image = images.apply(p.relators()[r]);
        if (std::holds_alternative<FreeGroupTarget>(target)) {
            v.result.verdict = v.image.is_identity() ? Verdict::Verified : Verdict::Refuted;
            v.result.detail = v.image.is_identity() ? "reduces to 1" : "nontrivial in the free group";
        } else if (auto* at = std::get_if<AutomorphismTarget>(&target)) {
            FreeEndomorphism f = at->evaluate(v.image);
            v.result.verdict = f.is_identity() ? Verdict::Verified : Verdict::Refuted;
            v.result.detail = f.is_identity() ? "identity automorphism" : "evaluates to " + f.to_string();
        } else {
            const auto& pt = std::get<PresentedTarget>(target);
            v.result = is_consequence(v.image, pt.presentation, std::nullopt, pt.bounds);
        }
        out.push_back(std::move(v));
    }
    return out;
}

CriterionVerdict residual_nilpotence_criterion(const FreeEndomorphism& phi) {
    const std::size_t n = phi.rank();
    CriterionVerdict v;
    v.a = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        auto sums = phi.image(i).exponent_sums();
        for (std::size_t j = 0; j < n; ++j)
            v.a(i, j) = sums[j];
    }
    v.a_minus_e = v.a;
    for (std::size_t i = 0; i < n; ++i)
        v.a_minus_e(i, i) -= 1;
    v.determinant = determinant(v.a_minus_e);
    v.applies = abs(v.determinant) == 1;
    return v;
}

} // namespace pvk
