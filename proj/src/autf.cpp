#include "pvk/autf.hpp"

#include <sstream>
#include <stdexcept>

namespace pvk {

std::string to_string(CompositionOrder order) {
    return order == CompositionOrder::LeftFirst ? "left-first" : "right-first";
}

FreeEndomorphism::FreeEndomorphism(AlphabetPtr alphabet, std::vector<Word> images)
    : map_(alphabet, alphabet, std::move(images)) {}

FreeEndomorphism FreeEndomorphism::identity(AlphabetPtr alphabet) {
    return FreeEndomorphism(GenMap::identity(alphabet).source(), GenMap::identity(alphabet).images());
}

FreeEndomorphism FreeEndomorphism::inner(const Word& w) {
    const AlphabetPtr& a = w.alphabet();
    if (!a)
        throw std::invalid_argument("inner automorphism needs a word with an alphabet");
    std::vector<Word> images;
    for (std::size_t g = 0; g < a->size(); ++g)
        images.push_back(conjugate(Word::generator(a, g), w));
    return FreeEndomorphism(a, std::move(images));
}

FreeEndomorphism FreeEndomorphism::then(const FreeEndomorphism& next) const {
    if (!same_alphabet(alphabet(), next.alphabet()))
        throw std::invalid_argument("rank mismatch");
    return FreeEndomorphism(alphabet(), map_.then(next.map_).images());
}

bool FreeEndomorphism::is_identity() const {
    for (std::size_t g = 0; g < rank(); ++g)
        if (image(g) != Word::generator(alphabet(), g))
            return false;
    return true;
}

bool FreeEndomorphism::operator==(const FreeEndomorphism& other) const {
    return same_alphabet(alphabet(), other.alphabet()) && images() == other.images();
}

std::string FreeEndomorphism::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t g = 0; g < rank(); ++g)
        out << (g ? ", " : "") << image(g).to_string();
    out << ')';
    return out.str();
}

AlphabetPtr free_alphabet(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back("x" + std::to_string(i));
    return Alphabet::make(std::move(names));
}

namespace {

void check_indices(int i, int j, int n) {
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        throw std::invalid_argument("epsilon needs 1 <= i != j <= n");
}

FreeEndomorphism basis_conjugation(int i, int j, int n, bool inverse) {
    check_indices(i, j, n);
    AlphabetPtr a = free_alphabet(static_cast<std::size_t>(n));
    std::vector<Word> images;
    for (int l = 1; l <= n; ++l)
        images.push_back(Word::generator(a, static_cast<std::size_t>(l - 1)));
    Word xi = images[i - 1], xj = images[j - 1];
    images[i - 1] = inverse ? xj * xi * xj.inverse() : xj.inverse() * xi * xj;
    return FreeEndomorphism(a, std::move(images));
}

} // namespace

FreeEndomorphism epsilon(int i, int j, int n) { return basis_conjugation(i, j, n, false); }

FreeEndomorphism epsilon_inverse(int i, int j, int n) { return basis_conjugation(i, j, n, true); }

FreeEndomorphism compose(const std::vector<FreeEndomorphism>& factors, CompositionOrder order) {
    if (factors.empty())
        throw std::invalid_argument("compose needs at least one factor");
    FreeEndomorphism r = FreeEndomorphism::identity(factors.front().alphabet());
    if (order == CompositionOrder::LeftFirst) {
        for (const auto& f : factors)
            r = r.then(f);
    } else {
        for (auto it = factors.rbegin(); it != factors.rend(); ++it)
            r = r.then(*it);
    }
    return r;
}

bool check_inner(const FreeEndomorphism& f, const Word& w) {
    if (!same_alphabet(f.alphabet(), w.alphabet()) && !(w.is_identity() && !w.alphabet()))
        throw std::invalid_argument("alphabet mismatch");
    for (std::size_t g = 0; g < f.rank(); ++g) {
        Word x = Word::generator(f.alphabet(), g);
        if (f.image(g) != conjugate(x, w.alphabet() ? w : Word(f.alphabet())))
            return false;
    }
    return true;
}

std::optional<Word> find_inner_conjugator(const FreeEndomorphism& f) {
    if (f.rank() < 2)
        throw std::invalid_argument("find_inner_conjugator needs rank >= 2");
    const AlphabetPtr& a = f.alphabet();
    // f(x1) = p^-1 x1 p with p reduced
    const auto& u = f.image(0).letters();
    if (u.size() % 2 == 0)
        return std::nullopt;
    const std::size_t mid = u.size() / 2;
    if (u[mid] != Letter{0, false})
        return std::nullopt;
    std::vector<Letter> p_letters(u.begin() + static_cast<long>(mid) + 1, u.end());
    Word p = Word::reduce(a, p_letters);
    if (p.length() != mid || p.inverse() * Word::generator(a, std::size_t{0}) * p != f.image(0))
        return std::nullopt;
    // w = x1^k p; p f(x2) p^-1 = x1^-k x2 x1^k
    Word q = p * f.image(1) * p.inverse();
    long k = 0;
    for (const Letter& l : q.letters()) {
        if (l.gen != 0)
            break;
        k += l.inverted ? 1 : -1;
    }
    Word w = Word::generator(a, std::size_t{0}, k) * p;
    if (!check_inner(f, w))
        return std::nullopt;
    return w;
}

AlphabetPtr epsilon_alphabet(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            names.push_back("e" + std::to_string(i) + std::to_string(j));
            names.push_back("e" + std::to_string(j) + std::to_string(i));
        }
    return Alphabet::make(std::move(names));
}

namespace {

std::pair<int, int> epsilon_indices(const std::string& name) {
    // names are e<i><j> with single-digit indices
    return {name[1] - '0', name[2] - '0'};
}

} // namespace

FreeEndomorphism evaluate_epsilon_word(const Word& w, int n, CompositionOrder order) {
    if (n < 2 || n > 9)
        throw std::invalid_argument("epsilon words need 2 <= n <= 9");
    if (!same_alphabet(w.alphabet(), epsilon_alphabet(n)))
        throw std::invalid_argument("alphabet mismatch");
    std::vector<FreeEndomorphism> factors;
    factors.push_back(FreeEndomorphism::identity(free_alphabet(static_cast<std::size_t>(n))));
    for (const Letter& l : w.letters()) {
        auto [i, j] = epsilon_indices(w.alphabet()->name(l.gen));
        factors.push_back(l.inverted ? epsilon_inverse(i, j, n) : epsilon(i, j, n));
    }
    return compose(factors, order);
}

namespace {

Word eps_word(int n, const std::vector<std::pair<std::string, long>>& powers) {
    return Word::from_powers(epsilon_alphabet(n), powers);
}

std::string e(int i, int j) { return "e" + std::to_string(i) + std::to_string(j); }

IdentityCheck endo_identity(const std::string& name, const Word& lhs, const Word& rhs, int n,
                            CompositionOrder order) {
    FreeEndomorphism l = evaluate_epsilon_word(lhs, n, order);
    FreeEndomorphism r = evaluate_epsilon_word(rhs, n, order);
    IdentityCheck c;
    c.name = name;
    c.lhs = l.to_string();
    c.rhs = r.to_string();
    c.holds = l == r;
    return c;
}

std::vector<IdentityCheck> mccool_checks(int n, CompositionOrder order, bool include_extra) {
    if (n < 2 || n > 9)
        throw std::invalid_argument("mccool_relations_check needs 2 <= n <= 9");
    std::vector<IdentityCheck> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k)
                    continue;
                if (i < k) {
                    Word lhs = eps_word(n, {{e(i, j), 1}, {e(k, j), 1}});
                    Word rhs = eps_word(n, {{e(k, j), 1}, {e(i, j), 1}});
                    out.push_back(endo_identity(lhs.to_string() + " = " + rhs.to_string(), lhs, rhs, n, order));
                }
                Word lhs = eps_word(n, {{e(i, j), 1}, {e(k, j), 1}, {e(i, k), 1}});
                Word rhs = eps_word(n, {{e(i, k), 1}, {e(i, j), 1}, {e(k, j), 1}});
                out.push_back(endo_identity(lhs.to_string() + " = " + rhs.to_string(), lhs, rhs, n, order));
            }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    if (i == j || k == l || i == k || i == l || j == k || j == l)
                        continue;
                    if (std::pair(i, j) > std::pair(k, l))
                        continue;
                    Word lhs = eps_word(n, {{e(i, j), 1}, {e(k, l), 1}});
                    Word rhs = eps_word(n, {{e(k, l), 1}, {e(i, j), 1}});
                    out.push_back(endo_identity(lhs.to_string() + " = " + rhs.to_string(), lhs, rhs, n, order));
                }
    if (include_extra && n == 3) {
        const std::pair<std::string, std::string> extra[] = {
            {e(1, 3), e(2, 3)}, {e(1, 2), e(3, 2)}, {e(2, 1), e(3, 1)}};
        for (const auto& [x, y] : extra) {
            Word lhs = eps_word(n, {{x, 1}, {y, 1}});
            Word rhs = eps_word(n, {{y, 1}, {x, 1}});
            out.push_back(endo_identity(lhs.to_string() + " = " + rhs.to_string(), lhs, rhs, n, order));
        }
    }
    return out;
}

bool all_hold(const std::vector<IdentityCheck>& checks) {
    for (const auto& c : checks)
        if (!c.holds)
            return false;
    return true;
}

} // namespace

CompositionOrder pinned_composition_order() {
    static const CompositionOrder pinned = [] {
        if (all_hold(mccool_checks(3, CompositionOrder::LeftFirst, false)))
            return CompositionOrder::LeftFirst;
        if (all_hold(mccool_checks(3, CompositionOrder::RightFirst, false)))
            return CompositionOrder::RightFirst;
        throw std::logic_error("McCool relators fail under both composition orders");
    }();
    return pinned;
}

std::vector<IdentityCheck> mccool_relations_check(int n, CompositionOrder order) {
    return mccool_checks(n, order, true);
}

std::vector<IdentityCheck> mccool_relations_check(int n) {
    return mccool_checks(n, pinned_composition_order(), true);
}

bool HnnReport::all_hold() const {
    for (const auto& c : checks)
        if (!c.holds)
            return false;
    return true;
}

HnnReport hnn_data_check() {
    const int n = 3;
    const CompositionOrder order = pinned_composition_order();
    const AlphabetPtr ea = epsilon_alphabet(n);
    const AlphabetPtr xa = free_alphabet(n);
    auto g = [&](const std::string& name) { return Word::generator(ea, name); };
    auto x = [&](std::size_t i) { return Word::generator(xa, i - 1); };

    const Word alpha1 = g("e13") * g("e23");
    const Word beta1 = g("e13") * g("e12");
    const Word alpha2 = g("e32") * g("e31");
    const Word beta2 = g("e21") * g("e31");
    const Word gamma1 = g("e13") * g("e31");
    const Word gamma2 = g("e13");

    HnnReport report;
    report.order = order;
    auto word_identity = [&](const std::string& name, const Word& lhs, const Word& rhs) {
        IdentityCheck c;
        c.name = name;
        c.lhs = lhs.to_string();
        c.rhs = rhs.to_string();
        c.holds = lhs == rhs;
        report.checks.push_back(std::move(c));
    };

    // The e_ij written back in terms of the images of a_i, b_i, c_i.
    word_identity("e13 = gamma2", gamma2, g("e13"));
    word_identity("e31 = gamma2^-1 gamma1", gamma2.inverse() * gamma1, g("e31"));
    word_identity("e12 = gamma2^-1 beta1", gamma2.inverse() * beta1, g("e12"));
    word_identity("e21 = beta2 gamma1^-1 gamma2", beta2 * gamma1.inverse() * gamma2, g("e21"));
    word_identity("e23 = gamma2^-1 alpha1", gamma2.inverse() * alpha1, g("e23"));
    word_identity("e32 = alpha2 gamma1^-1 gamma2", alpha2 * gamma1.inverse() * gamma2, g("e32"));

    const Word b_gens[] = {alpha1, alpha2 * gamma1.inverse() * beta1, beta2};
    const Word b_expected[] = {g("e13") * g("e23"), g("e32") * g("e12"), g("e21") * g("e31")};
    const char* b_names[] = {"alpha1", "alpha2 gamma1^-1 beta1", "beta2"};
    const Word b_conj[] = {x(3), x(2), x(1)};
    for (int i = 0; i < 3; ++i) {
        FreeEndomorphism f = evaluate_epsilon_word(b_gens[i], n, order);
        IdentityCheck c;
        c.name = std::string("B: ") + b_names[i] + " = " + b_expected[i].to_string() + " is conjugation by " +
                 b_conj[i].to_string();
        c.lhs = b_gens[i].to_string() + " -> " + f.to_string();
        c.rhs = FreeEndomorphism::inner(b_conj[i]).to_string();
        c.holds = b_gens[i] == b_expected[i] && check_inner(f, b_conj[i]);
        report.checks.push_back(std::move(c));
    }

    const Word a_gens[] = {alpha1, beta1 * alpha2 * gamma1.inverse(), gamma1 * beta2 * gamma1.inverse()};
    const char* a_names[] = {"alpha1", "beta1 alpha2 gamma1^-1", "gamma1 beta2 gamma1^-1"};
    const Word a_conj[] = {x(3), x(2), x(3) * x(1) * x(3).inverse()};
    for (int i = 0; i < 3; ++i) {
        FreeEndomorphism f = evaluate_epsilon_word(a_gens[i], n, order);
        std::optional<Word> w = find_inner_conjugator(f);
        IdentityCheck c;
        c.name = std::string("A: ") + a_names[i] + " is conjugation by " + a_conj[i].to_string();
        c.lhs = f.to_string();
        c.rhs = FreeEndomorphism::inner(a_conj[i]).to_string();
        if (w) {
            report.a_conjugators.push_back(*w);
            c.holds = *w == a_conj[i];
            c.detail = "conjugator found: " + w->to_string();
        } else {
            report.a_conjugators.push_back(Word(xa));
            c.detail = "not an inner automorphism";
        }
        report.checks.push_back(std::move(c));
    }

    for (int i = 0; i < 3; ++i) {
        Word lhs = gamma2.inverse() * a_gens[i] * gamma2;
        IdentityCheck c = endo_identity(std::string("psi: gamma2^-1 (") + a_names[i] + ") gamma2 = " + b_names[i],
                                        lhs, b_gens[i], n, order);
        report.checks.push_back(std::move(c));
    }
    return report;
}

} // namespace pvk
