#include "pvk/fpres.hpp"
#include "pvk/nq.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>

namespace pvk {

Word expand_certificate(const Presentation& p, const ConsequenceCertificate& cert) {
    Word w(p.alphabet());
    for (const auto& f : cert) {
        if (f.relator >= p.relators().size())
            throw std::invalid_argument("certificate relator index " + std::to_string(f.relator) + " out of range");
        if (f.sign != 1 && f.sign != -1)
            throw std::invalid_argument("certificate sign must be +1 or -1");
        Word u = f.conjugator.alphabet() ? f.conjugator : Word(p.alphabet());
        if (!same_alphabet(u.alphabet(), p.alphabet()))
            throw std::invalid_argument("alphabet mismatch");
        const Word& r = p.relators()[f.relator];
        w *= u * (f.sign > 0 ? r : r.inverse()) * u.inverse();
    }
    return w;
}

bool verify_certificate(const Presentation& p, const Word& w, const ConsequenceCertificate& cert) {
    return expand_certificate(p, cert) == w;
}

bool check_syzygy(const Presentation& p, const ConsequenceCertificate& cert) {
    return expand_certificate(p, cert).is_identity();
}

std::string to_string(const ConsequenceCertificate& cert) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < cert.size(); ++i) {
        if (i)
            out << ", ";
        out << '(' << cert[i].conjugator.to_string() << ", r" << cert[i].relator + 1 << ", "
            << (cert[i].sign > 0 ? "+1" : "-1") << ')';
    }
    out << ']';
    return out.str();
}

namespace {

// Letters packed as 2*gen + inverted so that inversion is x ^ 1.
using Code = std::u16string;

Code encode(const Word& w) {
    Code c;
    c.reserve(w.length());
    for (const Letter& l : w.letters())
        c.push_back(static_cast<char16_t>(2 * l.gen + (l.inverted ? 1 : 0)));
    return c;
}

Word decode(const AlphabetPtr& a, const Code& c) {
    std::vector<Letter> letters;
    letters.reserve(c.size());
    for (char16_t x : c)
        letters.push_back({static_cast<std::uint32_t>(x / 2), (x & 1) != 0});
    return Word::reduce(a, letters);
}

void push_reduced(Code& w, char16_t x) {
    if (!w.empty() && w.back() == (x ^ 1))
        w.pop_back();
    else
        w.push_back(x);
}

Code inverse(const Code& c) {
    Code r(c.rbegin(), c.rend());
    for (auto& x : r)
        x ^= 1;
    return r;
}

struct Rotation {
    Code word;        // s^-1 r^sigma s, reduced
    Code s;           // reduced
    std::size_t relator;
    int sign;
};

std::vector<Rotation> rotations(const Presentation& p) {
    std::vector<Rotation> out;
    std::vector<Code> seen;
    for (std::size_t r = 0; r < p.relators().size(); ++r)
        for (int sign : {1, -1}) {
            const Code rho = encode(sign > 0 ? p.relators()[r] : p.relators()[r].inverse());
            // rho = L c L^-1 with c cyclically reduced
            std::size_t k = 0;
            while (2 * k + 2 <= rho.size() && rho[k] == (rho[rho.size() - 1 - k] ^ 1))
                ++k;
            const Code lead = rho.substr(0, k);
            const Code core = rho.substr(k, rho.size() - 2 * k);
            for (std::size_t i = 0; i < core.size(); ++i) {
                Code word = core.substr(i) + core.substr(0, i);
                if (std::find(seen.begin(), seen.end(), word) != seen.end())
                    continue;
                seen.push_back(word);
                // word = t^-1 c t with t = core[:i], and c = lead^-1 rho lead
                Code s;
                for (char16_t x : lead + core.substr(0, i))
                    push_reduced(s, x);
                out.push_back({std::move(word), std::move(s), r, sign});
            }
        }
    return out;
}

struct Node {
    Code word;
    std::size_t factors;
    long parent;
    CertificateFactor factor;
};

} // namespace

std::optional<ConsequenceCertificate> search_certificate(const Word& w, const Presentation& p,
                                                         const SearchBounds& bounds) {
    if (!same_alphabet(w.alphabet(), p.alphabet()))
        throw std::invalid_argument("alphabet mismatch");
    if (p.alphabet()->size() > 30000)
        throw std::invalid_argument("alphabet too large for certificate search");
    if (w.is_identity())
        return ConsequenceCertificate{};
    const std::vector<Rotation> rots = rotations(p);
    if (rots.empty())
        return std::nullopt;
    std::size_t max_len = 0;
    for (const auto& r : rots)
        max_len = std::max(max_len, r.word.size());
    const std::size_t codes = 2 * p.alphabet()->size();
    std::vector<std::vector<std::size_t>> by_first(codes), by_last(codes);
    for (std::size_t i = 0; i < rots.size(); ++i) {
        by_first[rots[i].word.front()].push_back(i);
        by_last[rots[i].word.back()].push_back(i);
    }
    auto lower_bound = [&](std::size_t len) { return (len + max_len - 1) / max_len; };

    std::vector<Node> nodes;
    std::unordered_map<Code, std::size_t> best; // word -> fewest factors seen
    using Key = std::tuple<std::size_t, std::size_t, std::size_t>; // f, |w|, node id
    std::priority_queue<Key, std::vector<Key>, std::greater<Key>> open;

    nodes.push_back({encode(w), 0, -1, {}});
    best.emplace(nodes[0].word, 0);
    open.emplace(lower_bound(nodes[0].word.size()), nodes[0].word.size(), 0);

    std::size_t expanded = 0;
    while (!open.empty()) {
        auto [f, len, id] = open.top();
        open.pop();
        const Node node = nodes[id];
        if (best.at(node.word) < node.factors)
            continue;
        if (node.word.empty()) {
            ConsequenceCertificate cert;
            for (long at = static_cast<long>(id); nodes[static_cast<std::size_t>(at)].parent >= 0;
                 at = nodes[static_cast<std::size_t>(at)].parent)
                cert.push_back(nodes[static_cast<std::size_t>(at)].factor);
            std::reverse(cert.begin(), cert.end());
            if (!verify_certificate(p, w, cert))
                throw std::logic_error("certificate search produced an invalid certificate");
            return cert;
        }
        if (++expanded > bounds.node_budget)
            return std::nullopt;
        if (node.factors + 1 > bounds.factors)
            continue;

        const Code& cur = node.word;
        for (std::size_t gap = 0; gap <= cur.size(); ++gap) {
            auto try_rotation = [&](std::size_t ri) {
                const Rotation& rot = rots[ri];
                // conjugator u = w[:gap] s^-1
                Code u = cur.substr(0, gap);
                {
                    Code tmp;
                    for (char16_t x : u)
                        push_reduced(tmp, x);
                    for (char16_t x : inverse(rot.s))
                        push_reduced(tmp, x);
                    u = std::move(tmp);
                }
                if (u.size() > bounds.conjugator_length)
                    return;
                Code next = cur.substr(0, gap);
                for (char16_t x : rot.word)
                    push_reduced(next, x);
                for (std::size_t i = gap; i < cur.size(); ++i)
                    push_reduced(next, cur[i]);
                const std::size_t g = node.factors + 1;
                const std::size_t h = lower_bound(next.size());
                if (g + h > bounds.factors)
                    return;
                auto it = best.find(next);
                if (it != best.end() && it->second <= g)
                    return;
                best[next] = g;
                nodes.push_back({next, g, static_cast<long>(id),
                                 {decode(p.alphabet(), u), rot.relator, -rot.sign}});
                open.emplace(g + h, next.size(), nodes.size() - 1);
            };
            if (gap > 0)
                for (std::size_t ri : by_first[cur[gap - 1] ^ 1])
                    try_rotation(ri);
            if (gap < cur.size())
                for (std::size_t ri : by_last[cur[gap] ^ 1]) {
                    if (gap > 0 && rots[ri].word.front() == (cur[gap - 1] ^ 1))
                        continue; // already tried above
                    try_rotation(ri);
                }
        }
    }
    return std::nullopt;
}

std::optional<int> refute_in_nilpotent_quotient(const Word& w, const Presentation& p, int max_class,
                                                std::uint64_t step_limit) {
    if (max_class < 1)
        return std::nullopt;
    NilpotentQuotientEngine engine(p, NqOptions{step_limit});
    for (int c = 1; c <= max_class; ++c) {
        const bool grew = engine.extend();
        const NilpotentPresentation& np = engine.current();
        const int lw = leading_weight(np, element_in_quotient(np, w));
        if (lw != 0)
            return lw;
        if (!grew)
            break;
    }
    return std::nullopt;
}

ConsequenceResult is_consequence(const Word& w, const Presentation& p0,
                                 const std::optional<ConsequenceCertificate>& cert, const SearchBounds& bounds) {
    const Presentation p = p0.materialized();
    if (!same_alphabet(w.alphabet(), p.alphabet()))
        throw std::invalid_argument("alphabet mismatch");
    ConsequenceResult result;
    if (cert) {
        if (verify_certificate(p, w, *cert)) {
            result.verdict = Verdict::Verified;
            result.certificate = cert;
            result.detail = "supplied certificate verifies";
            return result;
        }
        result.detail = "supplied certificate does not multiply out to the word";
    } else if (auto found = search_certificate(w, p, bounds)) {
        result.verdict = Verdict::Verified;
        result.certificate = std::move(found);
        result.detail = "certificate with " + std::to_string(result.certificate->size()) + " factors";
        return result;
    } else {
        result.detail = "no certificate within bounds";
    }
    try {
        if (auto c = refute_in_nilpotent_quotient(w, p, bounds.refutation_class, bounds.nq_step_limit)) {
            result.verdict = Verdict::Refuted;
            result.refuting_class = *c;
            result.detail = "nontrivial in the class-" + std::to_string(*c) + " nilpotent quotient";
            return result;
        }
    } catch (const ResourceLimit& e) {
        result.detail += "; nilpotent quotient aborted: " + std::string(e.what());
    }
    result.verdict = Verdict::Unknown;
    return result;
}

} // namespace pvk
