#include "pvk/lie.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pvk {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--)
        r *= b;
    return r;
}

int mobius(std::uint64_t n) {
    int m = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return 0;
            m = -m;
        }
    return n > 1 ? -m : m;
}

void add_to(TensorElement& t, const LieWord& w, const Integer& c) {
    if (c == 0)
        return;
    auto [it, fresh] = t.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            t.erase(it);
    }
}

TensorElement tensor_product(const TensorElement& a, const TensorElement& b) {
    TensorElement out;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b)
            add_to(out, u + v, cu * cv);
    return out;
}

TensorElement commutator(const TensorElement& a, const TensorElement& b) {
    TensorElement out = tensor_product(a, b);
    for (const auto& [w, c] : tensor_product(b, a))
        add_to(out, w, -c);
    return out;
}

// Expansions of standard bracketings, shared across calls.
const TensorElement& lyndon_expansion(const LieWord& w) {
    static std::unordered_map<LieWord, TensorElement> cache;
    static std::mutex m;
    {
        std::lock_guard lock(m);
        if (auto it = cache.find(w); it != cache.end())
            return it->second;
    }
    TensorElement t;
    if (w.size() == 1) {
        t.emplace(w, 1);
    } else {
        auto [u, v] = standard_factorization(w);
        t = commutator(lyndon_expansion(u), lyndon_expansion(v));
    }
    std::lock_guard lock(m);
    return cache.emplace(w, std::move(t)).first->second;
}

void check_gen(std::size_t n, std::size_t g) {
    if (g >= n)
        throw std::out_of_range("generator index out of range");
    if (n > 255)
        throw std::invalid_argument("too many generators");
}

} // namespace

std::uint64_t witt_number(std::uint64_t n, std::uint64_t d) {
    if (d == 0)
        return 0;
    std::int64_t s = 0;
    for (std::uint64_t k = 1; k <= d; ++k)
        if (d % k == 0)
            s += mobius(k) * static_cast<std::int64_t>(ipow(n, d / k));
    return static_cast<std::uint64_t>(s) / d;
}

bool is_lyndon(const LieWord& w) {
    if (w.empty())
        return false;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w.substr(i) + w.substr(0, i) <= w)
            return false;
    return true;
}

std::pair<LieWord, LieWord> standard_factorization(const LieWord& w) {
    if (w.size() < 2 || !is_lyndon(w))
        throw std::invalid_argument("standard factorization needs a Lyndon word of length >= 2");
    for (std::size_t i = 1; i < w.size(); ++i)
        if (is_lyndon(w.substr(i)))
            return {w.substr(0, i), w.substr(i)};
    throw std::logic_error("Lyndon word without Lyndon suffix");
}

std::string HallBasisElement::to_string(const std::vector<std::string>& names) const {
    if (word.size() == 1)
        return names.at(static_cast<unsigned char>(word[0]));
    auto [u, v] = standard_factorization(word);
    return "[" + HallBasisElement{u}.to_string(names) + "," + HallBasisElement{v}.to_string(names) + "]";
}

std::vector<HallBasisElement> hall_basis(std::size_t num_gens, std::size_t degree) {
    if (degree < 1)
        throw std::invalid_argument("hall_basis needs degree >= 1");
    std::vector<HallBasisElement> out;
    if (num_gens == 0)
        return out;
    if (num_gens > 255)
        throw std::invalid_argument("too many generators");
    // Duval's generation of Lyndon words of length <= degree, in lex order
    LieWord w(1, 0);
    const char last = static_cast<char>(num_gens - 1);
    while (!w.empty()) {
        if (w.size() == degree)
            out.push_back({w});
        const std::size_t m = w.size();
        while (w.size() < degree)
            w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == last)
            w.pop_back();
        if (!w.empty())
            ++w.back();
    }
    return out;
}

// ---------------------------------------------------------------------------

LieElement LieElement::generator(std::size_t num_gens, std::size_t g) {
    check_gen(num_gens, g);
    LieElement e(num_gens);
    e.coeffs_.emplace(LieWord(1, static_cast<char>(g)), 1);
    return e;
}

LieElement LieElement::basis(std::size_t num_gens, const LieWord& lyndon) {
    if (!is_lyndon(lyndon))
        throw std::invalid_argument("not a Lyndon word");
    for (char c : lyndon)
        check_gen(num_gens, static_cast<unsigned char>(c));
    LieElement e(num_gens);
    e.coeffs_.emplace(lyndon, 1);
    return e;
}

LieElement LieElement::from_tensor(std::size_t num_gens, TensorElement t) {
    // The standard bracketing of a Lyndon word w is w plus larger words, so
    // the smallest surviving word always names the next basis element.
    LieElement e(num_gens);
    while (!t.empty()) {
        const LieWord w = t.begin()->first;
        const Integer c = t.begin()->second;
        if (!is_lyndon(w))
            throw std::invalid_argument("tensor is not a Lie polynomial");
        e.add(w, c);
        for (const auto& [u, cu] : lyndon_expansion(w))
            add_to(t, u, -c * cu);
    }
    return e;
}

std::size_t LieElement::homogeneous_degree() const {
    if (coeffs_.empty())
        return 0;
    const std::size_t d = coeffs_.begin()->first.size();
    for (const auto& [w, c] : coeffs_)
        if (w.size() != d)
            return 0;
    return d;
}

TensorElement LieElement::expand() const {
    TensorElement t;
    for (const auto& [w, c] : coeffs_)
        for (const auto& [u, cu] : lyndon_expansion(w))
            add_to(t, u, c * cu);
    return t;
}

void LieElement::add(const LieWord& w, const Integer& c) { add_to(coeffs_, w, c); }

LieElement& LieElement::operator+=(const LieElement& o) {
    if (o.n_ != n_)
        throw std::invalid_argument("generator set mismatch");
    for (const auto& [w, c] : o.coeffs_)
        add(w, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    if (o.n_ != n_)
        throw std::invalid_argument("generator set mismatch");
    for (const auto& [w, c] : o.coeffs_)
        add(w, -c);
    return *this;
}

LieElement LieElement::operator+(const LieElement& o) const {
    LieElement r = *this;
    return r += o;
}

LieElement LieElement::operator-(const LieElement& o) const {
    LieElement r = *this;
    return r -= o;
}

LieElement LieElement::operator-() const { return LieElement(n_) - *this; }

LieElement LieElement::operator*(const Integer& k) const {
    LieElement r(n_);
    if (k != 0)
        for (const auto& [w, c] : coeffs_)
            r.coeffs_.emplace(w, c * k);
    return r;
}

std::string LieElement::to_string(const std::vector<std::string>& names) const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : coeffs_) {
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        if (abs(c) != 1)
            out << abs(c) << ' ';
        out << HallBasisElement{w}.to_string(names);
    }
    return out.str();
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    if (x.num_gens() != y.num_gens())
        throw std::invalid_argument("generator set mismatch");
    return LieElement::from_tensor(x.num_gens(), commutator(x.expand(), y.expand()));
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> ranks_of(const std::vector<DegreeData>& data) {
    std::vector<std::size_t> out;
    for (const auto& d : data)
        out.push_back(d.rank);
    return out;
}

namespace {

void check_relations(std::size_t n, const std::vector<LieElement>& relations) {
    for (const auto& r : relations) {
        if (r.num_gens() != n)
            throw std::invalid_argument("relation over a different generator set");
        if (!r.is_zero() && r.homogeneous_degree() == 0)
            throw std::invalid_argument("inhomogeneous relation");
    }
}

// Lattice of the degree-d ideal component in Lyndon coordinates; fills `rows`
// with a reduced spanning set for the next degree.
struct LieIdealBuilder {
    std::size_t n;
    const std::vector<LieElement>& relations;
    std::vector<LieElement> current; // spanning set of the current degree
    std::size_t degree = 0;

    EchelonLattice step(std::vector<LieWord>& basis_words) {
        ++degree;
        std::vector<LieElement> spanning;
        for (const auto& v : current)
            for (std::size_t g = 0; g < n; ++g) {
                LieElement b = bracket(v, LieElement::generator(n, g));
                if (!b.is_zero())
                    spanning.push_back(std::move(b));
            }
        for (const auto& r : relations)
            if (r.homogeneous_degree() == degree)
                spanning.push_back(r);

        basis_words.clear();
        for (const auto& h : hall_basis(n, degree))
            basis_words.push_back(h.word);
        std::map<LieWord, std::size_t> index;
        for (std::size_t i = 0; i < basis_words.size(); ++i)
            index[basis_words[i]] = i;

        EchelonLattice lat(basis_words.size());
        for (const auto& e : spanning) {
            SparseVector v;
            for (const auto& [w, c] : e.coefficients())
                v.emplace_back(index.at(w), c);
            std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            lat.insert(std::move(v));
        }
        current.clear();
        for (const auto& row : lat.reduced_rows()) {
            LieElement e(n);
            for (const auto& [i, c] : row)
                e += LieElement::basis(n, basis_words[i]) * c;
            current.push_back(std::move(e));
        }
        return lat;
    }
};

} // namespace

IntMatrix lie_ideal_component(std::size_t num_gens, const std::vector<LieElement>& relations, std::size_t d) {
    check_relations(num_gens, relations);
    LieIdealBuilder b{num_gens, relations, {}};
    std::vector<LieWord> words;
    EchelonLattice lat(0);
    for (std::size_t k = 1; k <= d; ++k)
        lat = b.step(words);
    return lat.to_matrix();
}

std::vector<DegreeData> lie_quotient_dims(std::size_t num_gens, const std::vector<LieElement>& relations,
                                          std::size_t max_degree) {
    check_relations(num_gens, relations);
    if (max_degree > 5)
        throw std::invalid_argument("lie_quotient_dims supports degree <= 5");
    LieIdealBuilder b{num_gens, relations, {}};
    std::vector<DegreeData> out;
    std::vector<LieWord> words;
    for (std::size_t d = 1; d <= max_degree; ++d) {
        EchelonLattice lat = b.step(words);
        out.push_back({d, words.size() - lat.rank(), lat.quotient_torsion()});
    }
    return out;
}

std::vector<DegreeData> enveloping_dims(std::size_t num_gens, const std::vector<LieElement>& relations,
                                        std::size_t max_degree) {
    check_relations(num_gens, relations);
    if (max_degree > 4)
        throw std::invalid_argument("enveloping_dims supports degree <= 4");
    for (const auto& r : relations)
        if (!r.is_zero() && r.homogeneous_degree() != 2)
            throw std::invalid_argument("enveloping_dims needs quadratic relations");

    // Words of length d indexed in base n.
    auto index_of = [&](const LieWord& w) {
        std::size_t i = 0;
        for (char c : w)
            i = i * num_gens + static_cast<unsigned char>(c);
        return i;
    };
    auto word_of = [&](std::size_t i, std::size_t d) {
        LieWord w(d, 0);
        for (std::size_t k = d; k-- > 0;) {
            w[k] = static_cast<char>(i % num_gens);
            i /= num_gens;
        }
        return w;
    };

    std::vector<DegreeData> out;
    out.push_back({0, 1, {}});
    std::vector<TensorElement> prev; // reduced spanning set of I_{d-1}
    for (std::size_t d = 1; d <= max_degree; ++d) {
        const std::size_t dim = static_cast<std::size_t>(ipow(num_gens, d));
        std::vector<TensorElement> spanning;
        for (const auto& v : prev)
            for (std::size_t g = 0; g < num_gens; ++g) {
                const LieWord x(1, static_cast<char>(g));
                TensorElement left, right;
                for (const auto& [w, c] : v) {
                    left.emplace(x + w, c);
                    right.emplace(w + x, c);
                }
                spanning.push_back(std::move(left));
                spanning.push_back(std::move(right));
            }
        if (d == 2)
            for (const auto& r : relations)
                if (!r.is_zero())
                    spanning.push_back(r.expand());
        EchelonLattice lat(dim);
        for (const auto& t : spanning) {
            SparseVector v;
            for (const auto& [w, c] : t)
                v.emplace_back(index_of(w), c);
            std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            lat.insert(std::move(v));
        }
        out.push_back({d, dim - lat.rank(), lat.quotient_torsion()});
        prev.clear();
        for (const auto& row : lat.reduced_rows()) {
            TensorElement t;
            for (const auto& [i, c] : row)
                t.emplace(word_of(i, d), c);
            prev.push_back(std::move(t));
        }
    }
    return out;
}

std::vector<Integer> pbw_series(const std::vector<std::size_t>& lie_dims, std::size_t max_degree) {
    std::vector<Integer> s(max_degree + 1);
    s[0] = 1;
    for (std::size_t k = 1; k <= lie_dims.size() && k <= max_degree; ++k) {
        // multiply by (1 - t^k)^(-l) = sum_m C(l+m-1, m) t^{km}
        const std::size_t l = lie_dims[k - 1];
        std::vector<Integer> next(max_degree + 1);
        for (std::size_t m = 0; k * m <= max_degree; ++m) {
            Integer c;
            if (l == 0)
                c = m == 0 ? 1 : 0;
            else
                mpz_bin_uiui(c.get_mpz_t(), l + m - 1, m);
            if (c == 0)
                continue;
            for (std::size_t i = 0; i + k * m <= max_degree; ++i)
                next[i + k * m] += c * s[i];
        }
        s = std::move(next);
    }
    return s;
}

bool pbw_consistency(const std::vector<std::size_t>& lie_dims, const std::vector<std::size_t>& env_dims) {
    if (env_dims.size() != lie_dims.size() + 1)
        throw std::invalid_argument("pbw_consistency needs l_1..l_D and u_0..u_D");
    const auto s = pbw_series(lie_dims, lie_dims.size());
    for (std::size_t d = 0; d < env_dims.size(); ++d)
        if (s[d] != env_dims[d])
            return false;
    return true;
}

// ---------------------------------------------------------------------------

std::vector<std::string> pv3_lie_names() { return {"A1", "B1", "A2", "B2", "C1", "C2"}; }

namespace {

std::vector<LieElement> lie_relations(std::size_t n) {
    auto g = [n](std::size_t i) { return LieElement::generator(n, i); };
    const LieElement A1 = g(0), B1 = g(1), A2 = g(2), B2 = g(3), C1 = g(4);
    return {
        bracket(A1, B1),
        bracket(A2, B2),
        bracket(C1, B1) - bracket(A2, B1),
        bracket(C1, A1) - bracket(B2, A1),
        bracket(C1, B2) - bracket(A1, B2),
        bracket(C1, A2) - bracket(B1, A2),
    };
}

// Extends d on generators to a derivation of the tensor algebra.
LieElement apply_derivation(const LieElement& x, const std::vector<LieElement>& images) {
    TensorElement out;
    std::vector<TensorElement> img;
    for (const auto& e : images)
        img.push_back(e.expand());
    for (const auto& [w, c] : x.expand())
        for (std::size_t i = 0; i < w.size(); ++i) {
            TensorElement left{{w.substr(0, i), c}}, right{{w.substr(i + 1), 1}};
            for (const auto& [u, cu] : tensor_product(tensor_product(left, img.at(static_cast<unsigned char>(w[i]))), right))
                add_to(out, u, cu);
        }
    return LieElement::from_tensor(x.num_gens(), std::move(out));
}

bool in_lattice(const IntMatrix& rows, std::size_t n, const LieElement& e) {
    const std::size_t d = e.homogeneous_degree();
    if (e.is_zero())
        return true;
    std::map<LieWord, std::size_t> index;
    const auto basis = hall_basis(n, d);
    for (std::size_t i = 0; i < basis.size(); ++i)
        index[basis[i].word] = i;
    EchelonLattice lat(basis.size());
    for (std::size_t r = 0; r < rows.rows(); ++r)
        lat.insert_dense(rows.row(r));
    SparseVector v;
    for (const auto& [w, c] : e.coefficients())
        v.emplace_back(index.at(w), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return lat.contains(v);
}

} // namespace

std::vector<LieElement> pv3_lie_relations() { return lie_relations(6); }
std::vector<LieElement> g3_lie_relations() { return lie_relations(5); }

DerivationReport derivation_check() {
    const std::size_t n = 4; // A1 B1 A2 B2
    auto g = [](std::size_t i) { return LieElement::generator(4, i); };
    const LieElement A1 = g(0), B1 = g(1), A2 = g(2), B2 = g(3);
    const std::vector<LieElement> images = {bracket(B2, A1), bracket(A2, B1), bracket(B1, A2), bracket(A1, B2)};
    const std::vector<LieElement> relations = {bracket(A1, B1), bracket(A2, B2)};

    DerivationReport rep;
    rep.d_a1b1 = apply_derivation(relations[0], images);
    rep.d_a2b2 = apply_derivation(relations[1], images);
    const IntMatrix ideal3 = lie_ideal_component(n, relations, 3);
    rep.a1b1_in_ideal = in_lattice(ideal3, n, rep.d_a1b1);
    rep.a2b2_in_ideal = in_lattice(ideal3, n, rep.d_a2b2);

    // [C1, x] - d(x) must be among the defining relations of the six-generator ring
    const auto pv = pv3_lie_relations();
    const LieElement C1 = LieElement::generator(6, 4);
    rep.generator_images_match = true;
    for (std::size_t x = 0; x < 4; ++x) {
        LieElement dx(6);
        for (const auto& [w, c] : images[x].coefficients())
            dx += LieElement::basis(6, w) * c;
        const LieElement r = bracket(C1, LieElement::generator(6, x)) - dx;
        if (std::find(pv.begin(), pv.end(), r) == pv.end())
            rep.generator_images_match = false;
    }
    return rep;
}

} // namespace pvk
