#include "pvk/grcohom.hpp"
#include "pvk/fpres.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pvk {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n)
        return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::vector<std::vector<std::size_t>> exterior_monomials(std::size_t m, std::size_t d) {
    std::vector<std::vector<std::size_t>> out;
    if (d > m)
        return out;
    std::vector<std::size_t> cur(d);
    for (std::size_t i = 0; i < d; ++i)
        cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = d;
        while (i > 0 && cur[i - 1] == m - d + i - 1)
            --i;
        if (i == 0)
            break;
        ++cur[i - 1];
        for (std::size_t j = i; j < d; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::size_t pair_index(std::size_t m, std::size_t p, std::size_t q) {
    if (p >= q || q >= m)
        throw std::invalid_argument("pair_index needs p < q < m");
    // pairs (0,1) .. (0,m-1), (1,2) ..
    return p * (2 * m - p - 1) / 2 + (q - p - 1);
}

IntVector wedge_term(std::size_t m, std::size_t p, std::size_t q, long coef) {
    IntVector v(binomial(m, 2));
    if (p == q)
        return v;
    if (p < q)
        v[pair_index(m, p, q)] = coef;
    else
        v[pair_index(m, q, p)] = -coef;
    return v;
}

IntVector wedge(const IntVector& u, const IntVector& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("dimension mismatch");
    const std::size_t m = u.size();
    IntVector out(binomial(m, 2));
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = p + 1; q < m; ++q)
            out[pair_index(m, p, q)] = u[p] * v[q] - u[q] * v[p];
    return out;
}

IntMatrix wedge2_map(const IntMatrix& map) {
    const std::size_t n = map.rows(), m = map.cols();
    IntMatrix out(binomial(n, 2), binomial(m, 2));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            IntVector w = wedge(map.row(p), map.row(q));
            const std::size_t r = pair_index(n, p, q);
            for (std::size_t c = 0; c < w.size(); ++c)
                out(r, c) = w[c];
        }
    return out;
}

// ---------------------------------------------------------------------------

ExteriorQuotient::ExteriorQuotient(std::vector<std::string> names, std::vector<IntVector> relations)
    : names_(std::move(names)), relations_(std::move(relations)) {
    const std::size_t dim = binomial(names_.size(), 2);
    for (const auto& r : relations_)
        if (r.size() != dim)
            throw std::invalid_argument("relation has wrong dimension");
}

IntMatrix ExteriorQuotient::ideal_component(std::size_t d) const {
    const std::size_t m = names_.size();
    const auto monos = exterior_monomials(m, d);
    IntMatrix out(0, monos.size());
    if (d < 2 || monos.empty())
        return out;
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t i = 0; i < monos.size(); ++i)
        index[monos[i]] = i;
    const auto pairs = exterior_monomials(m, 2);
    for (const auto& rel : relations_)
        for (const auto& s : exterior_monomials(m, d - 2)) {
            IntVector row(monos.size());
            for (std::size_t t = 0; t < pairs.size(); ++t) {
                if (rel[t] == 0)
                    continue;
                const std::size_t p = pairs[t][0], q = pairs[t][1];
                if (std::find(s.begin(), s.end(), p) != s.end() || std::find(s.begin(), s.end(), q) != s.end())
                    continue;
                std::vector<std::size_t> seq = {p, q};
                seq.insert(seq.end(), s.begin(), s.end());
                int inversions = 0;
                for (std::size_t a = 0; a < seq.size(); ++a)
                    for (std::size_t b = a + 1; b < seq.size(); ++b)
                        if (seq[a] > seq[b])
                            ++inversions;
                std::sort(seq.begin(), seq.end());
                const std::size_t k = index.at(seq);
                if (inversions % 2)
                    row[k] -= rel[t];
                else
                    row[k] += rel[t];
            }
            out.append_row(row);
        }
    return out;
}

GradedPiece ExteriorQuotient::piece(std::size_t d) const {
    GradedPiece g;
    g.degree = d;
    const std::size_t dim = binomial(names_.size(), d);
    EchelonLattice lat(dim);
    const IntMatrix ideal = ideal_component(d);
    for (std::size_t r = 0; r < ideal.rows(); ++r)
        lat.insert_dense(ideal.row(r));
    g.relation_rank = lat.rank();
    g.rank = dim - lat.rank();
    g.torsion = lat.quotient_torsion();
    return g;
}

std::vector<GradedPiece> ExteriorQuotient::pieces(std::size_t max_degree) const {
    std::vector<GradedPiece> out;
    for (std::size_t d = 0; d <= max_degree; ++d)
        out.push_back(piece(d));
    return out;
}

std::vector<std::size_t> ExteriorQuotient::ranks(std::size_t max_degree) const {
    std::vector<std::size_t> out;
    for (const auto& g : pieces(max_degree))
        out.push_back(g.rank);
    return out;
}

bool ExteriorQuotient::in_relation_span(const IntVector& element) const {
    EchelonLattice lat(binomial(names_.size(), 2));
    for (const auto& r : relations_)
        lat.insert_dense(r);
    return lat.contains(to_sparse(element));
}

std::string ExteriorQuotient::to_string(const IntVector& element, std::size_t degree) const {
    const auto monos = exterior_monomials(names_.size(), degree);
    if (element.size() != monos.size())
        throw std::invalid_argument("element has wrong dimension");
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        if (element[i] == 0)
            continue;
        Integer c = element[i];
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        if (abs(c) != 1)
            out << abs(c) << ' ';
        for (std::size_t j = 0; j < monos[i].size(); ++j)
            out << (j ? "^" : "") << names_[monos[i][j]];
    }
    return first ? "0" : out.str();
}

// ---------------------------------------------------------------------------

std::vector<std::string> torus5_names() { return {"a1", "b1", "a2", "b2", "c1"}; }

std::size_t SurfaceWedgeModel::h1_index(const std::string& name) const {
    auto it = std::find(h1_names.begin(), h1_names.end(), name);
    if (it == h1_names.end())
        throw std::invalid_argument("unknown degree-1 class " + name);
    return static_cast<std::size_t>(it - h1_names.begin());
}

std::size_t SurfaceWedgeModel::h2_index(const std::string& name) const {
    auto it = std::find(h2_names.begin(), h2_names.end(), name);
    if (it == h2_names.end())
        throw std::invalid_argument("unknown degree-2 class " + name);
    return static_cast<std::size_t>(it - h2_names.begin());
}

IntVector SurfaceWedgeModel::cup(std::size_t p, std::size_t q) const {
    IntVector out(h2_rank());
    if (p >= h1_rank() || q >= h1_rank())
        throw std::out_of_range("class index");
    if (piece_of[p] != piece_of[q])
        return out;
    std::size_t start = 0;
    while (piece_of[start] != piece_of[p])
        ++start;
    // symplectic pairs (0,1) and (2,3) within a piece
    const std::size_t i = p - start, j = q - start;
    if (i / 2 != j / 2 || i == j)
        return out;
    out[piece_of[p]] = i < j ? 1 : -1;
    return out;
}

IntVector SurfaceWedgeModel::cup(const IntVector& u, const IntVector& v) const {
    IntVector out(h2_rank());
    for (std::size_t p = 0; p < h1_rank(); ++p) {
        if (u[p] == 0)
            continue;
        for (std::size_t q = 0; q < h1_rank(); ++q) {
            if (v[q] == 0)
                continue;
            IntVector c = cup(p, q);
            for (std::size_t k = 0; k < out.size(); ++k)
                out[k] += u[p] * v[q] * c[k];
        }
    }
    return out;
}

SurfaceWedgeModel build_wedge_model() {
    SurfaceWedgeModel m;
    m.torus_alphabet = Alphabet::make(torus5_names());
    auto g = [&](const char* name) { return Word::generator(m.torus_alphabet, name); };
    const Word a1 = g("a1"), b1 = g("b1"), a2 = g("a2"), b2 = g("b2"), c1 = g("c1");
    m.pieces = {
        {WedgePiece::Torus, {a1, b1}, "X1"},
        {WedgePiece::Torus, {a2, b2}, "X2"},
        {WedgePiece::Genus2, {b1, c1, a2, b1}, "X3"},
        {WedgePiece::Genus2, {a1, c1, b2, a1}, "X4"},
        {WedgePiece::Genus2, {b2, c1, a1 * b2, b2}, "X5"},
        {WedgePiece::Genus2, {a2, c1, b1 * a2, a2}, "X6"},
    };
    int torus = 0, surface = 0;
    for (std::size_t k = 0; k < m.pieces.size(); ++k) {
        if (m.pieces[k].kind == WedgePiece::Torus) {
            const std::string x1 = "x" + std::to_string(2 * torus + 1), x2 = "x" + std::to_string(2 * torus + 2);
            m.h1_names.insert(m.h1_names.end(), {x1, x2});
            m.h2_names.push_back(x1 + x2);
            ++torus;
        } else {
            const std::string i = std::to_string(++surface);
            m.h1_names.insert(m.h1_names.end(), {"y" + i + "1", "z" + i + "1", "y" + i + "2", "z" + i + "2"});
            m.h2_names.push_back("y" + i + "1z" + i + "1");
        }
        m.piece_of.resize(m.h1_names.size(), k);
    }
    return m;
}

IntMatrix theta_lower(const SurfaceWedgeModel& model) {
    IntMatrix out(model.h1_rank(), model.torus_alphabet->size());
    std::size_t r = 0;
    for (const auto& piece : model.pieces)
        for (const Word& w : piece.labels) {
            auto sums = w.exponent_sums();
            for (std::size_t c = 0; c < sums.size(); ++c)
                out(r, c) = sums[c];
            ++r;
        }
    return out;
}

IntMatrix theta_upper(const SurfaceWedgeModel& model) { return theta_lower(model).transpose(); }

IntMatrix theta_lower_table() {
    // columns a1 b1 a2 b2 c1
    return IntMatrix{
        {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, // x1..x4
        {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 1, 0, 0}, {0, 1, 0, 0, 0}, // y11 z11 y12 z12
        {1, 0, 0, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}, {1, 0, 0, 0, 0}, // y21 z21 y22 z22
        {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}, {1, 0, 0, 1, 0}, {0, 0, 0, 1, 0}, // y31 z31 y32 z32
        {0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}, {0, 1, 1, 0, 0}, {0, 0, 1, 0, 0}, // y41 z41 y42 z42
    };
}

IntMatrix theta_upper_table() {
    // x1 x2 x3 x4 | y11 z11 y12 z12 | y21 z21 y22 z22 | y31 z31 y32 z32 | y41 z41 y42 z42
    return IntMatrix{
        {1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0}, // a1*
        {0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0}, // b1*
        {0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1}, // a2*
        {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 0, 0}, // b2*
        {0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0}, // c1*
    };
}

std::vector<CupTableEntry> cup_product_table() {
    return {
        {"a1", "b1", "x1x2"},    {"a2", "b2", "x3x4"},    {"a1", "c1", "y21z21"},
        {"b1", "c1", "y11z11"},  {"a2", "c1", "y41z41"},  {"b2", "c1", "y31z31"},
    };
}

IntVector pullback_cup(const SurfaceWedgeModel& model, std::size_t u, std::size_t v) {
    const IntMatrix t = theta_upper(model);
    return model.cup(t.row(u), t.row(v));
}

namespace {

IntMatrix cup_map(const SurfaceWedgeModel& model) {
    const std::size_t n = model.h1_rank();
    IntMatrix out(binomial(n, 2), model.h2_rank());
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            IntVector c = model.cup(p, q);
            for (std::size_t k = 0; k < c.size(); ++k)
                out(pair_index(n, p, q), k) = c[k];
        }
    return out;
}

} // namespace

IntMatrix theta_degree2(const SurfaceWedgeModel& model) {
    return wedge2_map(theta_upper(model)) * cup_map(model);
}

IntVector pullback_cup_minors(const SurfaceWedgeModel& model, std::size_t u, std::size_t v) {
    const std::size_t m = model.torus_alphabet->size();
    IntVector out(model.h2_rank());
    if (u == v)
        return out;
    const IntMatrix d2 = theta_degree2(model);
    out = d2.row(pair_index(m, std::min(u, v), std::max(u, v)));
    if (u > v)
        for (auto& x : out)
            x = -x;
    return out;
}

std::vector<CupTerm> pullback_cup_terms(const SurfaceWedgeModel& model, std::size_t u, std::size_t v) {
    const IntMatrix t = theta_upper(model);
    std::vector<CupTerm> out;
    for (std::size_t p = 0; p < model.h1_rank(); ++p)
        for (std::size_t q = 0; q < model.h1_rank(); ++q) {
            if (t(u, p) == 0 || t(v, q) == 0)
                continue;
            IntVector c = model.cup(p, q);
            if (std::all_of(c.begin(), c.end(), [](const Integer& x) { return x == 0; }))
                continue;
            out.push_back({p, q, t(u, p) * t(v, q)});
        }
    return out;
}

IntMatrix g3_theta_kernel() { return left_kernel_basis(theta_degree2(build_wedge_model())); }

std::vector<IntVector> g3_relations() {
    // a1 b1 a2 b2 c1 = 0 1 2 3 4
    auto t = [](std::size_t p, std::size_t q, long c = 1) { return wedge_term(5, p, q, c); };
    auto sum = [](std::initializer_list<IntVector> parts) {
        IntVector out(parts.begin()->size());
        for (const auto& v : parts)
            for (std::size_t i = 0; i < out.size(); ++i)
                out[i] += v[i];
        return out;
    };
    return {
        sum({t(0, 4), t(0, 3), t(4, 3)}), // a1c1 + a1b2 + c1b2
        sum({t(1, 4), t(1, 2), t(4, 2)}), // b1c1 + b1a2 + c1a2
        t(0, 2),                          // a1a2
        t(1, 3),                          // b1b2
    };
}

ExteriorQuotient g3_ring() { return ExteriorQuotient(torus5_names(), g3_relations()); }

// ---------------------------------------------------------------------------

std::vector<std::string> pv3_cohomology_names() { return {"l12", "l21", "l13", "l31", "l23", "l32"}; }
std::vector<std::string> g3z_cohomology_names() { return {"a1", "b1", "a2", "b2", "c1", "c2"}; }

IntMatrix delta_lower() {
    const GenMap g = pv3_new_generators().g;
    const auto rows = g3z_cohomology_names();
    const auto cols = pv3_cohomology_names();
    IntMatrix out(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Word img = g.apply(Word::generator(g.source(), rows[r]));
        auto sums = img.exponent_sums();
        for (std::size_t c = 0; c < cols.size(); ++c)
            out(r, c) = sums[g.target()->index(cols[c])];
    }
    return out;
}

IntMatrix delta_lower_table() {
    // columns l12 l21 l13 l31 l23 l32
    return IntMatrix{
        {0, 0, 1, 0, 1, 0}, // a1 = l13 + l23
        {1, 0, 1, 0, 0, 0}, // b1 = l13 + l12
        {0, 0, 0, 1, 0, 1}, // a2 = l32 + l31
        {0, 1, 0, 1, 0, 0}, // b2 = l21 + l31
        {0, 0, 1, 1, 0, 0}, // c1 = l13 + l31
        {0, 0, 1, 0, 0, 0}, // c2 = l13
    };
}

IntMatrix delta_upper_table() {
    // columns a1 b1 a2 b2 c1 c2
    return IntMatrix{
        {0, 1, 0, 0, 0, 0}, // l12*
        {0, 0, 0, 1, 0, 0}, // l21*
        {1, 1, 0, 0, 1, 1}, // l13*
        {0, 0, 1, 1, 1, 0}, // l31*
        {1, 0, 0, 0, 0, 0}, // l23*
        {0, 0, 1, 0, 0, 0}, // l32*
    };
}

IntMatrix delta_upper_inverse_table() {
    // columns l12 l21 l13 l31 l23 l32
    return IntMatrix{
        {0, 0, 0, 0, 1, 0},     // a1*
        {1, 0, 0, 0, 0, 0},     // b1*
        {0, 0, 0, 0, 0, 1},     // a2*
        {0, 1, 0, 0, 0, 0},     // b2*
        {0, -1, 0, 1, 0, -1},   // c1*
        {-1, 1, 1, -1, -1, 1},  // c2*
    };
}

DeltaCheck delta_matrices_check() {
    DeltaCheck c;
    c.lower_matches_table = delta_lower() == delta_lower_table();
    c.upper_is_transpose = delta_upper_table() == delta_lower().transpose();
    const IntMatrix u = delta_upper_table(), v = delta_upper_inverse_table();
    c.product_is_identity = u * v == IntMatrix::identity(6) && v * u == IntMatrix::identity(6);
    return c;
}

std::vector<IntVector> pv3_condition2_relations() {
    // l13 - l31 - (l12 - l21) - (l23 - l32)
    const IntVector w = {-1, 1, 1, -1, -1, 1};
    std::vector<IntVector> out;
    for (std::size_t g = 0; g < 6; ++g) {
        IntVector e(6);
        e[g] = 1;
        out.push_back(wedge(w, e));
    }
    return out;
}

std::vector<IntVector> pv3_relations() {
    // l12 l21 l13 l31 l23 l32 = 0 1 2 3 4 5
    std::vector<IntVector> out = {wedge_term(6, 0, 1), wedge_term(6, 2, 3), wedge_term(6, 4, 5)};
    for (auto& r : pv3_condition2_relations())
        out.push_back(std::move(r));
    // l21 l31 - l21 l32 - l23 l31
    IntVector r3(15);
    for (const auto& part : {wedge_term(6, 1, 3), wedge_term(6, 1, 5, -1), wedge_term(6, 4, 3, -1)})
        for (std::size_t i = 0; i < 15; ++i)
            r3[i] += part[i];
    out.push_back(r3);
    return out;
}

ExteriorQuotient pv3_ring() { return ExteriorQuotient(pv3_cohomology_names(), pv3_relations()); }

std::vector<IntVector> pv3_transported_relations() {
    // G_3 relations in a1 b1 a2 b2 c1, then extended by c2 (index 5)
    std::vector<IntVector> in6;
    const auto pairs5 = exterior_monomials(5, 2);
    for (const auto& r : g3_relations()) {
        IntVector v(15);
        for (std::size_t t = 0; t < pairs5.size(); ++t)
            v[pair_index(6, pairs5[t][0], pairs5[t][1])] = r[t];
        in6.push_back(v);
    }
    for (std::size_t x = 0; x < 5; ++x)
        in6.push_back(wedge_term(6, 5, x));
    const IntMatrix w = wedge2_map(delta_upper_inverse_table());
    std::vector<IntVector> out;
    for (const auto& v : in6) {
        IntVector img(15);
        for (std::size_t r = 0; r < 15; ++r)
            for (std::size_t c = 0; c < 15; ++c)
                img[c] += v[r] * w(r, c);
        out.push_back(img);
    }
    return out;
}

ExteriorQuotient pv3_ring_transported() {
    return ExteriorQuotient(pv3_cohomology_names(), pv3_transported_relations());
}

std::size_t relation_span_rank(const std::vector<IntVector>& relations) {
    if (relations.empty())
        return 0;
    return rank(IntMatrix::from_rows(relations, relations.front().size()));
}

bool same_span(const std::vector<IntVector>& a, const std::vector<IntVector>& b) {
    if (a.empty() || b.empty())
        return a.empty() && b.empty();
    return same_row_lattice(IntMatrix::from_rows(a, a.front().size()), IntMatrix::from_rows(b, b.front().size()));
}

Integer beer_rank(long n, long r) {
    if (n < 1 || r < 0)
        throw std::invalid_argument("beer_rank needs n >= 1 and r >= 0");
    if (r > n - 1)
        return 0;
    Integer b, f = 1;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n - 1), static_cast<unsigned long>(r));
    for (long k = n - r + 1; k <= n; ++k)
        f *= k;
    return b * f;
}

} // namespace pvk
