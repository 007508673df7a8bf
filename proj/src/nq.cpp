#include "pvk/nq.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace pvk {

namespace {

bool is_zero(const Exponents& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

// q = floor(a / m), r = a - q m
void floor_divmod(Integer& q, Integer& r, const Integer& a, const Integer& m) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
}

} // namespace

Exponents NilpotentPresentation::conjugate_relation(std::size_t j, std::size_t i) const {
    if (j <= i || j >= size())
        throw std::invalid_argument("conjugate_relation needs j > i");
    auto it = conj_.find({j, i});
    return it == conj_.end() ? generator(j) : it->second;
}

Exponents NilpotentPresentation::generator(std::size_t i, long e) const {
    if (i >= size())
        throw std::invalid_argument("generator index out of range");
    Exponents v = identity();
    mul_gen(v, i, Integer(e));
    return v;
}

void NilpotentPresentation::tick() const {
    if (++steps_ > step_limit_)
        throw ResourceLimit("collection exceeded " + std::to_string(step_limit_) + " steps");
}

void NilpotentPresentation::mul_into(Exponents& v, const Exponents& y) const {
    for (std::size_t j = 0; j < y.size(); ++j)
        if (y[j] != 0)
            mul_gen(v, j, y[j]);
}

// v <- v * a_k^e by collection from the left:
// (prefix a_k^v_k tail) a_k^e = prefix a_k^(v_k+e) tail^(a_k^e)
void NilpotentPresentation::mul_gen(Exponents& v, std::size_t k, const Integer& e) const {
    if (e == 0)
        return;
    tick();
    const std::size_t n = size();
    bool has_tail = false;
    for (std::size_t j = k + 1; j < n && !has_tail; ++j)
        has_tail = v[j] != 0;
    const bool finite = orders_[k] != 0;

    if (!has_tail || (acts_trivially_[k] && !finite)) {
        v[k] += e;
        if (finite && (v[k] < 0 || v[k] >= orders_[k])) {
            Integer q, r;
            floor_divmod(q, r, v[k], orders_[k]);
            v[k] = r;
            mul_into(v, power(powers_[k], q));
        }
        return;
    }

    Exponents tail(n);
    for (std::size_t j = k + 1; j < n; ++j)
        std::swap(tail[j], v[j]);
    v[k] += e;
    if (finite && (v[k] < 0 || v[k] >= orders_[k])) {
        Integer q, r;
        floor_divmod(q, r, v[k], orders_[k]);
        v[k] = r;
        mul_into(v, power(powers_[k], q));
    }
    if (!acts_trivially_[k])
        tail = conj_by_gen(tail, k, e);
    mul_into(v, tail);
}

Exponents NilpotentPresentation::conj_once(const Exponents& x, std::size_t k, bool inverse) const {
    const auto& table = inverse ? conj_inv_ : conj_;
    Exponents r = identity();
    for (std::size_t j = k + 1; j < x.size(); ++j) {
        if (x[j] == 0)
            continue;
        auto it = table.find({j, k});
        if (it == table.end())
            mul_gen(r, j, x[j]);
        else
            mul_into(r, power(it->second, x[j]));
    }
    return r;
}

// x^(a_k^e) for x supported above k
Exponents NilpotentPresentation::conj_by_gen(const Exponents& x, std::size_t k, const Integer& e) const {
    if (is_zero(x))
        return x;
    Exponents r = x;
    if (e > 0) {
        for (Integer i = 0; i < e; ++i)
            r = conj_once(r, k, false);
    } else if (orders_[k] == 0) {
        for (Integer i = 0; i < -e; ++i)
            r = conj_once(r, k, true);
    } else {
        Integer q, rem;
        floor_divmod(q, rem, e, orders_[k]);
        for (Integer i = 0; i < rem; ++i)
            r = conj_once(r, k, false);
        if (q != 0)
            r = conjugate(r, power(powers_[k], q));
    }
    return r;
}

Exponents NilpotentPresentation::multiply(const Exponents& x, const Exponents& y) const {
    Exponents v = x;
    mul_into(v, y);
    return v;
}

Exponents NilpotentPresentation::inverse(const Exponents& x) const {
    Exponents v = identity();
    for (std::size_t j = x.size(); j-- > 0;)
        if (x[j] != 0)
            mul_gen(v, j, -x[j]);
    return v;
}

Exponents NilpotentPresentation::power(const Exponents& x, const Integer& k) const {
    if (k == 0 || is_zero(x))
        return identity();
    if (k == 1)
        return x;
    Exponents base = k < 0 ? inverse(x) : x;
    Integer e = abs(k);
    // single generator: one collection step
    std::size_t nz = 0, last = 0;
    for (std::size_t j = 0; j < base.size(); ++j)
        if (base[j] != 0) {
            ++nz;
            last = j;
        }
    if (nz == 1) {
        Exponents v = identity();
        mul_gen(v, last, base[last] * e);
        return v;
    }
    Exponents result = identity();
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            result = multiply(result, base);
        e >>= 1;
        if (e > 0)
            base = multiply(base, base);
    }
    return result;
}

Exponents NilpotentPresentation::conjugate(const Exponents& x, const Exponents& g) const {
    return multiply(multiply(inverse(g), x), g);
}

Exponents NilpotentPresentation::commutator(const Exponents& x, const Exponents& y) const {
    return multiply(multiply(inverse(x), inverse(y)), multiply(x, y));
}

Exponents NilpotentPresentation::evaluate(const Word& w) const {
    if (!same_alphabet(w.alphabet(), input_alphabet_))
        throw std::invalid_argument("alphabet mismatch");
    Exponents v = identity();
    for (const Letter& l : w.letters())
        mul_into(v, l.inverted ? inverse(images_[l.gen]) : images_[l.gen]);
    return v;
}

void NilpotentPresentation::rebuild_inverse_conjugates() {
    const std::size_t n = size();
    acts_trivially_.assign(n, true);
    for (const auto& [key, value] : conj_)
        acts_trivially_[key.second] = false;
    conj_inv_.clear();
    // a_j^(a_k^-1) = a_j S with S = (T^-1)^(a_k^-1), where a_j^(a_k) = a_j T.
    for (std::size_t k = n; k-- > 0;) {
        if (orders_[k] != 0 || acts_trivially_[k])
            continue;
        for (std::size_t j = n; j-- > k + 1;) {
            auto it = conj_.find({j, k});
            if (it == conj_.end())
                continue;
            Exponents t = multiply(generator(j, -1), it->second);
            Exponents s = conj_by_gen(inverse(t), k, Integer(-1));
            Exponents d = multiply(generator(j), s);
            conj_inv_.emplace(std::pair{j, k}, std::move(d));
        }
    }
}

namespace {

// Calls f(name, lhs, rhs) for every overlap among the first `limit` generators.
void for_each_overlap(const NilpotentPresentation& np, std::size_t limit,
                      const std::function<void(const std::string&, const Exponents&, const Exponents&)>& f) {
    auto gen = [&](std::size_t i, long e = 1) { return np.generator(i, e); };
    auto name = [](const char* kind, std::size_t a, std::size_t b, std::size_t c = SIZE_MAX) {
        std::string s = std::string(kind) + "(" + std::to_string(a) + "," + std::to_string(b);
        if (c != SIZE_MAX)
            s += "," + std::to_string(c);
        return s + ")";
    };
    for (std::size_t i = 0; i < limit; ++i)
        for (std::size_t j = i + 1; j < limit; ++j) {
            const Exponents ji = np.multiply(gen(j), gen(i));
            for (std::size_t k = j + 1; k < limit; ++k)
                f(name("kji", k, j, i), np.multiply(np.multiply(gen(k), gen(j)), gen(i)), np.multiply(gen(k), ji));
        }
    for (std::size_t i = 0; i < limit; ++i) {
        const Integer& m = np.relative_order(i);
        if (m != 0) {
            const Exponents& p = np.power(i);
            f(name("ii", i, i), np.multiply(gen(i), p), np.multiply(p, gen(i)));
            for (std::size_t j = i + 1; j < limit; ++j) {
                Exponents rhs = np.multiply(np.multiply(gen(j), gen(i)), gen(i, m.get_si() - 1));
                f(name("jii", j, i), np.multiply(gen(j), p), rhs);
            }
        }
        for (std::size_t j = i + 1; j < limit; ++j) {
            const Integer& mj = np.relative_order(j);
            if (mj != 0) {
                Exponents rhs = np.multiply(gen(j, mj.get_si() - 1), np.multiply(gen(j), gen(i)));
                f(name("jji", j, i), np.multiply(np.power(j), gen(i)), rhs);
            }
            if (m == 0)
                f(name("jiinv", j, i), gen(j), np.multiply(np.multiply(gen(j), gen(i, -1)), gen(i)));
        }
    }
}

} // namespace

std::vector<std::string> NilpotentPresentation::consistency_failures() const {
    std::vector<std::string> failures;
    for_each_overlap(*this, size(), [&](const std::string& name, const Exponents& l, const Exponents& r) {
        if (l != r)
            failures.push_back(name);
    });
    return failures;
}

std::string NilpotentPresentation::to_string() const {
    std::ostringstream out;
    auto vec = [&](const Exponents& v) {
        std::ostringstream s;
        bool first = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0)
                continue;
            s << (first ? "" : " ") << 'a' << i;
            if (v[i] != 1)
                s << '^' << v[i].get_str();
            first = false;
        }
        return first ? std::string("1") : s.str();
    };
    out << "class " << class_ << ", " << size() << " generators\n";
    for (std::size_t i = 0; i < size(); ++i) {
        out << "a" << i << " weight " << weights_[i];
        if (orders_[i] != 0)
            out << " order " << orders_[i].get_str() << ", a" << i << "^" << orders_[i].get_str() << " = "
                << vec(powers_[i]);
        out << '\n';
    }
    for (const auto& [key, value] : conj_)
        out << "a" << key.first << "^a" << key.second << " = " << vec(value) << '\n';
    for (std::size_t x = 0; x < images_.size(); ++x)
        out << input_alphabet_->name(x) << " -> " << vec(images_[x]) << '\n';
    return out.str();
}

std::string to_string(const LayerData& d) {
    std::string s = "degree " + std::to_string(d.degree) + ": Z^" + std::to_string(d.rank);
    for (const auto& t : d.torsion)
        s += " + Z/" + t.get_str();
    return s;
}

// ---------------------------------------------------------------------------

NilpotentQuotientEngine::NilpotentQuotientEngine(const Presentation& p, NqOptions options)
    : presentation_(p.materialized()), options_(options) {
    np_.input_alphabet_ = presentation_.alphabet();
    np_.step_limit_ = options_.step_limit;
}

bool NilpotentQuotientEngine::extend() {
    if (stable_) {
        ++class_;
        np_.class_ = class_;
        ranks_.push_back({class_, 0, {}});
        return false;
    }
    if (class_ == 0)
        first_class();
    else
        next_class();
    return !stable_;
}

namespace {

// Layer of new generators obtained from Z^m modulo a relation lattice.
struct Layer {
    std::vector<std::size_t> survivors;        // columns that become generators
    std::vector<Integer> orders;               // per survivor
    std::vector<SparseVector> expressions;     // per column, in survivor coordinates
    std::vector<SparseVector> power_rows;      // per survivor: a^d = prod (survivor coords)
    LayerData data;
};

Layer quotient_layer(const EchelonLattice& lattice) {
    const std::size_t m = lattice.dim();
    Layer layer;
    auto rows = lattice.reduced_rows();
    std::vector<const SparseVector*> pivot_row(m, nullptr);
    for (const auto& r : rows)
        pivot_row[r.front().first] = &r;
    std::vector<std::size_t> new_index(m, SIZE_MAX);
    for (std::size_t c = 0; c < m; ++c)
        if (!pivot_row[c] || pivot_row[c]->front().second != 1) {
            new_index[c] = layer.survivors.size();
            layer.survivors.push_back(c);
            layer.orders.push_back(pivot_row[c] ? pivot_row[c]->front().second : Integer(0));
        }
    auto rest = [&](const SparseVector& row) {
        SparseVector e;
        for (std::size_t t = 1; t < row.size(); ++t) {
            const std::size_t c = row[t].first;
            if (new_index[c] == SIZE_MAX)
                throw std::logic_error("reduced row has an entry above a unit pivot");
            e.emplace_back(new_index[c], -row[t].second);
        }
        return e;
    };
    layer.expressions.resize(m);
    for (std::size_t c = 0; c < m; ++c) {
        if (new_index[c] != SIZE_MAX)
            layer.expressions[c] = {{new_index[c], Integer(1)}};
        else
            layer.expressions[c] = rest(*pivot_row[c]);
    }
    for (std::size_t s = 0; s < layer.survivors.size(); ++s) {
        const std::size_t c = layer.survivors[s];
        layer.power_rows.push_back(pivot_row[c] ? rest(*pivot_row[c]) : SparseVector{});
    }
    layer.data.rank = static_cast<std::size_t>(
        std::count_if(layer.orders.begin(), layer.orders.end(), [](const Integer& d) { return d == 0; }));
    layer.data.torsion = lattice.quotient_torsion();
    return layer;
}

// Reduces the coordinates offset.. of v (a central abelian layer) to normal form.
void normalize_layer(Exponents& v, std::size_t offset, const Layer& layer) {
    for (std::size_t s = 0; s < layer.survivors.size(); ++s) {
        const Integer& d = layer.orders[s];
        Integer& e = v[offset + s];
        if (d == 0 || (e >= 0 && e < d))
            continue;
        Integer q, r;
        floor_divmod(q, r, e, d);
        e = r;
        for (const auto& [t, x] : layer.power_rows[s])
            v[offset + t] += q * x;
    }
}

} // namespace

void NilpotentQuotientEngine::first_class() {
    const std::size_t g = presentation_.generator_count();
    EchelonLattice lattice(g);
    for (const Word& r : presentation_.relators()) {
        std::vector<Integer> row;
        for (long e : r.exponent_sums())
            row.emplace_back(e);
        lattice.insert_dense(row);
    }
    Layer layer = quotient_layer(lattice);
    const std::size_t n = layer.survivors.size();

    NilpotentPresentation& np = np_;
    np.weights_.assign(n, 1);
    np.orders_ = layer.orders;
    np.powers_.assign(n, Exponents(n));
    np.definitions_.clear();
    for (std::size_t s = 0; s < n; ++s) {
        np.definitions_.push_back({NilpotentPresentation::Definition::Image, layer.survivors[s], 0});
        for (const auto& [t, x] : layer.power_rows[s])
            np.powers_[s][t] += x;
        normalize_layer(np.powers_[s], 0, layer);
    }
    np.images_.assign(g, Exponents(n));
    for (std::size_t x = 0; x < g; ++x) {
        for (const auto& [t, c] : layer.expressions[x])
            np.images_[x][t] += c;
        normalize_layer(np.images_[x], 0, layer);
    }
    np.conj_.clear();
    np.rebuild_inverse_conjugates();
    class_ = 1;
    np.class_ = 1;
    layer.data.degree = 1;
    ranks_.push_back(layer.data);
    stable_ = n == 0;
}

void NilpotentQuotientEngine::next_class() {
    using Def = NilpotentPresentation::Definition;
    const NilpotentPresentation& old = np_;
    const std::size_t n = old.size();
    const int c = class_ + 1;

    std::set<std::pair<std::size_t, std::size_t>> def_conj;
    std::set<std::size_t> def_power, def_image;
    for (const Def& d : old.definitions_) {
        if (d.kind == Def::Conjugate)
            def_conj.insert({d.a, d.b});
        else if (d.kind == Def::Power)
            def_power.insert(d.a);
        else
            def_image.insert(d.a);
    }

    // One central tail per relation that is not a definition.
    std::vector<Def> sources;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (old.weights_[i] + old.weights_[j] <= c && !def_conj.count({j, i}))
                sources.push_back({Def::Conjugate, j, i});
    for (std::size_t i = 0; i < n; ++i)
        if (old.orders_[i] != 0 && !def_power.count(i))
            sources.push_back({Def::Power, i, 0});
    for (std::size_t x = 0; x < old.images_.size(); ++x)
        if (!def_image.count(x))
            sources.push_back({Def::Image, x, 0});
    const std::size_t s = sources.size();

    NilpotentPresentation ext = old;
    auto widen = [&](Exponents& v) { v.resize(n + s); };
    for (auto& p : ext.powers_)
        widen(p);
    for (auto& [key, value] : ext.conj_)
        widen(value);
    for (auto& img : ext.images_)
        widen(img);
    for (std::size_t t = 0; t < s; ++t) {
        ext.weights_.push_back(c);
        ext.orders_.push_back(0);
        ext.definitions_.push_back(sources[t]);
    }
    ext.powers_.resize(n + s, Exponents(n + s));
    for (std::size_t t = 0; t < s; ++t) {
        const Def& d = sources[t];
        if (d.kind == Def::Conjugate) {
            auto it = ext.conj_.find({d.a, d.b});
            if (it == ext.conj_.end()) {
                Exponents v(n + s);
                v[d.a] = 1;
                it = ext.conj_.emplace(std::pair{d.a, d.b}, std::move(v)).first;
            }
            it->second[n + t] += 1;
        } else if (d.kind == Def::Power) {
            ext.powers_[d.a][n + t] += 1;
        } else {
            ext.images_[d.a][n + t] += 1;
        }
    }
    ext.rebuild_inverse_conjugates();

    EchelonLattice lattice(s);
    auto add_relation = [&](const std::string& what, const Exponents& diff) {
        for (std::size_t i = 0; i < n; ++i)
            if (diff[i] != 0)
                throw std::logic_error("nilpotent quotient: " + what + " fails below the new layer");
        SparseVector v;
        for (std::size_t t = 0; t < s; ++t)
            if (diff[n + t] != 0)
                v.emplace_back(t, diff[n + t]);
        lattice.insert(std::move(v));
    };
    for_each_overlap(ext, n, [&](const std::string& name, const Exponents& l, const Exponents& r) {
        Exponents diff(n + s);
        for (std::size_t i = 0; i < n + s; ++i)
            diff[i] = l[i] - r[i];
        add_relation("overlap " + name, diff);
    });
    for (std::size_t r = 0; r < presentation_.relators().size(); ++r)
        add_relation("relator " + std::to_string(r + 1), ext.evaluate(presentation_.relators()[r]));

    Layer layer = quotient_layer(lattice);
    const std::size_t k = layer.survivors.size();
    layer.data.degree = c;
    ranks_.push_back(layer.data);
    class_ = c;
    if (k == 0) {
        stable_ = true;
        np_.class_ = c;
        return;
    }

    NilpotentPresentation next;
    next.input_alphabet_ = old.input_alphabet_;
    next.step_limit_ = old.step_limit_;
    next.steps_ = ext.steps_;
    next.class_ = c;
    next.weights_ = old.weights_;
    next.orders_ = old.orders_;
    next.definitions_ = old.definitions_;
    for (std::size_t t = 0; t < k; ++t) {
        next.weights_.push_back(c);
        next.orders_.push_back(layer.orders[t]);
        next.definitions_.push_back(sources[layer.survivors[t]]);
    }
    auto rewrite = [&](const Exponents& v) {
        Exponents out(n + k);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = v[i];
        for (std::size_t t = 0; t < s; ++t)
            if (v[n + t] != 0)
                for (const auto& [u, x] : layer.expressions[t])
                    out[n + u] += v[n + t] * x;
        normalize_layer(out, n, layer);
        return out;
    };
    for (std::size_t i = 0; i < n; ++i)
        next.powers_.push_back(rewrite(ext.powers_[i]));
    for (std::size_t t = 0; t < k; ++t) {
        Exponents p(n + k);
        for (const auto& [u, x] : layer.power_rows[t])
            p[n + u] += x;
        normalize_layer(p, n, layer);
        next.powers_.push_back(std::move(p));
    }
    for (const auto& [key, value] : ext.conj_) {
        Exponents v = rewrite(value);
        Exponents trivial(n + k);
        trivial[key.first] = 1;
        if (v != trivial)
            next.conj_.emplace(key, std::move(v));
    }
    for (const auto& img : ext.images_)
        next.images_.push_back(rewrite(img));
    next.rebuild_inverse_conjugates();
    np_ = std::move(next);
}

NqResult nilpotent_quotient(const Presentation& p, int c, NqOptions options) {
    if (c < 1)
        throw std::invalid_argument("nilpotency class must be at least 1");
    NilpotentQuotientEngine engine(p, options);
    for (int k = 1; k <= c; ++k)
        engine.extend();
    return {engine.current(), engine.ranks()};
}

Exponents element_in_quotient(const NilpotentPresentation& np, const Word& w) { return np.evaluate(w); }

int leading_weight(const NilpotentPresentation& np, const Exponents& v) {
    int best = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0 && (best == 0 || np.weight(i) < best))
            best = np.weight(i);
    return best;
}

NqResult lcs_ranks_pv3(int c, NqOptions options) {
    if (c > 4)
        throw std::invalid_argument("lcs_ranks_pv3 supports class at most 4");
    return nilpotent_quotient(pv_presentation(3), c, options);
}

} // namespace pvk
