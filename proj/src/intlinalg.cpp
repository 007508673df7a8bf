#include "pvk/intlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pvk {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        for (long v : r)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_)};
}

std::vector<Integer> IntMatrix::col(std::size_t c) const {
    std::vector<Integer> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

void IntMatrix::append_row(const std::vector<Integer>& row) {
    if (rows_ == 0 && cols_ == 0)
        cols_ = row.size();
    if (row.size() != cols_)
        throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("dimension mismatch in matrix product");
    IntMatrix p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                p(i, j) += a * rhs(k, j);
        }
    return p;
}

std::vector<Integer> IntMatrix::operator*(const std::vector<Integer>& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("dimension mismatch in matrix-vector product");
    std::vector<Integer> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out[i] += (*this)(i, j) * v[j];
    return out;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

std::string IntMatrix::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r)
            out << ", ";
        out << '[';
        for (std::size_t c = 0; c < cols_; ++c)
            out << (c ? ", " : "") << (*this)(r, c).get_str();
        out << ']';
    }
    out << ']';
    return out.str();
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(src, c) != 0)
            (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        if ((*this)(r, src) != 0)
            (*this)(r, dst) += k * (*this)(r, src);
}

std::size_t SmithForm::rank() const {
    return static_cast<std::size_t>(
        std::count_if(diagonal.begin(), diagonal.end(), [](const Integer& d) { return d != 0; }));
}

std::vector<Integer> SmithForm::torsion() const {
    std::vector<Integer> t;
    for (const Integer& d : diagonal)
        if (d > 1)
            t.push_back(d);
    return t;
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Position of the smallest nonzero |entry| in a(t.., t..).
bool smallest_entry(const IntMatrix& a, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    Integer best;
    for (std::size_t r = t; r < a.rows(); ++r)
        for (std::size_t c = t; c < a.cols(); ++c) {
            const Integer& x = a(r, c);
            if (x == 0)
                continue;
            if (!found || abs(x) < best) {
                best = abs(x);
                pr = r;
                pc = c;
                found = true;
                if (best == 1)
                    return true;
            }
        }
    return found;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    const std::size_t n = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pr = 0, pc = 0;
        if (!smallest_entry(a, t, pr, pc))
            break;
        a.swap_rows(t, pr);
        u.swap_rows(t, pr);
        a.swap_cols(t, pc);
        v.swap_cols(t, pc);

        for (;;) {
            bool clean = true;
            for (std::size_t r = t + 1; r < a.rows(); ++r) {
                if (a(r, t) == 0)
                    continue;
                Integer q = -floor_div(a(r, t), a(t, t));
                a.add_row_multiple(r, t, q);
                u.add_row_multiple(r, t, q);
                if (a(r, t) != 0)
                    clean = false;
            }
            for (std::size_t c = t + 1; c < a.cols(); ++c) {
                if (a(t, c) == 0)
                    continue;
                Integer q = -floor_div(a(t, c), a(t, t));
                a.add_col_multiple(c, t, q);
                v.add_col_multiple(c, t, q);
                if (a(t, c) != 0)
                    clean = false;
            }
            if (!clean) {
                // Bring the smallest remainder in row/column t to the pivot.
                std::size_t br = t, bc = t;
                Integer best = abs(a(t, t));
                for (std::size_t r = t + 1; r < a.rows(); ++r)
                    if (a(r, t) != 0 && abs(a(r, t)) < best) {
                        best = abs(a(r, t));
                        br = r;
                        bc = t;
                    }
                for (std::size_t c = t + 1; c < a.cols(); ++c)
                    if (a(t, c) != 0 && abs(a(t, c)) < best) {
                        best = abs(a(t, c));
                        br = t;
                        bc = c;
                    }
                a.swap_rows(t, br);
                u.swap_rows(t, br);
                a.swap_cols(t, bc);
                v.swap_cols(t, bc);
                continue;
            }
            // Divisibility: the pivot must divide the rest of the block.
            bool divides = true;
            for (std::size_t r = t + 1; r < a.rows() && divides; ++r)
                for (std::size_t c = t + 1; c < a.cols(); ++c)
                    if (a(r, c) % a(t, t) != 0) {
                        a.add_row_multiple(t, r, 1);
                        u.add_row_multiple(t, r, 1);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (a(t, t) < 0) {
            for (std::size_t c = 0; c < a.cols(); ++c)
                a(t, c) = -a(t, c);
            for (std::size_t c = 0; c < u.cols(); ++c)
                u(t, c) = -u(t, c);
        }
    }

    SmithForm s;
    s.diagonal.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        s.diagonal[i] = a(i, i);
    s.left = std::move(u);
    s.right = std::move(v);
    return s;
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        for (;;) {
            std::size_t best = a.rows();
            for (std::size_t i = r; i < a.rows(); ++i)
                if (a(i, c) != 0 && (best == a.rows() || abs(a(i, c)) < abs(a(best, c))))
                    best = i;
            if (best == a.rows())
                break;
            a.swap_rows(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < a.rows(); ++i) {
                if (a(i, c) == 0)
                    continue;
                a.add_row_multiple(i, r, -floor_div(a(i, c), a(r, c)));
                if (a(i, c) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (a(r, c) == 0)
            continue;
        if (a(r, c) < 0)
            for (std::size_t j = 0; j < a.cols(); ++j)
                a(r, j) = -a(r, j);
        for (std::size_t i = 0; i < r; ++i)
            a.add_row_multiple(i, r, -floor_div(a(i, c), a(r, c)));
        pivots.push_back(c);
        ++r;
    }
    HermiteForm h;
    h.h = IntMatrix(r, a.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            h.h(i, j) = a(i, j);
    h.pivot_cols = std::move(pivots);
    return h;
}

std::size_t rank(const IntMatrix& m) {
    EchelonLattice lat(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        lat.insert_dense(m.row(r));
    return lat.rank();
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    // Bareiss fraction-free elimination.
    IntMatrix a = m;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

bool is_unit_determinant(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("is_unit_determinant needs a square matrix");
    return abs(determinant(m)) == 1;
}

IntMatrix kernel_basis(const IntMatrix& m) {
    SmithForm s = smith_normal_form(m);
    const std::size_t r = s.rank();
    IntMatrix k(m.cols() - r, m.cols());
    for (std::size_t i = r; i < m.cols(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            k(i - r, j) = s.right(j, i);
    return k;
}

IntMatrix left_kernel_basis(const IntMatrix& m) {
    SmithForm s = smith_normal_form(m);
    const std::size_t r = s.rank();
    IntMatrix k(m.rows() - r, m.rows());
    for (std::size_t i = r; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j)
            k(i - r, j) = s.left(i, j);
    return k;
}

bool same_row_lattice(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("column mismatch");
    return hermite_normal_form(a).h == hermite_normal_form(b).h;
}

bool row_lattice_contains(const IntMatrix& m, const IntMatrix& sub) {
    if (m.cols() != sub.cols())
        throw std::invalid_argument("column mismatch");
    EchelonLattice lat(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        lat.insert_dense(m.row(r));
    for (std::size_t r = 0; r < sub.rows(); ++r)
        if (!lat.contains(to_sparse(sub.row(r))))
            return false;
    return true;
}

std::optional<std::vector<Integer>> solve_row_combination(const IntMatrix& m, const std::vector<Integer>& v) {
    if (v.size() != m.cols())
        throw std::invalid_argument("dimension mismatch");
    // c M = v  <=>  (c U^-1) D = v V
    SmithForm s = smith_normal_form(m);
    std::vector<Integer> z(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t k = 0; k < m.cols(); ++k)
            z[j] += v[k] * s.right(k, j);
    std::vector<Integer> y(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const Integer d = j < s.diagonal.size() ? s.diagonal[j] : Integer(0);
        if (d == 0) {
            if (z[j] != 0)
                return std::nullopt;
            continue;
        }
        if (z[j] % d != 0)
            return std::nullopt;
        y[j] = z[j] / d;
    }
    std::vector<Integer> c(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.rows(); ++k)
            c[i] += y[k] * s.left(k, i);
    return c;
}

SparseVector to_sparse(const std::vector<Integer>& dense) {
    SparseVector v;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (dense[i] != 0)
            v.emplace_back(i, dense[i]);
    return v;
}

std::vector<Integer> to_dense(const SparseVector& v, std::size_t dim) {
    std::vector<Integer> d(dim);
    for (const auto& [i, x] : v)
        d.at(i) = x;
    return d;
}

namespace {

// a*x + b*y
SparseVector combine(const Integer& a, const SparseVector& x, const Integer& b, const SparseVector& y) {
    SparseVector out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            Integer t = a * x[i].second;
            if (t != 0)
                out.emplace_back(x[i].first, std::move(t));
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            Integer t = b * y[j].second;
            if (t != 0)
                out.emplace_back(y[j].first, std::move(t));
            ++j;
        } else {
            Integer t = a * x[i].second + b * y[j].second;
            if (t != 0)
                out.emplace_back(x[i].first, std::move(t));
            ++i;
            ++j;
        }
    }
    return out;
}

// x - k*y
SparseVector sub_multiple(const SparseVector& x, const Integer& k, const SparseVector& y) {
    return combine(Integer(1), x, Integer(-k), y);
}

const Integer* entry(const SparseVector& v, std::size_t col) {
    auto it = std::lower_bound(v.begin(), v.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    if (it == v.end() || it->first != col)
        return nullptr;
    return &it->second;
}

} // namespace

bool EchelonLattice::insert(SparseVector v) {
    bool grew = false;
    while (!v.empty()) {
        if (v.back().first >= dim_)
            throw std::invalid_argument("vector outside lattice dimension");
        const std::size_t c = v.front().first;
        const Integer a = v.front().second;
        auto it = rows_.find(c);
        if (it == rows_.end()) {
            if (a < 0)
                for (auto& e : v)
                    e.second = -e.second;
            rows_.emplace(c, std::move(v));
            return true;
        }
        SparseVector& row = it->second;
        const Integer p = row.front().second;
        if (a % p == 0) {
            v = sub_multiple(v, a / p, row);
            continue;
        }
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
        SparseVector new_row = combine(s, row, t, v);
        SparseVector rest = combine(Integer(p / g), v, Integer(-(a / g)), row);
        row = std::move(new_row);
        v = std::move(rest);
        grew = true;
    }
    return grew;
}

bool EchelonLattice::contains(const SparseVector& v0) const {
    SparseVector v = v0;
    while (!v.empty()) {
        auto it = rows_.find(v.front().first);
        if (it == rows_.end())
            return false;
        const Integer& p = it->second.front().second;
        if (v.front().second % p != 0)
            return false;
        v = sub_multiple(v, v.front().second / p, it->second);
    }
    return true;
}

bool EchelonLattice::unit_pivots() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const auto& kv) { return kv.second.front().second == 1; });
}

std::vector<SparseVector> EchelonLattice::reduced_rows() const {
    std::vector<std::pair<std::size_t, SparseVector>> rows(rows_.begin(), rows_.end());
    // Reduce each pivot column in all rows above it, bottom-up.
    for (std::size_t k = rows.size(); k-- > 0;) {
        const std::size_t c = rows[k].first;
        const Integer& p = rows[k].second.front().second;
        for (std::size_t i = 0; i < k; ++i) {
            const Integer* x = entry(rows[i].second, c);
            if (!x)
                continue;
            Integer q = floor_div(*x, p);
            if (q != 0)
                rows[i].second = sub_multiple(rows[i].second, q, rows[k].second);
        }
    }
    std::vector<SparseVector> out;
    out.reserve(rows.size());
    for (auto& [c, r] : rows)
        out.push_back(std::move(r));
    return out;
}

IntMatrix EchelonLattice::to_matrix() const {
    auto rows = reduced_rows();
    IntMatrix m(rows.size(), dim_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [c, x] : rows[i])
            m(i, c) = x;
    return m;
}

std::vector<Integer> EchelonLattice::quotient_torsion() const {
    if (unit_pivots())
        return {};
    // In reduced form a unit-pivot row can be cleared by column operations
    // that touch no other row, so it only contributes an invariant factor 1.
    auto rows = reduced_rows();
    std::vector<bool> drop_col(dim_, false);
    std::vector<const SparseVector*> keep;
    for (const auto& r : rows) {
        if (r.front().second == 1)
            drop_col[r.front().first] = true;
        else
            keep.push_back(&r);
    }
    std::vector<std::size_t> col_index(dim_, dim_);
    std::size_t nc = 0;
    for (std::size_t c = 0; c < dim_; ++c)
        if (!drop_col[c])
            col_index[c] = nc++;
    IntMatrix m(keep.size(), nc);
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (const auto& [c, x] : *keep[i])
            if (!drop_col[c])
                m(i, col_index[c]) = x;
    return smith_normal_form(m).torsion();
}

std::string to_string(const std::vector<Integer>& v) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        out << (i ? ", " : "") << v[i].get_str();
    out << ')';
    return out.str();
}

} // namespace pvk
