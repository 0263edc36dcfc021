#include "aridyn/linalg.hpp"

#include "aridyn/errors.hpp"

namespace aridyn {

QMat::QMat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    a_.assign(static_cast<size_t>(rows_) * cols_, Rat(0));
    int r = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) throw DomainError("QMat: ragged initializer");
        int c = 0;
        for (long x : row) at(r, c++) = Rat(x);
        ++r;
    }
}

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::transpose() const {
    QMat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Rat QMat::trace() const {
    Rat s(0);
    for (int i = 0; i < rows_ && i < cols_; ++i) s += at(i, i);
    return s;
}

QMat operator*(const QMat& a, const QMat& b) {
    if (a.cols_ != b.rows_) throw DomainError("QMat: size mismatch in product");
    QMat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (sgn(a.at(i, k)) == 0) continue;
            for (int j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

QVec operator*(const QMat& a, const QVec& v) {
    if (a.cols_ != static_cast<int>(v.size())) throw DomainError("QMat: size mismatch in apply");
    QVec r(a.rows_, Rat(0));
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r[i] += a.at(i, j) * v[j];
    return r;
}

QMat operator+(const QMat& a, const QMat& b) {
    QMat r(a.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

QMat operator-(const QMat& a, const QMat& b) {
    QMat r(a.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

bool operator==(const QMat& a, const QMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

QMat QMat::scaled(const Rat& s) const {
    QMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

QMat QMat::pow(unsigned long e) const {
    if (rows_ != cols_) throw DomainError("QMat: pow of non-square matrix");
    QMat acc = identity(rows_);
    QMat base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

QVec operator+(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec operator-(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec scaled(const QVec& v, const Rat& s) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
    return r;
}

bool is_zero(const QVec& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

int rref(QMat& m, std::vector<int>* pivot_cols) {
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int r = row; r < m.rows(); ++r)
            if (sgn(m.at(r, col)) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(row, c));
        Rat inv = Rat(1) / m.at(row, col);
        for (int c = 0; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m.at(r, col)) == 0) continue;
            Rat f = m.at(r, col);
            for (int c = 0; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++row;
    }
    return row;
}

int rank(const QMat& m) {
    QMat c = m;
    return rref(c);
}

std::vector<QVec> kernel(const QMat& m) {
    QMat r = m;
    std::vector<int> piv;
    rref(r, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        QVec v(m.cols(), Rat(0));
        v[free] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.at(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> solve(const QMat& m, const QVec& b) {
    QMat aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    std::vector<int> piv;
    rref(aug, &piv);
    for (int c : piv)
        if (c == m.cols()) return std::nullopt;  // inconsistent
    QVec x(m.cols(), Rat(0));
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug.at(static_cast<int>(i), m.cols());
    return x;
}

std::vector<Rat> char_poly(const QMat& m) {
    if (m.rows() != m.cols()) throw DomainError("char_poly: non-square matrix");
    int n = m.rows();
    std::vector<Rat> c(static_cast<size_t>(n) + 1, Rat(0));
    c[n] = 1;
    QMat mk = QMat::identity(n);
    for (int i = 1; i <= n; ++i) {
        mk = m * mk;
        Rat ci = -mk.trace() / Rat(i);
        c[n - i] = ci;
        for (int d = 0; d < n; ++d) mk.at(d, d) += ci;
    }
    return c;
}

QVec SpanTracker::reduce(QVec v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Rat& f = v[pivots_[i]];
        if (sgn(f) == 0) continue;
        Rat ff = f;
        for (int c = 0; c < dim_; ++c) v[c] -= ff * rows_[i][c];
    }
    return v;
}

bool SpanTracker::add(const QVec& v) {
    QVec r = reduce(v);
    int piv = -1;
    for (int c = 0; c < dim_; ++c)
        if (sgn(r[c]) != 0) { piv = c; break; }
    if (piv < 0) return false;
    Rat inv = Rat(1) / r[piv];
    for (int c = 0; c < dim_; ++c) r[c] *= inv;
    rows_.push_back(std::move(r));
    pivots_.push_back(piv);
    return true;
}

bool SpanTracker::contains(const QVec& v) const { return is_zero(reduce(v)); }

}  // namespace aridyn
