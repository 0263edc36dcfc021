#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "aridyn/numeric.hpp"

namespace aridyn {

using QVec = std::vector<Rat>;

// Dense rational matrix, row-major. Sizes stay tiny (the Picard rank of the
// bundled models), so everything below is plain exact Gaussian elimination.
class QMat {
  public:
    QMat() = default;
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}
    QMat(std::initializer_list<std::initializer_list<long>> rows);

    static QMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    QMat transpose() const;
    Rat trace() const;

    friend QMat operator*(const QMat& a, const QMat& b);
    friend QVec operator*(const QMat& a, const QVec& v);
    friend QMat operator+(const QMat& a, const QMat& b);
    friend QMat operator-(const QMat& a, const QMat& b);
    friend bool operator==(const QMat& a, const QMat& b);

    QMat scaled(const Rat& s) const;
    QMat pow(unsigned long e) const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec scaled(const QVec& v, const Rat& s);
bool is_zero(const QVec& v);

// In-place reduced row echelon form; returns rank and fills pivot columns.
int rref(QMat& m, std::vector<int>* pivot_cols = nullptr);

int rank(const QMat& m);

// Basis of the right kernel, from the canonical RREF (free variables set to 1
// one at a time), so results are deterministic.
std::vector<QVec> kernel(const QMat& m);

// One solution of m x = b, if the system is consistent.
std::optional<QVec> solve(const QMat& m, const QVec& b);

// Characteristic polynomial coefficients c_0 + c_1 x + ... + c_n x^n of a
// square matrix, exact (Faddeev-LeVerrier recurrence).
std::vector<Rat> char_poly(const QMat& m);

// Incremental independent-set tracker for basis-extension arguments.
class SpanTracker {
  public:
    explicit SpanTracker(int dim) : dim_(dim) {}
    int rank() const { return static_cast<int>(rows_.size()); }
    // Adds v to the span; returns true if v was independent of the span.
    bool add(const QVec& v);
    bool contains(const QVec& v) const;

  private:
    int dim_;
    std::vector<QVec> rows_;       // row echelon, pivot-normalized
    std::vector<int> pivots_;
    QVec reduce(QVec v) const;
};

}  // namespace aridyn
