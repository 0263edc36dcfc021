#pragma once

#include <optional>
#include <vector>

#include "aridyn/numeric.hpp"

namespace aridyn {

// Lower-triangular Jordan block: lambda on the diagonal, 1 on the
// subdiagonal, size (ell+1) x (ell+1).
struct JordanBlockMatrix {
    Rat lambda;
    int ell = 0;

    int size() const { return ell + 1; }
};

// Entry coefficient of Lambda^n (any integer n): for row r, column c with
// r >= c the entry is C(n, r-c) * lambda^(n-(r-c)), by the nilpotent binomial
// expansion. Exact.
Rat jordan_power_entry(const JordanBlockMatrix& blk, long n, int r, int c);

// max-norm of Lambda^n via the closed form max_k C(n,k) |lambda|^(n-k),
// 0 <= k <= min(n, ell). Exact, then rounded once.
Rat block_power_norm_exact(const JordanBlockMatrix& blk, long n);
double block_power_norm(const JordanBlockMatrix& blk, long n);

// max-norm of Lambda^(-n) for |lambda| > 1 (used by canonical-height tails).
double block_inverse_power_norm(const JordanBlockMatrix& blk, long n);

// The growth class n^t |lambda|^n of Lambda^n v; t is absent for v = 0.
struct GrowthClass {
    std::optional<int> t;
    double log_lambda = 0;
};

GrowthClass vector_growth_class(const JordanBlockMatrix& blk, const std::vector<double>& v);

enum class CompareVerdict { Precedes, Dominates, Equivalent, Inconclusive };

struct CompareReport {
    CompareVerdict verdict = CompareVerdict::Inconclusive;
    double ratio_inf = 0;
    double ratio_sup = 0;
};

// Tail-window comparison of two positive sequences; a test utility, never a
// proof. `equivalent` means the ratio a/b stayed within [r_lo, r_hi] across
// the window.
CompareReport asymp_compare(const std::vector<double>& a, const std::vector<double>& b,
                            long window_lo, long window_hi, double r_lo, double r_hi);

// n^ell |lambda|^(n-ell) for |lambda| < 1, asserting it dominates the norm.
double small_block_bound(const JordanBlockMatrix& blk, long n);

}  // namespace aridyn
