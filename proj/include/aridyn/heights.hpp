#pragma once

#include <vector>

#include "aridyn/bigfloat.hpp"
#include "aridyn/geometry.hpp"
#include "aridyn/numeric.hpp"

namespace aridyn {

// Divisor class a_1 H_1 + ... + a_k H_k in the hyperplane basis.
struct DivisorClass {
    std::vector<Rat> coeffs;

    static DivisorClass ample_standard(int k) { return DivisorClass{std::vector<Rat>(k, Rat(1))}; }
    bool is_ample() const {
        for (const Rat& c : coeffs)
            if (sgn(c) <= 0) return false;
        return !coeffs.empty();
    }
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

// Log-max height of one factor; >= 0 by coprimality of the coordinates.
double factor_height(const ProjectiveTuplePoint& P, int j);

// Sum of factor heights: the fixed Weil height representative for the
// standard ample class (1, ..., 1).
double standard_height(const ProjectiveTuplePoint& P);

double height_wrt(const ProjectiveTuplePoint& P, const DivisorClass& D);

BigFloat height_wrt_hp(const ProjectiveTuplePoint& P, const DivisorClass& D, mpfr_prec_t prec);

// h_D(f^n(P)) for n = 0..N, retaining the exact per-factor log-max integers
// so downstream consumers can recompute at any precision.
struct HeightSequence {
    DivisorClass divisor;
    std::vector<double> values;
    // factor_logs[n][j] = max_i |x_{j,i}| of the normalized point f^n(P).
    std::vector<std::vector<Int>> factor_logs;
    std::size_t max_coord_bits = 0;

    long length() const { return static_cast<long>(values.size()); }
    double value_hp(long n, const std::vector<Rat>& coeffs, mpfr_prec_t prec) const;
};

HeightSequence height_sequence(const MorphismSpec& f, const ProjectiveTuplePoint& P,
                               const DivisorClass& D, long N);
HeightSequence height_sequence(const OrbitSegment& orbit, const DivisorClass& D);

struct DominanceReport {
    double sup_ratio = 0;      // sup_n |h_D| / max(1, h_H)
    long arg_sup = 0;
    double apriori_bound = 0;  // max_j |D_j| / min_j H_j
};

// Empirical check that the ample height dominates |h_D| along the orbit, with
// the model's a-priori constant; AssertionFailure on violation.
DominanceReport dominance_check(const HeightSequence& seqD, const HeightSequence& seqH);

}  // namespace aridyn
