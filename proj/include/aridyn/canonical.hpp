#pragma once

#include <optional>
#include <vector>

#include "aridyn/geometry.hpp"
#include "aridyn/heights.hpp"
#include "aridyn/spectrum.hpp"

namespace aridyn {

// An ample class H with f^* H = d H exactly, d > 1.
struct PolarizedData {
    MorphismSpec f;
    DivisorClass H;
    Rat d;

    // Validates the eigen-relation; HypothesisError if it fails.
    static PolarizedData make(MorphismSpec f, DivisorClass H);
    // Searches the rational eigenvalues > 1 of the pullback for an ample
    // eigenvector; nullopt when f is not polarized in our model.
    static std::optional<PolarizedData> detect(const MorphismSpec& f);
};

struct CanonicalHeightEstimate {
    double value = 0;
    double error_bound = 0;
    int terms_used = 0;
    // The error bound leans on an empirically re-estimated step-defect
    // constant rather than the coefficient-derived one.
    bool heuristic = false;
};

struct CanonicalOptions {
    double tol = 1e-9;
    int max_depth = 64;       // hard cap; ResourceError beyond
    int min_depth = 6;        // defect observation window
    std::size_t bit_budget = 0;  // 0 = unlimited
    mpfr_prec_t precision = 53;
};

// Step-defect data for the one-step height relation along an orbit.
struct StepDefect {
    double coef_bound = 0;     // rigorous one-sided bound from coefficient data
    double observed_max = 0;   // max |defect| seen on the computed segment
    double declared = 0;       // constant actually used in tail bounds
    bool heuristic = false;    // observed exceeded the coefficient bound
};

// Rigorous bound on h_{H_i}(f(Q)) - sum_j d_ij h_{H_j}(Q) from term counts
// and coefficient sizes: log(T_i * M_i) per factor, combined with |D_i|.
double coef_step_bound(const MorphismSpec& f, const DivisorClass& D);

// hat{h}_{f,H}(P) = lim h_H(f^n P) / d^n via the telescoping series, with a
// geometric tail bound from the step-defect constant.
CanonicalHeightEstimate polarized_canonical_height(const PolarizedData& pd,
                                                   const ProjectiveTuplePoint& P,
                                                   const CanonicalOptions& opts = {});

// Canonical heights attached to one exact Jordan chain with |lambda| > 1:
// the vector limit lim Lambda^{-n} h_D(f^n P).
struct ChainHeightVector {
    int block_index = 0;
    std::vector<CanonicalHeightEstimate> values;  // index j = hat{h}_{D_{i,j}}(P)
    StepDefect defect;
};

ChainHeightVector chain_canonical_heights(const JordanSpectrum& S, int block_index,
                                          const MorphismSpec& f, const ProjectiveTuplePoint& P,
                                          const CanonicalOptions& opts = {});

// All big blocks at once (the input spectral_profile wants).
std::vector<ChainHeightVector> big_block_heights(const JordanSpectrum& S, const MorphismSpec& f,
                                                 const ProjectiveTuplePoint& P,
                                                 const CanonicalOptions& opts = {});

struct SmallBlockReport {
    double sup_ratio = 0;  // sup_n ||h_D(f^n P)|| / n^(ell+1)
    long arg_sup = 0;
    long window = 0;
};

// Polynomial-growth check for a block with |lambda| <= 1.
SmallBlockReport small_block_growth_check(const JordanSpectrum& S, int block_index,
                                          const MorphismSpec& f, const ProjectiveTuplePoint& P,
                                          long N);

struct DoubleCanonicalEstimate {
    double liminf_estimate = 0;
    std::vector<double> window_values;  // hat{h}_{f,H}(g^n P) / (n^t alpha^n), n in [N/2, N]
    long window_lo = 0;
};

// liminf_n hat{h}_{f,H}(g^n(P)) / (n^{t_g} alpha_g^n), estimated as the
// minimum over the tail window. Requires f and g to commute.
DoubleCanonicalEstimate double_canonical_height(const PolarizedData& pd, const MorphismSpec& g,
                                                const ProjectiveTuplePoint& P, double alpha_g,
                                                int t_g, long N,
                                                const CanonicalOptions& opts = {});

// Shared commutativity verification: exact symbolic comparison of the two
// compositions when the term budget allows, else pointwise along the orbit.
void require_commuting(const MorphismSpec& f, const MorphismSpec& g,
                       const ProjectiveTuplePoint& P, long probe_len = 6);

}  // namespace aridyn
