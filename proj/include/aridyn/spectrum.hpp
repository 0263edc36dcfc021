#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "aridyn/geometry.hpp"
#include "aridyn/heights.hpp"
#include "aridyn/linalg.hpp"

namespace aridyn {

// Matrix of f^* on Pic(X)_Q in the hyperplane basis H_1..H_k. For a
// polynomial map this is the transpose of the multidegree matrix: the
// orientation is pinned by h(f(P), D) = h(P, pullback * D) + O(1).
QMat pullback_matrix(const MorphismSpec& f);

// Smallest M-invariant subspace containing H; the basis is the independent
// prefix H, MH, M^2 H, ... so basis[0] is always H itself.
struct KrylovSpan {
    std::vector<QVec> basis;
    int dimension() const { return static_cast<int>(basis.size()); }
};

KrylovSpan krylov_span(const QMat& M, const QVec& H);

// One Jordan block of the restriction of M to the span. For exact (rational)
// eigenvalues the chain vectors D_{i,0..ell} satisfy
//   M D_{i,j} = D_{i,j-1} + lambda_i D_{i,j},   D_{i,-1} = 0,
// exactly, with D_{i,0} the eigenvector. Inexact blocks carry a certified
// eigenvalue enclosure instead and omit the chain.
struct JordanBlock {
    bool exact = false;
    Rat lambda;                            // valid when exact
    std::complex<double> lambda_num;       // always filled
    double lambda_err = 0;                 // enclosure half-width (inexact)
    int ell = 0;
    std::vector<QVec> chain;               // ambient H-basis coordinates; empty if inexact

    double abs_lambda() const { return std::abs(lambda_num); }
};

struct JordanSpectrum {
    std::vector<JordanBlock> blocks;  // sorted: |lambda| desc, ell desc, Re, Im
    int sigma = 0;                    // how many blocks have |lambda| > 1
    bool exact = false;               // all blocks exact
    int dimension = 0;                // dimension of the Krylov span

    const JordanBlock& block(int i) const { return blocks[i]; }
    void require_exact() const {
        if (!exact) throw InexactSpectrumError("operation requires an exact Jordan spectrum");
    }
};

JordanSpectrum jordan_decompose(const QMat& M, const KrylovSpan& span);

// Exact coefficients c_{i,j} with sum c_{i,j} D_{i,j} = D, flattened in block
// order. NotInSpanError if D lies outside the chain span.
std::vector<Rat> express_in_chain_basis(const DivisorClass& D, const JordanSpectrum& S);

// Roots of an exact rational polynomial that happen to be rational, with
// multiplicities; remaining factor's degree is also reported. Exposed for
// tests.
struct RationalRoots {
    std::vector<std::pair<Rat, int>> roots;
    int residual_degree = 0;
};
RationalRoots rational_roots(const std::vector<Rat>& poly);

}  // namespace aridyn
