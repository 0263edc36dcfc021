#include "aridyn/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace aridyn {

QMat pullback_matrix(const MorphismSpec& f) {
    return f.multidegree_qmat().transpose();
}

KrylovSpan krylov_span(const QMat& M, const QVec& H) {
    if (M.rows() != M.cols() || M.cols() != static_cast<int>(H.size()))
        throw DomainError("krylov_span: dimension mismatch");
    if (M.rows() > 32) throw ResourceError("krylov_span: rank guard k <= 32 exceeded");
    if (is_zero(H)) throw DomainError("krylov_span: H must be nonzero");
    KrylovSpan span;
    SpanTracker tracker(M.cols());
    QVec v = H;
    while (tracker.add(v)) {
        span.basis.push_back(v);
        v = M * v;
    }
    return span;
}

namespace {

// Representation matrix of M restricted to the span, in the span's basis.
QMat restrict_to_span(const QMat& M, const KrylovSpan& span) {
    int d = span.dimension();
    QMat basis_cols(M.rows(), d);
    for (int j = 0; j < d; ++j)
        for (int r = 0; r < M.rows(); ++r) basis_cols.at(r, j) = span.basis[j][r];
    QMat R(d, d);
    for (int j = 0; j < d; ++j) {
        QVec img = M * span.basis[j];
        auto x = solve(basis_cols, img);
        if (!x) throw AssertionFailure("restrict_to_span: span is not invariant");
        for (int r = 0; r < d; ++r) R.at(r, j) = (*x)[r];
    }
    return R;
}

std::vector<Rat> poly_derivative(const std::vector<Rat>& p) {
    std::vector<Rat> d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    return d;
}

Rat poly_eval(const std::vector<Rat>& p, const Rat& x) {
    Rat acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

std::complex<double> poly_eval(const std::vector<Rat>& p, std::complex<double> x) {
    std::complex<double> acc(0, 0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + to_double(p[i]);
    return acc;
}

// Synthetic division by (x - r); remainder must vanish.
std::vector<Rat> deflate(const std::vector<Rat>& p, const Rat& r) {
    std::vector<Rat> q(p.size() - 1, Rat(0));
    Rat carry = p.back();
    for (size_t i = p.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = p[i] + carry * r;
    }
    if (sgn(carry) != 0) throw AssertionFailure("deflate: nonzero remainder");
    return q;
}

std::vector<Int> divisors_of(const Int& n, bool* complete) {
    auto fac = factorize(n);
    *complete = fac.has_value();
    std::vector<Int> divs{Int(1)};
    if (!fac) return divs;
    for (const auto& [p, e] : *fac) {
        std::vector<Int> next;
        Int pk(1);
        for (unsigned k = 0; k <= e; ++k) {
            for (const Int& d : divs) next.push_back(d * pk);
            pk *= p;
        }
        divs = std::move(next);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

RationalRoots rational_roots(const std::vector<Rat>& poly) {
    RationalRoots out;
    std::vector<Rat> p = poly;
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
    if (p.size() <= 1) {
        out.residual_degree = 0;
        return out;
    }
    // Root 0 first.
    int zero_mult = 0;
    while (p.size() > 1 && sgn(p[0]) == 0) {
        p.erase(p.begin());
        ++zero_mult;
    }
    if (zero_mult) out.roots.push_back({Rat(0), zero_mult});

    // Clear denominators to a primitive integer polynomial for the candidate
    // enumeration; roots p/q need p | a_0 and q | a_n.
    auto candidates = [&](const std::vector<Rat>& q) -> std::optional<std::vector<Rat>> {
        Int lcm(1);
        for (const Rat& c : q) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        std::vector<Int> ip;
        Int content(0);
        for (const Rat& c : q) {
            Rat s = c * Rat(lcm);
            ip.push_back(s.get_num());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ip.back().get_mpz_t());
        }
        for (Int& c : ip) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
        bool c0 = false, cn = false;
        std::vector<Int> num_divs = divisors_of(ip.front(), &c0);
        std::vector<Int> den_divs = divisors_of(ip.back(), &cn);
        if (!c0 || !cn)
            throw ResourceError("rational_roots: constant/leading coefficient too hard to factor");
        std::vector<Rat> cands;
        for (const Int& a : num_divs)
            for (const Int& b : den_divs) {
                Rat r(a, b);
                r.canonicalize();
                cands.push_back(r);
                cands.push_back(-r);
            }
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        return cands;
    };

    while (p.size() > 1) {
        auto cands = candidates(p);
        bool found = false;
        for (const Rat& r : *cands) {
            if (sgn(poly_eval(p, r)) == 0) {
                int mult = 0;
                while (p.size() > 1 && sgn(poly_eval(p, r)) == 0) {
                    p = deflate(p, r);
                    ++mult;
                }
                out.roots.push_back({r, mult});
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    out.residual_degree = static_cast<int>(p.size()) - 1;
    return out;
}

namespace {

// Durand-Kerner root finder for the residual (irrational) part, seeded on a
// circle; fine at desk scale since we only report these with error flags.
std::vector<std::complex<double>> numeric_roots(const std::vector<Rat>& poly) {
    int deg = static_cast<int>(poly.size()) - 1;
    std::vector<std::complex<double>> z(deg);
    double radius = 1.0;
    for (int i = 0; i < deg; ++i)
        radius = std::max(radius, std::pow(std::fabs(to_double(poly[i]) / to_double(poly.back())),
                                           1.0 / (deg - i)));
    for (int i = 0; i < deg; ++i) {
        double ang = 2 * M_PI * i / deg + 0.4;
        z[i] = std::polar(radius * 1.2, ang);
    }
    double lead = to_double(poly.back());
    for (int iter = 0; iter < 500; ++iter) {
        double shift = 0;
        for (int i = 0; i < deg; ++i) {
            std::complex<double> num = poly_eval(poly, z[i]) / lead;
            std::complex<double> den(1, 0);
            for (int j = 0; j < deg; ++j)
                if (j != i) den *= (z[i] - z[j]);
            std::complex<double> dz = num / den;
            z[i] -= dz;
            shift = std::max(shift, std::abs(dz));
        }
        if (shift < 1e-14) break;
    }
    return z;
}

// Certified enclosure of a real root by bisection with exact sign
// evaluations on the rational polynomial. Returns half-width, or nullopt if
// no sign change brackets the seed.
std::optional<double> certify_real_root(const std::vector<Rat>& poly, double seed,
                                        double* refined) {
    const double w0 = 1e-4;
    auto sign_at = [&](double x) {
        // Evaluate at a nearby exact rational.
        Rat r(x);
        return sgn(poly_eval(poly, r));
    };
    double lo = seed - w0, hi = seed + w0;
    int slo = sign_at(lo), shi = sign_at(hi);
    if (slo == 0) { *refined = lo; return 0.0; }
    if (shi == 0) { *refined = hi; return 0.0; }
    if (slo == shi) return std::nullopt;
    for (int i = 0; i < 60 && hi - lo > 1e-13; ++i) {
        double mid = 0.5 * (lo + hi);
        int sm = sign_at(mid);
        if (sm == 0) { *refined = mid; return 0.0; }
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    *refined = 0.5 * (lo + hi);
    return 0.5 * (hi - lo);
}

struct BlockSort {
    bool operator()(const JordanBlock& a, const JordanBlock& b) const {
        double ma = a.abs_lambda(), mb = b.abs_lambda();
        if (std::fabs(ma - mb) > 1e-12 * std::max(1.0, std::max(ma, mb))) return ma > mb;
        if (a.ell != b.ell) return a.ell > b.ell;
        if (a.lambda_num.real() != b.lambda_num.real())
            return a.lambda_num.real() > b.lambda_num.real();
        return a.lambda_num.imag() > b.lambda_num.imag();
    }
};

}  // namespace

JordanSpectrum jordan_decompose(const QMat& M, const KrylovSpan& span) {
    int d = span.dimension();
    if (d < 1) throw DomainError("jordan_decompose: empty span");
    QMat R = restrict_to_span(M, span);
    std::vector<Rat> cp = char_poly(R);
    RationalRoots rr = rational_roots(cp);

    JordanSpectrum S;
    S.dimension = d;

    // Exact chains for the rational part of the spectrum.
    for (const auto& [lambda, mult] : rr.roots) {
        QMat A = R - QMat::identity(d).scaled(lambda);
        // Kernel filtration K_1 subset K_2 subset ... up to the full
        // generalized eigenspace.
        std::vector<std::vector<QVec>> kernels;  // kernels[j] = basis of ker A^(j+1)
        QMat Aj = A;
        int prev = 0;
        while (true) {
            auto kb = kernel(Aj);
            if (static_cast<int>(kb.size()) == prev) break;
            kernels.push_back(kb);
            prev = static_cast<int>(kb.size());
            if (prev >= mult) break;
            Aj = Aj * A;
        }
        int s = static_cast<int>(kernels.size());
        // Choose chain tops from the top level down, extending the span of
        // the lower kernel plus the one-step images of taller chains.
        std::vector<std::vector<QVec>> chains;  // each chain: D_{i,0}..D_{i,ell}
        std::vector<QVec> active;               // current-level images of taller tops
        for (int j = s; j >= 1; --j) {
            SpanTracker tracker(d);
            if (j >= 2)
                for (const auto& v : kernels[j - 2]) tracker.add(v);
            std::vector<QVec> next_active;
            for (const auto& w : active) {
                tracker.add(w);
                next_active.push_back(A * w);
            }
            for (const auto& cand : kernels[j - 1]) {
                if (tracker.add(cand)) {
                    // New chain of height j: D_{ell} = cand, D_{j-1-m} = A^m cand.
                    std::vector<QVec> chain(j);
                    QVec v = cand;
                    for (int m = j - 1; m >= 0; --m) {
                        chain[m] = v;
                        if (m > 0) v = A * v;
                    }
                    chains.push_back(std::move(chain));
                    next_active.push_back(A * cand);
                }
            }
            active = std::move(next_active);
        }
        // Map chains from span coordinates to the ambient H-basis.
        for (auto& chain : chains) {
            JordanBlock blk;
            blk.exact = true;
            blk.lambda = lambda;
            blk.lambda_num = std::complex<double>(to_double(lambda), 0);
            blk.ell = static_cast<int>(chain.size()) - 1;
            for (const auto& v : chain) {
                QVec amb(M.rows(), Rat(0));
                for (int j = 0; j < d; ++j)
                    for (int r = 0; r < M.rows(); ++r) amb[r] += span.basis[j][r] * v[j];
                blk.chain.push_back(std::move(amb));
            }
            S.blocks.push_back(std::move(blk));
        }
    }

    // Numeric eigenvalues for the irrational residual factor.
    if (rr.residual_degree > 0) {
        std::vector<Rat> residual = cp;
        for (const auto& [lambda, mult] : rr.roots)
            for (int i = 0; i < mult; ++i) residual = deflate(residual, lambda);
        auto zs = numeric_roots(residual);
        std::vector<Rat> deriv = poly_derivative(residual);
        for (auto z : zs) {
            JordanBlock blk;
            blk.exact = false;
            blk.ell = 0;  // simple roots at desk scale; multiplicity stays in the cluster
            if (std::fabs(z.imag()) < 1e-9) {
                double refined = z.real();
                auto err = certify_real_root(residual, z.real(), &refined);
                if (err) {
                    blk.lambda_num = std::complex<double>(refined, 0);
                    blk.lambda_err = *err;
                } else {
                    blk.lambda_num = std::complex<double>(z.real(), 0);
                    blk.lambda_err = 1e-9;
                }
            } else {
                blk.lambda_num = z;
                double pd = std::abs(poly_eval(deriv, z));
                double pv = std::abs(poly_eval(residual, z));
                blk.lambda_err = pd > 0 ? std::min(1e-9, 4 * pv / pd) : 1e-9;
            }
            S.blocks.push_back(std::move(blk));
        }
    }

    std::sort(S.blocks.begin(), S.blocks.end(), BlockSort{});
    S.exact = true;
    S.sigma = 0;
    for (const auto& b : S.blocks) {
        if (!b.exact) S.exact = false;
        bool big = b.exact ? (abs(b.lambda) > 1) : (b.abs_lambda() > 1 + b.lambda_err);
        if (big) ++S.sigma;
    }
    return S;
}

std::vector<Rat> express_in_chain_basis(const DivisorClass& D, const JordanSpectrum& S) {
    S.require_exact();
    int k = 0;
    for (const auto& b : S.blocks) k = std::max(k, static_cast<int>(b.chain.front().size()));
    if (static_cast<int>(D.coeffs.size()) != k)
        throw DomainError("express_in_chain_basis: dimension mismatch");
    int cols = 0;
    for (const auto& b : S.blocks) cols += b.ell + 1;
    QMat A(k, cols);
    int c = 0;
    for (const auto& b : S.blocks)
        for (const auto& v : b.chain) {
            for (int r = 0; r < k; ++r) A.at(r, c) = v[r];
            ++c;
        }
    QVec rhs(D.coeffs.begin(), D.coeffs.end());
    auto x = solve(A, rhs);
    if (!x) throw NotInSpanError("divisor lies outside the chain span of H");
    return *x;
}

}  // namespace aridyn
