#include "aridyn/asymptotics.hpp"

#include <cmath>

#include "aridyn/errors.hpp"

namespace aridyn {

Rat jordan_power_entry(const JordanBlockMatrix& blk, long n, int r, int c) {
    if (r < c) return Rat(0);
    unsigned long k = static_cast<unsigned long>(r - c);
    if (n >= 0 && k > static_cast<unsigned long>(n)) return Rat(0);
    return binomial_general(n, k) * pow_rat(blk.lambda, n - static_cast<long>(k));
}

Rat block_power_norm_exact(const JordanBlockMatrix& blk, long n) {
    if (n < 0) throw DomainError("block_power_norm: negative exponent");
    Rat best(0);
    long kmax = std::min<long>(n, blk.ell);
    for (long k = 0; k <= kmax; ++k) {
        Rat term = Rat(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))) *
                   abs(pow_rat(blk.lambda, n - k));
        if (term > best) best = term;
    }
    return best;
}

double block_power_norm(const JordanBlockMatrix& blk, long n) {
    Rat v = block_power_norm_exact(blk, n);
    // Huge exact values overflow a straight double conversion; go via logs.
    if (bit_size(v.get_num()) > 900 || bit_size(v.get_den()) > 900) return std::exp(log_rat(v));
    return to_double(v);
}

double block_inverse_power_norm(const JordanBlockMatrix& blk, long n) {
    if (abs(blk.lambda) <= 1) throw DomainError("block_inverse_power_norm: needs |lambda| > 1");
    double best = 0;
    double abslog = log_rat(abs(blk.lambda));
    for (int k = 0; k <= blk.ell; ++k) {
        // |C(-n, k)| = C(n+k-1, k)
        double term =
            to_double(abs(binomial_general(-n, static_cast<unsigned long>(k)))) *
            std::exp(-(static_cast<double>(n) + k) * abslog);
        best = std::max(best, term);
    }
    return best;
}

GrowthClass vector_growth_class(const JordanBlockMatrix& blk, const std::vector<double>& v) {
    if (abs(blk.lambda) <= 1)
        throw DomainError("vector_growth_class: hypothesis |lambda| > 1 fails");
    if (static_cast<int>(v.size()) != blk.size())
        throw DomainError("vector_growth_class: vector length mismatch");
    GrowthClass g;
    g.log_lambda = log_rat(abs(blk.lambda));
    for (int i = 0; i < blk.size(); ++i) {
        if (v[i] != 0.0) {
            g.t = blk.ell - i;
            return g;
        }
    }
    return g;  // zero vector: t absent
}

CompareReport asymp_compare(const std::vector<double>& a, const std::vector<double>& b,
                            long window_lo, long window_hi, double r_lo, double r_hi) {
    CompareReport rep;
    if (window_lo < 0 || window_hi >= static_cast<long>(a.size()) ||
        window_hi >= static_cast<long>(b.size()) || window_lo > window_hi)
        throw DomainError("asymp_compare: bad window");
    double inf = 0, sup = 0;
    bool first = true;
    double first_ratio = 0, last_ratio = 0;
    for (long n = window_lo; n <= window_hi; ++n) {
        if (a[n] <= 0 || b[n] <= 0) return rep;  // inconclusive on non-positive data
        double r = a[n] / b[n];
        if (first) {
            inf = sup = first_ratio = r;
            first = false;
        } else {
            inf = std::min(inf, r);
            sup = std::max(sup, r);
        }
        last_ratio = r;
    }
    rep.ratio_inf = inf;
    rep.ratio_sup = sup;
    if (inf >= r_lo && sup <= r_hi) {
        rep.verdict = CompareVerdict::Equivalent;
    } else if (sup <= r_hi && last_ratio < first_ratio * 0.5) {
        rep.verdict = CompareVerdict::Precedes;  // a below b, ratio decaying
    } else if (inf >= r_lo && last_ratio > first_ratio * 2.0) {
        rep.verdict = CompareVerdict::Dominates;
    }
    return rep;
}

double small_block_bound(const JordanBlockMatrix& blk, long n) {
    if (abs(blk.lambda) >= 1) throw DomainError("small_block_bound: needs |lambda| < 1");
    if (n < blk.ell) throw DomainError("small_block_bound: needs n >= ell");
    Rat bound = pow_rat(Rat(n), blk.ell) * abs(pow_rat(blk.lambda, n - blk.ell));
    if (block_power_norm_exact(blk, n) > bound)
        throw AssertionFailure("small_block_bound: closed-form bound violated");
    return to_double(bound);
}

}  // namespace aridyn
