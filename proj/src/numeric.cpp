#include "aridyn/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "aridyn/errors.hpp"

namespace aridyn {

double log_int(const Int& z) {
    if (sgn(z) <= 0) throw DomainError("log_int: argument must be positive");
    signed long exp2 = 0;
    // z = d * 2^exp2 with d in [0.5, 1): exact for any size of z.
    double d = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(d) + static_cast<double>(exp2) * M_LN2;
}

double log_rat(const Rat& q) {
    if (sgn(q) <= 0) throw DomainError("log_rat: argument must be positive");
    return log_int(q.get_num()) - log_int(q.get_den());
}

double to_double(const Rat& q) { return q.get_d(); }

std::size_t bit_size(const Int& z) {
    if (sgn(z) == 0) return 0;
    return mpz_sizeinbase(z.get_mpz_t(), 2);
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rat binomial_general(long n, unsigned long k) {
    Rat r(1);
    for (unsigned long i = 0; i < k; ++i) {
        r *= Rat(n - static_cast<long>(i), static_cast<long>(i) + 1);
    }
    r.canonicalize();
    return r;
}

Rat pow_rat(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    if (sgn(q) == 0 && e < 0) throw DomainError("pow_rat: zero base, negative exponent");
    Rat base = e > 0 ? q : Rat(1) / q;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), n);
    out.canonicalize();
    return out;
}

std::optional<std::map<Int, unsigned>> factorize(const Int& z, unsigned long trial_bound) {
    std::map<Int, unsigned> out;
    Int n = abs(z);
    if (n <= 1) return out;
    auto strip = [&](const Int& p) {
        unsigned e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        if (e) out[p] = e;
    };
    strip(2);
    strip(3);
    for (unsigned long p = 5; p <= trial_bound && n > 1; p += 6) {
        if (Int(p) * p > n && mpz_probab_prime_p(n.get_mpz_t(), 30)) break;
        strip(Int(p));
        strip(Int(p + 2));
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
            out[n] += 1;
        } else {
            // Composite cofactor beyond the trial bound; try a perfect-power
            // split before giving up.
            if (mpz_perfect_power_p(n.get_mpz_t())) {
                for (unsigned long e = 2; e <= bit_size(n); ++e) {
                    Int root;
                    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e)) {
                        auto sub = factorize(root, trial_bound);
                        if (!sub) return std::nullopt;
                        for (auto& [p, m] : *sub) out[p] += m * static_cast<unsigned>(e);
                        return out;
                    }
                }
            }
            return std::nullopt;
        }
    }
    return out;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
}

}  // namespace aridyn
