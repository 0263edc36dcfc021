#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace aridyn {

// Thin RAII wrapper over mpfr_t with an explicit mantissa size in bits.
// Binary operations compute at the wider of the two operand precisions.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 53) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigFloat(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    BigFloat(const mpz_class& z, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
    }
    BigFloat(const mpq_class& q, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    BigFloat& operator=(BigFloat o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(wider(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(wider(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(wider(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(wider(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& b) { *this = *this + b; return *this; }
    BigFloat& operator-=(const BigFloat& b) { *this = *this - b; return *this; }
    BigFloat& operator*=(const BigFloat& b) { *this = *this * b; return *this; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    BigFloat abs() const {
        BigFloat r(precision());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat log() const {
        BigFloat r(precision());
        mpfr_log(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat exp() const {
        BigFloat r(precision());
        mpfr_exp(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat pow_si(long e) const {
        BigFloat r(precision());
        mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }

    static BigFloat log_of(const mpz_class& z, mpfr_prec_t prec) {
        return BigFloat(z, prec).log();
    }

  private:
    static mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) {
        return a.precision() > b.precision() ? a.precision() : b.precision();
    }
    mpfr_t v_;
};

}  // namespace aridyn
