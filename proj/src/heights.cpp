#include "aridyn/heights.hpp"

#include <algorithm>
#include <cmath>

namespace aridyn {

double factor_height(const ProjectiveTuplePoint& P, int j) {
    return log_int(P.max_abs(j));
}

double standard_height(const ProjectiveTuplePoint& P) {
    double h = 0;
    for (int j = 0; j < P.space().factor_count(); ++j) h += factor_height(P, j);
    return h;
}

double height_wrt(const ProjectiveTuplePoint& P, const DivisorClass& D) {
    if (static_cast<int>(D.coeffs.size()) != P.space().factor_count())
        throw DomainError("height_wrt: divisor dimension mismatch");
    double h = 0;
    for (int j = 0; j < P.space().factor_count(); ++j) {
        if (sgn(D.coeffs[j]) == 0) continue;
        h += to_double(D.coeffs[j]) * factor_height(P, j);
    }
    return h;
}

BigFloat height_wrt_hp(const ProjectiveTuplePoint& P, const DivisorClass& D, mpfr_prec_t prec) {
    if (static_cast<int>(D.coeffs.size()) != P.space().factor_count())
        throw DomainError("height_wrt_hp: divisor dimension mismatch");
    BigFloat h(0.0, prec);
    for (int j = 0; j < P.space().factor_count(); ++j) {
        if (sgn(D.coeffs[j]) == 0) continue;
        h += BigFloat(D.coeffs[j], prec) * BigFloat::log_of(P.max_abs(j), prec);
    }
    return h;
}

double HeightSequence::value_hp(long n, const std::vector<Rat>& coeffs, mpfr_prec_t prec) const {
    BigFloat h(0.0, prec);
    for (size_t j = 0; j < coeffs.size(); ++j) {
        if (sgn(coeffs[j]) == 0) continue;
        h += BigFloat(coeffs[j], prec) * BigFloat::log_of(factor_logs[n][j], prec);
    }
    return h.to_double();
}

HeightSequence height_sequence(const OrbitSegment& orbit, const DivisorClass& D) {
    HeightSequence seq;
    seq.divisor = D;
    seq.max_coord_bits = orbit.max_coord_bits;
    seq.values.reserve(orbit.points.size());
    seq.factor_logs.reserve(orbit.points.size());
    for (const auto& P : orbit.points) {
        seq.values.push_back(height_wrt(P, D));
        std::vector<Int> logs;
        logs.reserve(P.space().factor_count());
        for (int j = 0; j < P.space().factor_count(); ++j) logs.push_back(P.max_abs(j));
        seq.factor_logs.push_back(std::move(logs));
    }
    return seq;
}

HeightSequence height_sequence(const MorphismSpec& f, const ProjectiveTuplePoint& P,
                               const DivisorClass& D, long N) {
    return height_sequence(iterate(f, P, N), D);
}

DominanceReport dominance_check(const HeightSequence& seqD, const HeightSequence& seqH) {
    if (seqD.length() != seqH.length())
        throw DomainError("dominance_check: sequences have different lengths");
    if (!seqH.divisor.is_ample())
        throw DomainError("dominance_check: reference divisor must be ample");
    DominanceReport rep;
    Rat max_abs_d(0), min_h(0);
    for (const Rat& c : seqD.divisor.coeffs) {
        Rat a = abs(c);
        if (a > max_abs_d) max_abs_d = a;
    }
    min_h = seqH.divisor.coeffs[0];
    for (const Rat& c : seqH.divisor.coeffs) min_h = std::min(min_h, c);
    rep.apriori_bound = to_double(max_abs_d / min_h);
    for (long n = 0; n < seqD.length(); ++n) {
        double r = std::fabs(seqD.values[n]) / std::max(1.0, seqH.values[n]);
        if (r > rep.sup_ratio) {
            rep.sup_ratio = r;
            rep.arg_sup = n;
        }
    }
    if (rep.sup_ratio > rep.apriori_bound * (1 + 1e-9) + 1e-12)
        throw AssertionFailure("dominance_check: a-priori height bound violated");
    return rep;
}

}  // namespace aridyn
