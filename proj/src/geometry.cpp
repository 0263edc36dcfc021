#include "aridyn/geometry.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace aridyn {

int ProductSpace::var_count() const {
    int n = 0;
    for (int d : factor_dims) n += d + 1;
    return n;
}

int ProductSpace::var_offset(int j) const {
    int off = 0;
    for (int i = 0; i < j; ++i) off += factor_dims[i] + 1;
    return off;
}

void ProductSpace::validate() const {
    if (factor_dims.empty()) throw DomainError("ProductSpace: need at least one factor");
    for (int d : factor_dims)
        if (d < 1) throw DomainError("ProductSpace: factor dimensions must be >= 1");
}

std::vector<Int> ProjectiveTuplePoint::normalize_vector(std::vector<Int> v) {
    Int g(0);
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (sgn(g) == 0) throw DomainError("projective factor vector is zero");
    int lead_sign = 0;
    for (const Int& x : v) {
        if (sgn(x) != 0) { lead_sign = sgn(x); break; }
    }
    if (lead_sign < 0) g = -g;
    for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

ProjectiveTuplePoint ProjectiveTuplePoint::from_integers(ProductSpace space,
                                                         std::vector<std::vector<Int>> coords) {
    space.validate();
    if (static_cast<int>(coords.size()) != space.factor_count())
        throw DomainError("point: factor count mismatch");
    ProjectiveTuplePoint P;
    P.space_ = std::move(space);
    P.coords_.reserve(coords.size());
    for (int j = 0; j < static_cast<int>(coords.size()); ++j) {
        if (static_cast<int>(coords[j].size()) != P.space_.coords_in_factor(j))
            throw DomainError("point: coordinate count mismatch in factor " + std::to_string(j));
        P.coords_.push_back(normalize_vector(std::move(coords[j])));
    }
    return P;
}

ProjectiveTuplePoint ProjectiveTuplePoint::from_rationals(
    ProductSpace space, const std::vector<std::vector<Rat>>& coords) {
    std::vector<std::vector<Int>> ints;
    ints.reserve(coords.size());
    for (const auto& fac : coords) {
        Int lcm(1);
        for (const Rat& q : fac) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<Int> iv;
        iv.reserve(fac.size());
        for (const Rat& q : fac) {
            Rat scaled = q * Rat(lcm);
            iv.push_back(scaled.get_num());
        }
        ints.push_back(std::move(iv));
    }
    return from_integers(std::move(space), std::move(ints));
}

Int ProjectiveTuplePoint::max_abs(int j) const {
    Int m(0);
    for (const Int& x : coords_[j]) {
        Int a = abs(x);
        if (a > m) m = a;
    }
    return m;
}

std::size_t ProjectiveTuplePoint::coord_bits() const {
    std::size_t m = 0;
    for (const auto& fac : coords_)
        for (const Int& x : fac) m = std::max(m, bit_size(x));
    return m;
}

std::string ProjectiveTuplePoint::to_string() const {
    std::ostringstream os;
    for (size_t j = 0; j < coords_.size(); ++j) {
        os << (j ? " x " : "") << "(";
        for (size_t i = 0; i < coords_[j].size(); ++i)
            os << (i ? ":" : "") << coords_[j][i].get_str();
        os << ")";
    }
    return os.str();
}

void Poly::canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.exps < b.exps; });
    std::vector<Term> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().exps == t.exps)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    terms_.clear();
    for (auto& t : merged)
        if (sgn(t.coeff) != 0) terms_.push_back(std::move(t));
}

Poly Poly::from_terms(int var_count, std::vector<Term> terms) {
    Poly p;
    p.var_count_ = var_count;
    for (auto& t : terms) {
        if (static_cast<int>(t.exps.size()) != var_count)
            throw DomainError("Poly: exponent tuple length mismatch");
    }
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
}

Poly Poly::monomial(int var_count, const Int& coeff, const std::vector<unsigned>& exps) {
    return from_terms(var_count, {Term{coeff, exps}});
}

Int Poly::max_abs_coeff() const {
    Int m(0);
    for (const auto& t : terms_) {
        Int a = abs(t.coeff);
        if (a > m) m = a;
    }
    return m;
}

Int Poly::eval(const std::vector<Int>& vars) const {
    if (static_cast<int>(vars.size()) != var_count_) throw DomainError("Poly::eval: arity mismatch");
    Int acc(0), mono, pw;
    for (const auto& t : terms_) {
        mono = t.coeff;
        for (int v = 0; v < var_count_; ++v) {
            if (t.exps[v] == 0) continue;
            mpz_pow_ui(pw.get_mpz_t(), vars[v].get_mpz_t(), t.exps[v]);
            mono *= pw;
        }
        acc += mono;
    }
    return acc;
}

std::optional<std::vector<long>> Poly::multidegree(const ProductSpace& space) const {
    if (terms_.empty()) return std::nullopt;
    std::vector<long> deg(space.factor_count(), 0);
    bool first = true;
    for (const auto& t : terms_) {
        std::vector<long> d(space.factor_count(), 0);
        for (int j = 0; j < space.factor_count(); ++j) {
            int off = space.var_offset(j);
            for (int i = 0; i < space.coords_in_factor(j); ++i) d[j] += t.exps[off + i];
        }
        if (first) {
            deg = d;
            first = false;
        } else if (d != deg) {
            return std::nullopt;
        }
    }
    return deg;
}

Poly Poly::operator+(const Poly& o) const {
    if (var_count_ != o.var_count_) throw DomainError("Poly: arity mismatch in sum");
    std::vector<Term> ts = terms_;
    ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
    return from_terms(var_count_, std::move(ts));
}

Poly Poly::operator*(const Poly& o) const {
    if (var_count_ != o.var_count_) throw DomainError("Poly: arity mismatch in product");
    std::map<std::vector<unsigned>, Int> acc;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            std::vector<unsigned> e(var_count_);
            for (int v = 0; v < var_count_; ++v) e[v] = a.exps[v] + b.exps[v];
            acc[std::move(e)] += a.coeff * b.coeff;
        }
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (sgn(c) != 0) ts.push_back(Term{c, e});
    Poly p;
    p.var_count_ = var_count_;
    p.terms_ = std::move(ts);  // already sorted and merged by the map
    return p;
}

Poly Poly::pow(unsigned e, std::size_t term_budget) const {
    Poly acc = monomial(var_count_, Int(1), std::vector<unsigned>(var_count_, 0));
    Poly base = *this;
    while (e) {
        if (e & 1) {
            acc = acc * base;
            if (acc.term_count() > term_budget) throw ResourceError("Poly::pow: term budget exceeded");
        }
        e >>= 1;
        if (e) {
            base = base * base;
            if (base.term_count() > term_budget) throw ResourceError("Poly::pow: term budget exceeded");
        }
    }
    return acc;
}

Poly Poly::substitute(const std::vector<Poly>& args, std::size_t term_budget) const {
    if (static_cast<int>(args.size()) != var_count_)
        throw DomainError("Poly::substitute: arity mismatch");
    int out_vars = args.empty() ? 0 : args[0].var_count();
    Poly acc = Poly::zero(out_vars);
    for (const auto& t : terms_) {
        Poly mono = monomial(out_vars, t.coeff, std::vector<unsigned>(out_vars, 0));
        for (int v = 0; v < var_count_; ++v) {
            if (t.exps[v] == 0) continue;
            mono = mono * args[v].pow(t.exps[v], term_budget);
            if (mono.term_count() > term_budget)
                throw ResourceError("Poly::substitute: term budget exceeded");
        }
        acc = acc + mono;
        if (acc.term_count() > term_budget)
            throw ResourceError("Poly::substitute: term budget exceeded");
    }
    return acc;
}

MorphismSpec::MorphismSpec(ProductSpace space, std::vector<std::vector<Poly>> components,
                           RegularityMode mode)
    : space_(std::move(space)), components_(std::move(components)), mode_(mode) {
    space_.validate();
    if (static_cast<int>(components_.size()) != space_.factor_count())
        throw DomainError("MorphismSpec: output factor count mismatch");
    multidegree_.assign(space_.factor_count(), {});
    for (int i = 0; i < space_.factor_count(); ++i) {
        if (static_cast<int>(components_[i].size()) != space_.coords_in_factor(i))
            throw DomainError("MorphismSpec: component count mismatch in factor " +
                              std::to_string(i));
        std::optional<std::vector<long>> row;
        for (const auto& comp : components_[i]) {
            if (comp.var_count() != space_.var_count())
                throw DomainError("MorphismSpec: component arity mismatch");
            auto d = comp.multidegree(space_);
            if (!d)
                throw DomainError(
                    "MorphismSpec: component of factor " + std::to_string(i) +
                    " is zero or not multihomogeneous");
            if (row && *row != *d)
                throw DomainError("MorphismSpec: components of factor " + std::to_string(i) +
                                  " have different multidegrees");
            row = d;
        }
        multidegree_[i] = *row;
    }
}

QMat MorphismSpec::multidegree_qmat() const {
    int k = space_.factor_count();
    QMat m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m.at(i, j) = Rat(multidegree_[i][j]);
    return m;
}

std::optional<std::vector<long>> MorphismSpec::power_map_degrees() const {
    std::vector<long> degs(space_.factor_count(), 0);
    for (int j = 0; j < space_.factor_count(); ++j) {
        long d = multidegree_[j][j];
        if (d < 1) return std::nullopt;
        for (int l = 0; l < space_.factor_count(); ++l)
            if (l != j && multidegree_[j][l] != 0) return std::nullopt;
        int off = space_.var_offset(j);
        for (int i = 0; i < space_.coords_in_factor(j); ++i) {
            const Poly& c = components_[j][i];
            if (c.term_count() != 1) return std::nullopt;
            const Term& t = c.terms()[0];
            Int ac = abs(t.coeff);
            if (ac != 1) return std::nullopt;
            for (int v = 0; v < space_.var_count(); ++v) {
                unsigned want = (v == off + i) ? static_cast<unsigned>(d) : 0u;
                if (t.exps[v] != want) return std::nullopt;
            }
        }
        degs[j] = d;
    }
    return degs;
}

std::string MorphismSpec::to_string() const {
    std::ostringstream os;
    os << "morphism on";
    for (int d : space_.factor_dims) os << " P^" << d;
    os << ", multidegree [";
    for (int i = 0; i < space_.factor_count(); ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < space_.factor_count(); ++j)
            os << (j ? "," : "") << multidegree_[i][j];
    }
    os << "]";
    return os.str();
}

bool operator==(const MorphismSpec& a, const MorphismSpec& b) {
    return a.space_ == b.space_ && a.components_ == b.components_;
}

namespace {

// Per-factor projective normalization of a raw image vector: divide the whole
// factor by the integer content. Keeps orbit coordinates bit-minimal.
std::vector<Int> normalize_image_factor(std::vector<Int> v, long step, int factor,
                                        RegularityMode mode) {
    bool all_zero = true;
    for (const Int& x : v)
        if (sgn(x) != 0) { all_zero = false; break; }
    if (all_zero) {
        if (mode == RegularityMode::Total)
            throw AssertionFailure("map declared total but factor " + std::to_string(factor) +
                                   " vanished at iteration " + std::to_string(step));
        throw IndeterminacyError("orbit hit the base locus in factor " + std::to_string(factor) +
                                     " at iteration " + std::to_string(step),
                                 step, factor);
    }
    return ProjectiveTuplePoint::normalize_vector(std::move(v));
}

ProjectiveTuplePoint evaluate_at_step(const MorphismSpec& f, const ProjectiveTuplePoint& P,
                                      long step) {
    if (P.space() != f.space()) throw DomainError("evaluate: point lies in a different space");
    std::vector<Int> flat;
    flat.reserve(f.space().var_count());
    for (const auto& fac : P.coords()) flat.insert(flat.end(), fac.begin(), fac.end());
    std::vector<std::vector<Int>> out;
    out.reserve(f.components().size());
    for (int i = 0; i < f.space().factor_count(); ++i) {
        std::vector<Int> img;
        img.reserve(f.components()[i].size());
        for (const auto& comp : f.components()[i]) img.push_back(comp.eval(flat));
        out.push_back(normalize_image_factor(std::move(img), step, i, f.mode()));
    }
    return ProjectiveTuplePoint::from_integers(f.space(), std::move(out));
}

}  // namespace

ProjectiveTuplePoint evaluate(const MorphismSpec& f, const ProjectiveTuplePoint& P) {
    return evaluate_at_step(f, P, 0);
}

OrbitSegment iterate_budgeted(const MorphismSpec& f, const ProjectiveTuplePoint& P, long N,
                              std::size_t max_coord_bits) {
    if (N < 0) throw DomainError("iterate: negative length");
    OrbitSegment seg{P, {P}, P.coord_bits(), std::nullopt};
    for (long n = 0; n < N; ++n) {
        ProjectiveTuplePoint next = evaluate_at_step(f, seg.points.back(), n);
        std::size_t bits = next.coord_bits();
        if (max_coord_bits && bits > max_coord_bits) {
            seg.truncated_at = n + 1;
            break;
        }
        seg.max_coord_bits = std::max(seg.max_coord_bits, bits);
        seg.points.push_back(std::move(next));
    }
    return seg;
}

OrbitSegment iterate(const MorphismSpec& f, const ProjectiveTuplePoint& P, long N) {
    return iterate_budgeted(f, P, N, 0);
}

namespace {

// Divides all components of a factor by their common integer content and
// normalizes the sign of the first nonzero coefficient, so that composed maps
// have a canonical representation.
void normalize_map_factor(std::vector<Poly>& comps, int var_count) {
    Int g(0);
    for (const auto& c : comps)
        for (const auto& t : c.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (sgn(g) == 0) return;  // all components zero; construction will reject
    int lead = 0;
    for (const auto& c : comps) {
        if (!c.terms().empty()) { lead = sgn(c.terms().front().coeff); break; }
    }
    if (lead < 0) g = -g;
    if (g == 1) return;
    for (auto& c : comps) {
        std::vector<Term> ts = c.terms();
        for (auto& t : ts) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
        c = Poly::from_terms(var_count, std::move(ts));
    }
}

}  // namespace

MorphismSpec compose(const MorphismSpec& f, const MorphismSpec& g, const ComposeBudget& budget) {
    if (f.space() != g.space()) throw DomainError("compose: spaces differ");
    std::vector<Poly> args;
    args.reserve(g.space().var_count());
    for (const auto& fac : g.components())
        for (const auto& comp : fac) args.push_back(comp);
    std::vector<std::vector<Poly>> out;
    out.reserve(f.components().size());
    for (const auto& fac : f.components()) {
        std::vector<Poly> comps;
        comps.reserve(fac.size());
        for (const auto& comp : fac) {
            Poly s = comp.substitute(args, budget.max_terms);
            if (bit_size(s.max_abs_coeff()) > budget.max_coeff_bits)
                throw ResourceError("compose: coefficient budget exceeded");
            comps.push_back(std::move(s));
        }
        normalize_map_factor(comps, f.space().var_count());
        out.push_back(std::move(comps));
    }
    RegularityMode mode = (f.mode() == RegularityMode::Total && g.mode() == RegularityMode::Total)
                              ? RegularityMode::Total
                              : RegularityMode::OrbitChecked;
    return MorphismSpec(f.space(), std::move(out), mode);
}

MorphismSpec compose_power(const MorphismSpec& f, long p, const ComposeBudget& budget) {
    if (p < 1) throw DomainError("compose_power: exponent must be >= 1");
    MorphismSpec acc = f;
    for (long i = 1; i < p; ++i) acc = compose(f, acc, budget);
    return acc;
}

}  // namespace aridyn
