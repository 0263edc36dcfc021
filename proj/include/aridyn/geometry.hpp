#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aridyn/errors.hpp"
#include "aridyn/linalg.hpp"
#include "aridyn/numeric.hpp"

namespace aridyn {

// P^{n_1} x ... x P^{n_k} over Q.
struct ProductSpace {
    std::vector<int> factor_dims;  // n_j >= 1

    int factor_count() const { return static_cast<int>(factor_dims.size()); }
    int coords_in_factor(int j) const { return factor_dims[j] + 1; }
    int var_count() const;
    int var_offset(int j) const;  // index of the first coordinate of factor j
    void validate() const;

    friend bool operator==(const ProductSpace&, const ProductSpace&) = default;
};

// A rational point in normalized integral coordinates: per factor, coprime
// integers whose first nonzero entry is positive. Equality of points is
// coordinate equality of this canonical form.
class ProjectiveTuplePoint {
  public:
    static ProjectiveTuplePoint from_integers(ProductSpace space,
                                              std::vector<std::vector<Int>> coords);
    static ProjectiveTuplePoint from_rationals(ProductSpace space,
                                               const std::vector<std::vector<Rat>>& coords);

    const ProductSpace& space() const { return space_; }
    const std::vector<std::vector<Int>>& coords() const { return coords_; }
    const std::vector<Int>& factor(int j) const { return coords_[j]; }

    // max_i |x_{j,i}| of the normalized factor, the exact datum behind the
    // log-max height.
    Int max_abs(int j) const;

    // Bit length of the largest coordinate across all factors.
    std::size_t coord_bits() const;

    std::string to_string() const;

    friend bool operator==(const ProjectiveTuplePoint&, const ProjectiveTuplePoint&) = default;

    // gcd-and-sign canonical form of one factor vector; throws DomainError on
    // the zero vector.
    static std::vector<Int> normalize_vector(std::vector<Int> v);

  private:
    ProjectiveTuplePoint() = default;
    ProductSpace space_;
    std::vector<std::vector<Int>> coords_;
};

// One multihomogeneous term: coeff * prod_v x_v^{exps[v]} over the flattened
// variable list of the ambient space.
struct Term {
    Int coeff;
    std::vector<unsigned> exps;
};

// Integer-coefficient polynomial in the flattened coordinates, kept in a
// canonical sorted-term form.
class Poly {
  public:
    Poly() = default;
    static Poly from_terms(int var_count, std::vector<Term> terms);
    static Poly monomial(int var_count, const Int& coeff, const std::vector<unsigned>& exps);
    static Poly zero(int var_count) { return from_terms(var_count, {}); }

    int var_count() const { return var_count_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Int max_abs_coeff() const;

    Int eval(const std::vector<Int>& vars) const;

    // Degree in the variables of each factor, if the polynomial is
    // multihomogeneous; nullopt otherwise.
    std::optional<std::vector<long>> multidegree(const ProductSpace& space) const;

    Poly operator+(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly pow(unsigned e, std::size_t term_budget) const;

    // Replaces variable v by args[v]; used by morphism composition.
    Poly substitute(const std::vector<Poly>& args, std::size_t term_budget) const;

    friend bool operator==(const Poly&, const Poly&) = default;

  private:
    int var_count_ = 0;
    std::vector<Term> terms_;
    void canonicalize();
};

enum class RegularityMode { Total, OrbitChecked };

struct ComposeBudget {
    std::size_t max_terms = 200000;
    std::size_t max_coeff_bits = 1u << 20;
};

// A self-map of a product of projective spaces given by multihomogeneous
// polynomial components with integer coefficients.
class MorphismSpec {
  public:
    // components[i] lists the n_i+1 coordinate polynomials of output factor i.
    MorphismSpec(ProductSpace space, std::vector<std::vector<Poly>> components,
                 RegularityMode mode = RegularityMode::OrbitChecked);

    const ProductSpace& space() const { return space_; }
    const std::vector<std::vector<Poly>>& components() const { return components_; }
    RegularityMode mode() const { return mode_; }

    // d_{ij} = degree of output factor i in the variables of input factor j.
    const std::vector<std::vector<long>>& multidegree_matrix() const { return multidegree_; }
    QMat multidegree_qmat() const;

    // Degrees (d_1, ..., d_k) when every component of factor j is a bare
    // power +-x_{j,i}^{d_j} of its own coordinate. Such maps transform the
    // per-factor log-max heights exactly, which upgrades several downstream
    // certificates from heuristic to closed-form.
    std::optional<std::vector<long>> power_map_degrees() const;

    std::string to_string() const;

    friend bool operator==(const MorphismSpec&, const MorphismSpec&);

  private:
    ProductSpace space_;
    std::vector<std::vector<Poly>> components_;
    std::vector<std::vector<long>> multidegree_;
    RegularityMode mode_;
};

struct OrbitSegment {
    ProjectiveTuplePoint base;
    std::vector<ProjectiveTuplePoint> points;  // points[n] = f^n(base)
    std::size_t max_coord_bits = 0;
    // Set when a bit-size budget stopped the walk early: index of the first
    // point NOT computed.
    std::optional<long> truncated_at;

    long length() const { return static_cast<long>(points.size()); }
};

ProjectiveTuplePoint evaluate(const MorphismSpec& f, const ProjectiveTuplePoint& P);

OrbitSegment iterate(const MorphismSpec& f, const ProjectiveTuplePoint& P, long N);

// Same, but stops (without error) as soon as the next point would exceed
// max_coord_bits in some coordinate.
OrbitSegment iterate_budgeted(const MorphismSpec& f, const ProjectiveTuplePoint& P, long N,
                              std::size_t max_coord_bits);

MorphismSpec compose(const MorphismSpec& f, const MorphismSpec& g,
                     const ComposeBudget& budget = {});  // f after g

MorphismSpec compose_power(const MorphismSpec& f, long p, const ComposeBudget& budget = {});

}  // namespace aridyn
