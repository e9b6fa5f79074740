#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zigzag/arith.hpp"
#include "zigzag/graph.hpp"
#include "zigzag/paintbox.hpp"
#include "zigzag/qsym.hpp"
#include "zigzag/templates.hpp"

namespace zigzag {

// Value of a harmonic function: zero, a positive rational, or +infinity.
class ExtValue {
public:
    enum class Kind { Zero, Finite, Infinity };

    ExtValue() = default;  // zero
    static ExtValue zero() { return {}; }
    static ExtValue infinity();
    // Zero maps to ZERO; negative values are rejected.
    static ExtValue finite(const Rational& q);

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::Zero; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_infinite() const { return kind_ == Kind::Infinity; }
    // Zero for ZERO; throws for INFINITY.
    Rational value() const;

    ExtValue operator+(const ExtValue& o) const;
    // Scaling by a nonnegative rational; 0 * infinity is an internal error.
    ExtValue scaled(const Rational& factor) const;

    bool operator==(const ExtValue& o) const { return kind_ == o.kind_ && value_ == o.value_; }

    // "0", "p/q" or "inf".
    std::string str() const;

private:
    Kind kind_ = Kind::Zero;
    Rational value_ = 0;
};

// Polynomial in a formal epsilon with rational coefficients; dense by exponent.
class EpsPolynomial {
public:
    EpsPolynomial() = default;
    EpsPolynomial(int constant);  // NOLINT: ring literals 0 and 1
    EpsPolynomial(const Rational& constant);  // NOLINT
    static EpsPolynomial eps();

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t exponent) const;
    bool is_zero() const { return coeffs_.empty(); }
    // Least exponent with a nonzero coefficient; nullopt for the zero polynomial.
    std::optional<std::size_t> valuation() const;
    Rational leading_coefficient() const;  // at the valuation

    EpsPolynomial operator+(const EpsPolynomial& o) const;
    EpsPolynomial operator*(const EpsPolynomial& o) const;
    bool operator==(const EpsPolynomial& o) const { return coeffs_ == o.coeffs_; }

    std::string str() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

using EpsInterval = OrientedInterval<EpsPolynomial>;

// Semifinite template together with positive weights on its infinite clusters summing to 1.
class GrowthModel {
public:
    GrowthModel(Template t, std::vector<Rational> weights);

    // "<template> | w=1/3,1/6,1/2"
    static GrowthModel parse(std::string_view text);
    std::string str() const;

    const Template& templ() const { return template_; }
    const std::vector<Rational>& weights() const { return weights_; }
    const FlangeDecomposition& decomposition() const { return decomposition_; }
    // Interval tuple of each section: its infinite clusters with their weights.
    const std::vector<IntervalTuple>& section_intervals() const { return section_intervals_; }
    // Weights read as a paintbox, oriented by the signs of the infinite clusters.
    Paintbox paintbox() const;

    bool operator==(const GrowthModel& o) const {
        return template_ == o.template_ && weights_ == o.weights_;
    }

private:
    Template template_;
    std::vector<Rational> weights_;
    FlangeDecomposition decomposition_;
    std::vector<IntervalTuple> section_intervals_;
};

// ZERO off zeta(t), INFINITY on J(t), otherwise the product of section evaluations
// of the injected components.
ExtValue phi_tw(const GrowthModel& model, const Vertex& v);

// phi(v) equals the extended sum over upper covers. Requires v in zeta(t).
bool check_harmonic_at(const GrowthModel& model, const Vertex& v);

// Flange blocks become intervals of length epsilon, sections keep their weights.
std::vector<EpsInterval> build_w_eps(const GrowthModel& model);
Template template_of_w_eps(const std::vector<EpsInterval>& we);

EpsPolynomial eps_expansion(const Vertex& v, const std::vector<EpsInterval>& we);

struct LimitReport {
    std::size_t n = 0;             // valuation at nu_t
    Rational constant = 0;         // phi(mu) / [eps^n] F_mu(w_eps)
    bool ok = false;
    std::size_t checked = 0;       // vertices mu >= nu_t in zeta(t_{w_eps}) up to the cap
    std::size_t in_support = 0;    // of which in zeta(t)
    std::string failure;
};

// Scans all mu >= nu_t in zeta(t_{w_eps}) up to `level_cap`: on zeta(t) the valuation is n
// and phi(mu) = const * [eps^n] F_mu(w_eps); elsewhere phi vanishes and so does [eps^n].
LimitReport check_limit_formula(const GrowthModel& model, std::size_t level_cap);

// sum_nu c^nu_{a,b} phi(nu) == phi_w(a) * phi(b) for b in zeta(t) \ J(t).
bool check_ring_identity(const GrowthModel& model, const Vertex& a, const Vertex& b,
                         std::size_t degree_cap = kDefaultDegreeCap);

struct ApproxReport {
    bool certified = false;  // every element has a dominance certificate below the target
    bool finite = false;
    bool increasing = false;
    bool exceeds_threshold = false;
    std::vector<ExtValue> values;
    std::vector<std::size_t> certificate_levels;
    bool ok() const { return certified && finite && increasing && exceeds_threshold; }
};

// Checks a candidate approximating sequence for a vertex of J(t). Dominance is certified
// inside zeta(t) by single-level comparison, searched up to `level_cap`.
ApproxReport check_approx_sequence(const GrowthModel& model, const Vertex& target,
                                   const std::vector<FormalCombination>& seq, const Rational& threshold,
                                   std::size_t level_cap);

ExtValue phi_tw(const GrowthModel& model, const FormalCombination& c);

}  // namespace zigzag
