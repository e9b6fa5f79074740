#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <vector>

#include "zigzag/arith.hpp"
#include "zigzag/word.hpp"

namespace zigzag {

// Polynomial in x_1..x_N with rational coefficients. Exponent vectors are packed four
// bits per variable, so at most 15 variables and exponents at most 15.
class QuasiPolynomial {
public:
    static constexpr std::size_t kMaxVariables = 15;
    static constexpr unsigned kMaxExponent = 15;

    explicit QuasiPolynomial(std::size_t variables);

    std::size_t variables() const { return variables_; }
    const std::unordered_map<std::uint64_t, Rational>& terms() const { return terms_; }

    static std::uint64_t encode(const std::vector<unsigned>& exponents);
    std::vector<unsigned> exponents(std::uint64_t code) const;

    Rational coefficient(const std::vector<unsigned>& exponents) const;
    Rational coefficient_code(std::uint64_t code) const;
    void add(std::uint64_t code, const Rational& q);

    QuasiPolynomial operator*(const QuasiPolynomial& o) const;
    bool operator==(const QuasiPolynomial& o) const;

private:
    std::size_t variables_;
    std::unordered_map<std::uint64_t, Rational> terms_;
};

// Sum over index chains i_1 <= ... <= i_n in 1..N, strict exactly where the word has '-'.
QuasiPolynomial monomial_expansion(const BinaryWord& w, std::size_t variables);

// Linear combination of fundamental quasisymmetric functions, homogeneous.
using FExpansion = std::map<Vertex, Rational>;

inline constexpr std::size_t kDefaultDegreeCap = 12;

// F_a * F_b in the fundamental basis, through explicit polynomial multiplication in
// `variables` variables (0 means the combined degree) and unitriangular re-expansion.
FExpansion product_F(const Vertex& a, const Vertex& b, std::size_t degree_cap = kDefaultDegreeCap,
                     std::size_t variables = 0);

// Rewrites a quasisymmetric polynomial homogeneous of degree n >= 1 in the F basis.
FExpansion to_fundamental(const QuasiPolynomial& p, std::size_t degree);

// F_box * F_a is the sum of F_mu over the upper covers mu of a.
bool pieri_check(const Vertex& a, std::size_t degree_cap = kDefaultDegreeCap);

// Applies a linear functional given on basis elements.
Rational apply_functional(const FExpansion& f, const std::function<Rational(const Vertex&)>& value);

}  // namespace zigzag
