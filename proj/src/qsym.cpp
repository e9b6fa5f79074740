#include "zigzag/qsym.hpp"

#include <algorithm>
#include <bit>

#include "zigzag/graph.hpp"

namespace zigzag {

namespace {

constexpr unsigned kNibble = 4;

unsigned nibble(std::uint64_t code, std::size_t var) {
    return static_cast<unsigned>((code >> (kNibble * var)) & 0xFu);
}

bool nibbles_le(std::uint64_t small, std::uint64_t big, std::size_t variables) {
    for (std::size_t v = 0; v < variables; ++v) {
        if (nibble(small, v) > nibble(big, v)) return false;
    }
    return true;
}

// Packed monomial x_1^{a_1} ... x_k^{a_k} of the composition whose descent mask is `mask`
// (bit j set: strict step between positions j and j+1).
std::uint64_t packed_code(std::uint64_t mask, std::size_t degree) {
    std::uint64_t code = 0;
    std::size_t var = 0;
    for (std::size_t j = 0; j < degree; ++j) {
        code += std::uint64_t{1} << (kNibble * var);
        if (j + 1 < degree && ((mask >> j) & 1u)) ++var;
    }
    return code;
}

}  // namespace

QuasiPolynomial::QuasiPolynomial(std::size_t variables) : variables_(variables) {
    if (variables > kMaxVariables) throw PreconditionError("too many variables for a packed polynomial");
}

std::uint64_t QuasiPolynomial::encode(const std::vector<unsigned>& exponents) {
    if (exponents.size() > kMaxVariables) throw PreconditionError("too many variables for a packed polynomial");
    std::uint64_t code = 0;
    for (std::size_t v = 0; v < exponents.size(); ++v) {
        if (exponents[v] > kMaxExponent) throw PreconditionError("exponent too large for a packed polynomial");
        code |= std::uint64_t{exponents[v]} << (kNibble * v);
    }
    return code;
}

std::vector<unsigned> QuasiPolynomial::exponents(std::uint64_t code) const {
    std::vector<unsigned> e(variables_);
    for (std::size_t v = 0; v < variables_; ++v) e[v] = nibble(code, v);
    return e;
}

Rational QuasiPolynomial::coefficient(const std::vector<unsigned>& exponents) const {
    if (exponents.size() != variables_) throw PreconditionError("exponent vector has the wrong length");
    return coefficient_code(encode(exponents));
}

Rational QuasiPolynomial::coefficient_code(std::uint64_t code) const {
    auto it = terms_.find(code);
    return it == terms_.end() ? Rational(0) : it->second;
}

void QuasiPolynomial::add(std::uint64_t code, const Rational& q) {
    if (q == 0) return;
    auto [it, inserted] = terms_.emplace(code, q);
    if (!inserted) {
        it->second += q;
        if (it->second == 0) terms_.erase(it);
    }
}

QuasiPolynomial QuasiPolynomial::operator*(const QuasiPolynomial& o) const {
    if (variables_ != o.variables_) throw PreconditionError("multiplying polynomials in different variables");
    QuasiPolynomial out(variables_);
    for (const auto& [c1, q1] : terms_) {
        for (const auto& [c2, q2] : o.terms_) {
            for (std::size_t v = 0; v < variables_; ++v) {
                if (nibble(c1, v) + nibble(c2, v) > kMaxExponent)
                    throw PreconditionError("product exponent too large for a packed polynomial");
            }
            out.add(c1 + c2, q1 * q2);
        }
    }
    return out;
}

bool QuasiPolynomial::operator==(const QuasiPolynomial& o) const {
    return variables_ == o.variables_ && terms_ == o.terms_;
}

QuasiPolynomial monomial_expansion(const BinaryWord& w, std::size_t variables) {
    const std::size_t degree = w.size() + 1;
    if (variables < degree)
        throw PreconditionError("monomial_expansion needs at least " + std::to_string(degree) + " variables");
    if (degree > QuasiPolynomial::kMaxExponent) throw PreconditionError("degree too large for a packed polynomial");
    QuasiPolynomial p(variables);
    // Depth-first over chains; symbol j decides whether step j -> j+1 must be strict.
    std::vector<std::size_t> chain(degree);
    std::function<void(std::size_t, std::uint64_t)> extend = [&](std::size_t pos, std::uint64_t code) {
        if (pos == degree) {
            p.add(code, 1);
            return;
        }
        std::size_t lo = 0;
        if (pos > 0) lo = chain[pos - 1] + (w[pos - 1] == Sign::Minus ? 1 : 0);
        for (std::size_t idx = lo; idx < variables; ++idx) {
            chain[pos] = idx;
            extend(pos + 1, code + (std::uint64_t{1} << (kNibble * idx)));
        }
    };
    extend(0, 0);
    return p;
}

FExpansion to_fundamental(const QuasiPolynomial& p, std::size_t degree) {
    if (degree == 0) {
        FExpansion out;
        if (auto c = p.coefficient_code(0); c != 0) out[Vertex::root()] = c;
        return out;
    }
    if (p.variables() < degree) throw PreconditionError("to_fundamental needs at least `degree` variables");
    const std::size_t bits = degree - 1;
    const std::uint64_t count = std::uint64_t{1} << bits;
    std::vector<Rational> coeff(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) coeff[mask] = p.coefficient_code(packed_code(mask, degree));

    // F_w contributes M_alpha exactly when the descent mask of alpha contains that of w.
    std::vector<std::uint64_t> order(count);
    for (std::uint64_t m = 0; m < count; ++m) order[m] = m;
    std::stable_sort(order.begin(), order.end(),
                     [](std::uint64_t x, std::uint64_t y) { return std::popcount(x) < std::popcount(y); });
    FExpansion out;
    const std::uint64_t full = count - 1;
    for (std::uint64_t mask : order) {
        const Rational c = coeff[mask];
        if (c == 0) continue;
        if (c < 0) throw InternalError("negative coefficient while re-expanding in the fundamental basis");
        out[Vertex(BinaryWord(mask, bits))] = c;
        const std::uint64_t free = full & ~mask;
        for (std::uint64_t sub = free;; sub = (sub - 1) & free) {
            coeff[mask | sub] -= c;
            if (sub == 0) break;
        }
    }
    return out;
}

FExpansion product_F(const Vertex& a, const Vertex& b, std::size_t degree_cap, std::size_t variables) {
    const std::size_t degree = a.level() + b.level();
    if (degree > degree_cap)
        throw PreconditionError("product degree " + std::to_string(degree) + " exceeds the cap " +
                                std::to_string(degree_cap));
    if (a.is_root()) return FExpansion{{b, Rational(1)}};
    if (b.is_root()) return FExpansion{{a, Rational(1)}};
    if (variables == 0) variables = degree;
    if (variables < degree) throw PreconditionError("product_F needs at least as many variables as the degree");

    const Vertex& small = a.level() <= b.level() ? a : b;
    const Vertex& large = a.level() <= b.level() ? b : a;
    const QuasiPolynomial p = monomial_expansion(small.word(), variables);
    const QuasiPolynomial q = monomial_expansion(large.word(), variables);

    // Only packed monomials x_1^{a_1}...x_k^{a_k} (all a_i > 0) are needed to recover a
    // quasisymmetric function, so the product is evaluated at those alone.
    QuasiPolynomial packed(variables);
    const std::uint64_t count = std::uint64_t{1} << (degree - 1);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        const std::uint64_t target = packed_code(mask, degree);
        Rational c = 0;
        for (const auto& [code, coeff] : p.terms()) {
            if (!nibbles_le(code, target, variables)) continue;
            auto qc = q.coefficient_code(target - code);
            if (qc != 0) c += coeff * qc;
        }
        packed.add(target, c);
    }
    return to_fundamental(packed, degree);
}

bool pieri_check(const Vertex& a, std::size_t degree_cap) {
    const auto product = product_F(Vertex(BinaryWord()), a, degree_cap);
    const auto covers = upper_covers(a);
    if (product.size() != covers.size()) return false;
    for (const auto& mu : covers) {
        auto it = product.find(mu);
        if (it == product.end() || it->second != 1) return false;
    }
    return true;
}

Rational apply_functional(const FExpansion& f, const std::function<Rational(const Vertex&)>& value) {
    Rational total = 0;
    for (const auto& [v, c] : f) total += c * value(v);
    return total;
}

}  // namespace zigzag
