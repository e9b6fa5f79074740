#include "zigzag/semifinite.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace zigzag {

ExtValue ExtValue::infinity() {
    ExtValue v;
    v.kind_ = Kind::Infinity;
    return v;
}

ExtValue ExtValue::finite(const Rational& q) {
    if (q < 0) throw InternalError("negative harmonic value " + to_string(q));
    ExtValue v;
    if (q != 0) {
        v.kind_ = Kind::Finite;
        v.value_ = q;
    }
    return v;
}

Rational ExtValue::value() const {
    if (is_infinite()) throw InternalError("value() of an infinite harmonic value");
    return value_;
}

ExtValue ExtValue::operator+(const ExtValue& o) const {
    if (is_infinite() || o.is_infinite()) return infinity();
    return finite(value_ + o.value_);
}

ExtValue ExtValue::scaled(const Rational& factor) const {
    if (factor < 0) throw InternalError("negative scaling factor");
    if (is_infinite()) {
        if (factor == 0) throw InternalError("0 * inf in extended arithmetic");
        return infinity();
    }
    return finite(value_ * factor);
}

std::string ExtValue::str() const {
    switch (kind_) {
        case Kind::Zero: return "0";
        case Kind::Finite: return to_string(value_);
        case Kind::Infinity: return "inf";
    }
    return "?";
}

EpsPolynomial::EpsPolynomial(int constant) : EpsPolynomial(Rational(constant)) {}

EpsPolynomial::EpsPolynomial(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

EpsPolynomial EpsPolynomial::eps() {
    EpsPolynomial p;
    p.coeffs_ = {Rational(0), Rational(1)};
    return p;
}

Rational EpsPolynomial::coefficient(std::size_t exponent) const {
    return exponent < coeffs_.size() ? coeffs_[exponent] : Rational(0);
}

std::optional<std::size_t> EpsPolynomial::valuation() const {
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        if (coeffs_[e] != 0) return e;
    }
    return std::nullopt;
}

Rational EpsPolynomial::leading_coefficient() const {
    auto v = valuation();
    return v ? coeffs_[*v] : Rational(0);
}

void EpsPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

EpsPolynomial EpsPolynomial::operator+(const EpsPolynomial& o) const {
    EpsPolynomial r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t e = 0; e < r.coeffs_.size(); ++e) r.coeffs_[e] = coefficient(e) + o.coefficient(e);
    r.trim();
    return r;
}

EpsPolynomial EpsPolynomial::operator*(const EpsPolynomial& o) const {
    EpsPolynomial r;
    if (is_zero() || o.is_zero()) return r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    r.trim();
    return r;
}

std::string EpsPolynomial::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        if (coeffs_[e] == 0) continue;
        if (!s.empty()) s += " + ";
        s += to_string(coeffs_[e]);
        if (e == 1) s += "*eps";
        if (e > 1) s += "*eps^" + std::to_string(e);
    }
    return s;
}

GrowthModel::GrowthModel(Template t, std::vector<Rational> weights)
    : template_(std::move(t)), weights_(std::move(weights)) {
    if (is_finite_template(template_))
        throw PreconditionError("growth model needs a semifinite template, got " + template_.str());
    if (weights_.size() != template_.infinite_count())
        throw PreconditionError("expected " + std::to_string(template_.infinite_count()) + " weights, got " +
                                std::to_string(weights_.size()));
    Rational total = 0;
    for (const auto& w : weights_) {
        if (w <= 0) throw PreconditionError("weights must be positive");
        total += w;
    }
    if (total != 1) throw PreconditionError("weights must sum to 1, got " + to_string(total));

    decomposition_ = flange_and_sections(template_);
    std::size_t next = 0;
    for (const auto& section : decomposition_.sections) {
        std::vector<Interval> ivs;
        for (const auto& c : section.clusters()) {
            if (c.infinite()) ivs.push_back({c.sign, weights_.at(next++)});
        }
        section_intervals_.emplace_back(std::move(ivs));
    }
    if (next != weights_.size()) throw InternalError("sections do not cover all infinite clusters");
}

GrowthModel GrowthModel::parse(std::string_view text) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos) throw ParseError("growth model needs '| w=...'");
    Template t = Template::parse(text.substr(0, bar));
    auto rest = text.substr(bar + 1);
    while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
    while (!rest.empty() && rest.back() == ' ') rest.remove_suffix(1);
    if (rest.substr(0, 2) != "w=") throw ParseError("weights must start with 'w='");
    rest.remove_prefix(2);
    std::vector<Rational> weights;
    std::size_t start = 0;
    while (true) {
        auto comma = rest.find(',', start);
        auto token = rest.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        weights.push_back(parse_rational(token));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    try {
        return GrowthModel(std::move(t), std::move(weights));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

std::string GrowthModel::str() const {
    std::string s = template_.str() + " | w=";
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) s += ',';
        s += to_string(weights_[i]);
    }
    return s;
}

Paintbox GrowthModel::paintbox() const {
    std::vector<Interval> ivs;
    std::size_t next = 0;
    for (const auto& c : template_.clusters()) {
        if (c.infinite()) ivs.push_back({c.sign, weights_[next++]});
    }
    return Paintbox(IntervalTuple(std::move(ivs)));
}

ExtValue phi_tw(const GrowthModel& model, const Vertex& v) {
    const Template& t = model.templ();
    if (!member(t, v)) return ExtValue::zero();
    if (member_J(t, v)) return ExtValue::infinity();
    const auto components = inject(t, v.word());
    Rational value = 1;
    for (std::size_t i = 0; i < components.size(); ++i) {
        value *= eval_F(Vertex(components[i]), model.section_intervals()[i]);
    }
    if (value == 0) throw InternalError("phi vanishes on " + v.str() + " inside the support");
    return ExtValue::finite(value);
}

ExtValue phi_tw(const GrowthModel& model, const FormalCombination& c) {
    ExtValue total;
    for (const auto& [v, q] : c.terms()) {
        if (q == 0) continue;
        total = total + phi_tw(model, v).scaled(q);
    }
    return total;
}

bool check_harmonic_at(const GrowthModel& model, const Vertex& v) {
    if (!member(model.templ(), v)) throw PreconditionError(v.str() + " lies outside the support");
    ExtValue sum;
    for (const auto& mu : upper_covers(v)) sum = sum + phi_tw(model, mu);
    return phi_tw(model, v) == sum;
}

std::vector<EpsInterval> build_w_eps(const GrowthModel& model) {
    const auto& fd = model.decomposition();
    std::vector<EpsInterval> out;
    auto push_flange = [&](const BinaryWord& a) {
        for (const auto& b : a.blocks()) out.push_back({b.sign, EpsPolynomial::eps()});
    };
    for (std::size_t i = 0; i < fd.sections.size(); ++i) {
        push_flange(fd.flange[i]);
        for (const auto& iv : model.section_intervals()[i].intervals())
            out.push_back({iv.orientation, EpsPolynomial(iv.length)});
    }
    push_flange(fd.flange.back());
    return out;
}

Template template_of_w_eps(const std::vector<EpsInterval>& we) {
    std::vector<Sign> orientations;
    for (const auto& iv : we) orientations.push_back(iv.orientation);
    return template_of_intervals(orientations);
}

EpsPolynomial eps_expansion(const Vertex& v, const std::vector<EpsInterval>& we) {
    if (v.is_root()) return EpsPolynomial(1);
    return evaluate_splittings<EpsPolynomial>(v.word(), we);
}

LimitReport check_limit_formula(const GrowthModel& model, std::size_t level_cap) {
    LimitReport report;
    const Template& t = model.templ();
    const auto we = build_w_eps(model);
    const Template twe = template_of_w_eps(we);
    const Vertex nu(minimal_full_word(t));
    if (level_cap < nu.level())
        throw PreconditionError("level cap " + std::to_string(level_cap) + " is below the level of " + nu.str());
    if (!member(t, nu) || member_J(t, nu) || !member(twe, nu))
        throw InternalError(nu.str() + " is not a full word of both templates");

    const auto base = eps_expansion(nu, we);
    const auto n = base.valuation();
    if (!n) throw InternalError("zero epsilon expansion at " + nu.str());
    report.n = *n;
    report.constant = phi_tw(model, nu).value() / base.coefficient(*n);

    auto fail = [&](const Vertex& mu, const std::string& why) {
        if (report.failure.empty()) report.failure = mu.str() + ": " + why;
    };

    std::deque<Vertex> queue{nu};
    std::unordered_set<Vertex> seen{nu};
    while (!queue.empty()) {
        Vertex mu = queue.front();
        queue.pop_front();
        ++report.checked;
        const auto e = eps_expansion(mu, we);
        const auto val = e.valuation();
        const ExtValue phi = phi_tw(model, mu);
        if (member(t, mu)) {
            ++report.in_support;
            if (!phi.is_finite()) {
                fail(mu, "phi is " + phi.str());
            } else if (val != n) {
                fail(mu, "valuation " + (val ? std::to_string(*val) : std::string("none")));
            } else if (phi.value() != report.constant * e.coefficient(*n)) {
                fail(mu, "ratio " + to_string(phi.value() / e.coefficient(*n)));
            }
        } else {
            // phi vanishes off zeta(t); the eps^n coefficient must vanish too.
            if (!phi.is_zero()) fail(mu, "phi is " + phi.str() + " off the support");
            if (val && *val <= *n) fail(mu, "valuation " + std::to_string(*val) + " off the support");
        }
        if (mu.level() >= level_cap) continue;
        for (const auto& up : upper_covers(mu)) {
            if (member(twe, up) && seen.insert(up).second) queue.push_back(up);
        }
    }
    report.ok = report.failure.empty();
    return report;
}

bool check_ring_identity(const GrowthModel& model, const Vertex& a, const Vertex& b, std::size_t degree_cap) {
    const Template& t = model.templ();
    if (!member(t, b) || member_J(t, b)) throw PreconditionError(b.str() + " is not in zeta(t) \\ J(t)");
    const auto product = product_F(a, b, degree_cap);
    ExtValue lhs;
    for (const auto& [nu, c] : product) lhs = lhs + phi_tw(model, nu).scaled(c);
    const ExtValue rhs = phi_tw(model, b).scaled(phi_w(a, model.paintbox()));
    return lhs == rhs;
}

ApproxReport check_approx_sequence(const GrowthModel& model, const Vertex& target,
                                   const std::vector<FormalCombination>& seq, const Rational& threshold,
                                   std::size_t level_cap) {
    const Template& t = model.templ();
    if (!member_J(t, target)) throw PreconditionError(target.str() + " is not in J(t)");
    for (const auto& c : seq) {
        for (const auto& [v, q] : c.terms()) {
            if (q != 0 && (!member(t, v) || member_J(t, v)))
                throw PreconditionError(v.str() + " is not in zeta(t) \\ J(t)");
        }
    }
    const VertexFilter keep = [&t](const Vertex& v) { return member(t, v); };

    ApproxReport r;
    r.certified = r.finite = r.increasing = !seq.empty();
    for (std::size_t i = 0; i < seq.size(); ++i) {
        auto level = find_dominance_level(target, seq[i], level_cap, keep);
        r.certificate_levels.push_back(level.value_or(0));
        if (!level) r.certified = false;
        const ExtValue v = phi_tw(model, seq[i]);
        r.values.push_back(v);
        if (!v.is_finite()) r.finite = false;
    }
    if (r.finite) {
        for (std::size_t i = 1; i < r.values.size(); ++i) {
            if (!(r.values[i - 1].value() < r.values[i].value())) r.increasing = false;
        }
        r.exceeds_threshold = !r.values.empty() && r.values.back().value() > threshold;
    }
    return r;
}

}  // namespace zigzag
