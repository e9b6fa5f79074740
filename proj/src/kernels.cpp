#include "zigzag/kernels.hpp"

#include <exception>

namespace zigzag {

namespace {

// Runs f on every index; exceptions thrown inside the parallel region are rethrown after it.
template <class R, class F>
std::vector<R> map_vertices(const std::vector<Vertex>& vs, Exec exec, F f) {
    std::vector<R> out(vs.size());
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < vs.size(); ++i) out[i] = f(vs[i]);
        return out;
    }
    std::exception_ptr error;
    const auto count = static_cast<long long>(vs.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < count; ++i) {
        try {
            out[i] = f(vs[i]);
        } catch (...) {
#pragma omp critical(zigzag_kernel_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

std::vector<Vertex> collect_defects(const std::vector<Vertex>& vs, const std::vector<char>& ok) {
    std::vector<Vertex> bad;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!ok[i]) bad.push_back(vs[i]);
    }
    return bad;
}

}  // namespace

std::vector<Vertex> level_vertices(std::size_t n) {
    if (n == 0) return {Vertex::root()};
    std::vector<Vertex> out;
    for (const auto& w : enumerate_level(n - 1)) out.emplace_back(w);
    return out;
}

std::vector<Region> classify_level(const Template& t, std::size_t n, Exec exec) {
    return map_vertices<Region>(level_vertices(n), exec, [&t](const Vertex& v) {
        if (!member(t, v)) return Region::Outside;
        return member_J(t, v) ? Region::Infinite : Region::Finite;
    });
}

std::vector<Rational> phi_w_level(const Paintbox& w, std::size_t n, Exec exec) {
    return map_vertices<Rational>(level_vertices(n), exec, [&w](const Vertex& v) { return phi_w(v, w); });
}

std::vector<ExtValue> phi_tw_level(const GrowthModel& model, std::size_t n, Exec exec) {
    return map_vertices<ExtValue>(level_vertices(n), exec,
                                  [&model](const Vertex& v) { return phi_tw(model, v); });
}

std::vector<Vertex> harmonic_defects(const Paintbox& w, std::size_t n, Exec exec) {
    const auto vs = level_vertices(n);
    const auto ok = map_vertices<char>(vs, exec, [&w](const Vertex& v) -> char {
        Rational sum = 0;
        for (const auto& mu : upper_covers(v)) sum += phi_w(mu, w);
        return phi_w(v, w) == sum;
    });
    return collect_defects(vs, ok);
}

std::vector<Vertex> harmonic_defects(const GrowthModel& model, std::size_t n, Exec exec) {
    const auto vs = level_vertices(n);
    const auto ok = map_vertices<char>(vs, exec, [&model](const Vertex& v) -> char {
        return !member(model.templ(), v) || check_harmonic_at(model, v);
    });
    return collect_defects(vs, ok);
}

}  // namespace zigzag
