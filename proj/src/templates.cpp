#include "zigzag/templates.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <variant>

#include "zigzag/arith.hpp"

namespace zigzag {

Template::Template(std::vector<Cluster> clusters) : clusters_(std::move(clusters)) {
    if (clusters_.empty()) throw PreconditionError("a template needs at least one cluster");
    bool has_infinite = false;
    for (std::size_t i = 0; i < clusters_.size(); ++i) {
        if (clusters_[i].multiplicity == 0) throw PreconditionError("cluster multiplicity must be positive");
        if (i && clusters_[i].sign == clusters_[i - 1].sign)
            throw PreconditionError("template clusters must alternate in sign");
        has_infinite = has_infinite || clusters_[i].infinite();
    }
    if (!has_infinite) throw PreconditionError("a template needs an infinite cluster");
}

Template Template::parse(std::string_view text) {
    std::vector<Cluster> clusters;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        if (token.size() < 2 || (token[0] != '+' && token[0] != '-'))
            throw ParseError("bad cluster token '" + token + "'");
        Cluster c;
        c.sign = token[0] == '+' ? Sign::Plus : Sign::Minus;
        if (token == "+*" || token == "-*") {
            c.multiplicity = Cluster::kInfinite;
        } else {
            std::uint32_t m = 0;
            auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), m);
            if (ec != std::errc() || ptr != token.data() + token.size() || m == 0 || m == Cluster::kInfinite)
                throw ParseError("bad cluster multiplicity in '" + token + "'");
            c.multiplicity = m;
        }
        clusters.push_back(c);
    }
    try {
        return Template(std::move(clusters));
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("invalid template '") + std::string(text) + "': " + e.what());
    }
}

std::string Template::str() const {
    std::string s;
    for (std::size_t i = 0; i < clusters_.size(); ++i) {
        if (i) s += ' ';
        s += sign_char(clusters_[i].sign);
        s += clusters_[i].infinite() ? std::string("*") : std::to_string(clusters_[i].multiplicity);
    }
    return s;
}

std::size_t Template::infinite_count() const {
    return static_cast<std::size_t>(
        std::count_if(clusters_.begin(), clusters_.end(), [](const Cluster& c) { return c.infinite(); }));
}

bool Template::is_separating(std::size_t i) const {
    if (i == 0 || i + 1 >= clusters_.size()) return false;
    return clusters_[i].multiplicity == 1 && clusters_[i - 1].infinite() && clusters_[i + 1].infinite();
}

bool is_finite_template(const Template& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!t[i].infinite() && !t.is_separating(i)) return false;
    }
    return true;
}

bool member(const Template& t, const BinaryWord& w) {
    // used[i]: fewest symbols placed in cluster i so far, given the last symbol went into i.
    constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();
    const std::size_t k = t.size();
    std::vector<std::uint32_t> used(k, kUnreached), next(k);
    bool at_start = true;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        const Sign s = w[pos];
        bool reached_before = at_start;
        for (std::size_t i = 0; i < k; ++i) {
            next[i] = kUnreached;
            if (t[i].sign == s) {
                if (reached_before) {
                    next[i] = 1;
                } else if (used[i] != kUnreached && (t[i].infinite() || used[i] < t[i].multiplicity)) {
                    next[i] = used[i] + 1;
                }
            }
            reached_before = reached_before || used[i] != kUnreached;
        }
        used.swap(next);
        at_start = false;
        if (std::all_of(used.begin(), used.end(), [](auto u) { return u == kUnreached; })) return false;
    }
    return true;
}

bool member(const Template& t, const Vertex& v) { return v.is_root() || member(t, v.word()); }

FlangeDecomposition flange_and_sections(const Template& t) {
    FlangeDecomposition fd;
    if (is_finite_template(t)) {
        fd.flange = {BinaryWord(), BinaryWord()};
        fd.sections = {t};
        return fd;
    }
    fd.flange.emplace_back();
    std::vector<Cluster> section;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i].infinite() || t.is_separating(i)) {
            section.push_back(t[i]);
            continue;
        }
        if (!section.empty()) {
            fd.sections.emplace_back(std::move(section));
            section.clear();
            fd.flange.emplace_back();
        }
        for (std::uint32_t r = 0; r < t[i].multiplicity; ++r) fd.flange.back().push_back(t[i].sign);
    }
    if (!section.empty()) {
        fd.sections.emplace_back(std::move(section));
        fd.flange.emplace_back();
    }
    return fd;
}

std::vector<Template> reduced_templates(const Template& t) {
    std::vector<Template> out;
    if (is_finite_template(t)) return out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i].infinite() || t.is_separating(i)) continue;
        std::vector<Cluster> cs = t.clusters();
        if (--cs[i].multiplicity == 0) {
            cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(i));
            if (i > 0 && i < cs.size() && cs[i - 1].sign == cs[i].sign) {
                bool inf = cs[i - 1].infinite() || cs[i].infinite();
                cs[i - 1].multiplicity = inf ? Cluster::kInfinite : cs[i - 1].multiplicity + cs[i].multiplicity;
                cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
        out.emplace_back(std::move(cs));
    }
    std::sort(out.begin(), out.end(), [](const Template& a, const Template& b) { return a.str() < b.str(); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool member_J(const Template& t, const BinaryWord& w) {
    for (const auto& r : reduced_templates(t)) {
        if (member(r, w)) return true;
    }
    return false;
}

bool member_J(const Template& t, const Vertex& v) {
    if (is_finite_template(t)) return false;
    return v.is_root() || member_J(t, v.word());
}

namespace {

using Piece = std::variant<BinaryWord, const Template*>;

std::vector<Piece> pieces_of(const FlangeDecomposition& fd) {
    std::vector<Piece> pieces;
    for (std::size_t i = 0; i < fd.flange.size(); ++i) {
        // Outer flange words may be empty and are then skipped.
        if (!fd.flange[i].empty()) pieces.emplace_back(fd.flange[i]);
        if (i < fd.sections.size()) pieces.emplace_back(&fd.sections[i]);
    }
    return pieces;
}

bool matches_at(const BinaryWord& w, std::size_t pos, const BinaryWord& fixed) {
    return pos + fixed.size() <= w.size() && w.substr(pos, fixed.size()) == fixed;
}

// ways[p][pos]: number of ways the first p pieces cover w[0, pos).
std::vector<std::vector<std::size_t>> decomposition_table(const std::vector<Piece>& pieces, const BinaryWord& w) {
    const std::size_t n = w.size();
    std::vector<std::vector<std::size_t>> ways(pieces.size() + 1, std::vector<std::size_t>(n + 1, 0));
    ways[0][0] = 1;
    for (std::size_t p = 0; p < pieces.size(); ++p) {
        for (std::size_t pos = 0; pos <= n; ++pos) {
            if (!ways[p][pos]) continue;
            if (const auto* fixed = std::get_if<BinaryWord>(&pieces[p])) {
                if (matches_at(w, pos, *fixed)) ways[p + 1][pos + fixed->size()] += ways[p][pos];
            } else {
                const Template& sec = *std::get<const Template*>(pieces[p]);
                for (std::size_t end = pos; end <= n; ++end) {
                    if (member(sec, w.substr(pos, end - pos))) ways[p + 1][end] += ways[p][pos];
                }
            }
        }
    }
    return ways;
}

}  // namespace

std::size_t count_decompositions(const FlangeDecomposition& fd, const BinaryWord& w) {
    auto pieces = pieces_of(fd);
    return decomposition_table(pieces, w).back()[w.size()];
}

std::vector<BinaryWord> inject(const Template& t, const BinaryWord& w) {
    if (!member(t, w)) throw PreconditionError("inject: word " + w.str() + " is outside the coideal");
    if (member_J(t, w)) throw PreconditionError("inject: word " + w.str() + " lies in J(t)");
    const auto fd = flange_and_sections(t);
    const auto pieces = pieces_of(fd);
    const auto ways = decomposition_table(pieces, w);
    if (ways.back()[w.size()] != 1)
        throw InternalError("inject: expected a unique decomposition of " + w.str() + ", found " +
                            std::to_string(ways.back()[w.size()]));

    std::vector<BinaryWord> components(fd.sections.size());
    std::size_t end = w.size();
    std::size_t section = fd.sections.size();
    for (std::size_t p = pieces.size(); p-- > 0;) {
        if (const auto* fixed = std::get_if<BinaryWord>(&pieces[p])) {
            end -= fixed->size();
            continue;
        }
        const Template& sec = *std::get<const Template*>(pieces[p]);
        --section;
        std::size_t start = end + 1;
        for (std::size_t pos = 0; pos <= end; ++pos) {
            if (ways[p][pos] && member(sec, w.substr(pos, end - pos))) {
                start = pos;
                break;
            }
        }
        if (start > end) throw InternalError("inject: backtracking failed");
        components[section] = w.substr(start, end - start);
        end = start;
    }
    return components;
}

BinaryWord assemble(const FlangeDecomposition& fd, const std::vector<BinaryWord>& components) {
    if (components.size() != fd.sections.size()) throw PreconditionError("assemble: wrong component count");
    BinaryWord w = fd.flange[0];
    for (std::size_t i = 0; i < components.size(); ++i) w = w + components[i] + fd.flange[i + 1];
    return w;
}

namespace {

struct PatternCluster {
    Sign sign;
    std::uint32_t multiplicity;
};

constexpr auto kInf = Cluster::kInfinite;

bool matches_window(const Template& t, std::size_t start, const std::vector<PatternCluster>& pattern) {
    if (start + pattern.size() > t.size()) return false;
    for (std::size_t j = 0; j < pattern.size(); ++j) {
        if (t[start + j].sign != pattern[j].sign || t[start + j].multiplicity != pattern[j].multiplicity)
            return false;
    }
    return true;
}

}  // namespace

std::pair<BinaryWord, bool> single_generator_word(const Template& t) {
    const std::size_t k = t.size();
    BinaryWord word;
    for (std::size_t i = 0; i < k; ++i) {
        const Cluster& c = t[i];
        if (!c.infinite()) {
            for (std::uint32_t r = 0; r < c.multiplicity; ++r) word.push_back(c.sign);
            continue;
        }
        if (i == 0 || i + 1 == k) continue;  // outermost infinite clusters disappear
        if (t[i - 1].infinite() || t[i + 1].infinite()) word.push_back(c.sign);
        // an infinite cluster between two finite ones disappears
    }

    const auto P = Sign::Plus, M = Sign::Minus;
    const std::vector<PatternCluster> avoid1{{P, kInf}, {M, kInf}, {P, 1}, {M, kInf}, {P, kInf}};
    const std::vector<PatternCluster> avoid2{{M, kInf}, {P, kInf}, {M, 1}, {P, kInf}, {M, kInf}};
    const std::vector<PatternCluster> begin1{{P, kInf}, {M, 1}, {P, kInf}, {M, kInf}};
    const std::vector<PatternCluster> begin2{{M, kInf}, {P, 1}, {M, kInf}, {P, kInf}};
    const std::vector<PatternCluster> end1{{M, kInf}, {P, kInf}, {M, 1}, {P, kInf}};
    const std::vector<PatternCluster> end2{{P, kInf}, {M, kInf}, {P, 1}, {M, kInf}};

    bool ok = true;
    for (std::size_t s = 0; s < k; ++s) {
        if (matches_window(t, s, avoid1) || matches_window(t, s, avoid2)) ok = false;
    }
    if (matches_window(t, 0, begin1) || matches_window(t, 0, begin2)) ok = false;
    if (k >= 4 && (matches_window(t, k - 4, end1) || matches_window(t, k - 4, end2))) ok = false;
    return {word, ok};
}

BinaryWord minimal_full_word(const Template& t) {
    BinaryWord w;
    for (const auto& c : t.clusters()) {
        std::uint32_t count = c.infinite() ? 1 : c.multiplicity;
        for (std::uint32_t r = 0; r < count; ++r) w.push_back(c.sign);
    }
    return w;
}

}  // namespace zigzag
