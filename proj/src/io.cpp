#include "zigzag/io.hpp"

#include <map>
#include <sstream>

namespace zigzag {

namespace {

const std::string kBox = "#";
const std::string kInfiniteBox = "∞";

std::string render_rows(const BinaryWord& w, const std::vector<bool>& infinite) {
    std::vector<std::vector<std::size_t>> rows{{0}};
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == Sign::Minus) rows.emplace_back();
        rows.back().push_back(i + 1);
    }
    std::string out;
    std::size_t offset = 0;
    for (const auto& row : rows) {
        out += std::string(offset, ' ');
        for (std::size_t box : row) out += infinite[box] ? kInfiniteBox : kBox;
        out += '\n';
        offset += row.size() - 1;
    }
    return out;
}

}  // namespace

std::string render_word(const BinaryWord& w) { return render_rows(w, std::vector<bool>(w.size() + 1, false)); }

std::string render_template(const Template& t) {
    constexpr std::size_t kStrip = 3;
    BinaryWord w;
    std::vector<bool> infinite{t[0].infinite()};
    for (const auto& c : t.clusters()) {
        const std::size_t count = c.infinite() ? kStrip : c.multiplicity;
        for (std::size_t k = 0; k < count; ++k) {
            w.push_back(c.sign);
            infinite.push_back(c.infinite());
        }
    }
    return render_rows(w, infinite);
}

GraphDump build_graph(const std::optional<Template>& t, GraphRegion region, std::size_t max_level) {
    if (max_level > kDefaultLevelCap) throw PreconditionError("level cap above " + std::to_string(kDefaultLevelCap));
    if (region != GraphRegion::All && !t) throw PreconditionError("region needs a template");
    if ((region == GraphRegion::Finite || region == GraphRegion::Ideal) && is_finite_template(*t))
        throw PreconditionError("J(t) is defined for semifinite templates only");
    auto keep = [&](const Vertex& v) {
        switch (region) {
            case GraphRegion::All: return true;
            case GraphRegion::Zeta: return member(*t, v);
            case GraphRegion::Finite: return member(*t, v) && !member_J(*t, v);
            case GraphRegion::Ideal: return member_J(*t, v);
        }
        return false;
    };
    GraphDump g;
    std::map<Vertex, std::size_t> index;
    auto add = [&](const Vertex& v) {
        if (!keep(v)) return;
        index.emplace(v, g.vertices.size());
        g.vertices.push_back(v);
    };
    add(Vertex::root());
    for (std::size_t n = 1; n <= max_level; ++n) {
        for (const auto& w : enumerate_level(n - 1)) add(Vertex(w));
    }
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (g.vertices[i].level() >= max_level) continue;
        for (const auto& up : upper_covers(g.vertices[i])) {
            auto it = index.find(up);
            if (it != index.end()) g.edges.emplace_back(i, it->second);
        }
    }
    return g;
}

std::string graph_dot(const GraphDump& g) {
    std::ostringstream os;
    os << "digraph zigzag {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) os << "  v" << i << " [label=\"" << g.vertices[i].str() << "\"];\n";
    for (const auto& [a, b] : g.edges) os << "  v" << a << " -> v" << b << ";\n";
    os << "}\n";
    return os.str();
}

nlohmann::json graph_json(const GraphDump& g) {
    nlohmann::json j;
    j["schema"] = kJsonSchema;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : g.vertices) j["vertices"].push_back({{"word", v.str()}, {"level", v.level()}});
    j["edges"] = nlohmann::json::array();
    for (const auto& [a, b] : g.edges) j["edges"].push_back({g.vertices[a].str(), g.vertices[b].str()});
    return j;
}

nlohmann::json fexpansion_json(const FExpansion& f) {
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [v, c] : f) terms[v.str()] = to_string(c);
    return {{"schema", kJsonSchema}, {"terms", terms}};
}

FExpansion fexpansion_from_json(const nlohmann::json& j) {
    if (!j.contains("schema") || j["schema"] != kJsonSchema) throw ParseError("unexpected JSON schema");
    FExpansion f;
    for (const auto& [key, value] : j.at("terms").items()) f[Vertex::parse(key)] = parse_rational(value.get<std::string>());
    return f;
}

nlohmann::json suite_json(const SuiteResult& r) {
    return {{"suite", r.name},      {"passed", r.passed}, {"checks", r.checks},
            {"failures", r.failures}, {"notes", r.notes},   {"seconds", r.seconds}};
}

nlohmann::json report_json(const std::vector<SuiteResult>& results) {
    nlohmann::json j;
    j["schema"] = kJsonSchema;
    bool all = true;
    j["suites"] = nlohmann::json::array();
    for (const auto& r : results) {
        j["suites"].push_back(suite_json(r));
        all = all && r.passed;
    }
    j["passed"] = all;
    return j;
}

std::string report_text(const std::vector<SuiteResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.passed ? "PASS " : "FAIL ") << r.name << " checks=" << r.checks << " time=" << r.seconds << "s\n";
        for (const auto& n : r.notes) os << "  note: " << n << '\n';
        for (const auto& f : r.failures) os << "  fail: " << f << '\n';
    }
    return os.str();
}

}  // namespace zigzag
