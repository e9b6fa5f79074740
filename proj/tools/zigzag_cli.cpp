#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zigzag/graph.hpp"
#include "zigzag/io.hpp"
#include "zigzag/paintbox.hpp"
#include "zigzag/qsym.hpp"
#include "zigzag/semifinite.hpp"
#include "zigzag/templates.hpp"
#include "zigzag/verify.hpp"

using namespace zigzag;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Args {
    std::string input;
    std::string second;
    std::string word;
    std::string model;
    std::string paintbox;
    std::string templ;
    std::string format = "text";
    std::string region = "zeta";
    std::size_t level = 4;
    std::size_t degree = kDefaultDegreeCap;
    std::uint64_t seed = 1;
};

bool looks_like_template(const std::string& s) { return s.find_first_of("*0123456789") != std::string::npos; }

Template template_from(const Args& a) {
    if (!a.templ.empty()) return Template::parse(a.templ);
    if (!a.model.empty()) return GrowthModel::parse(a.model).templ();
    throw ParseError("--template or --model is required");
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_render(const Args& a) {
    const std::string& in = a.input.empty() ? a.word : a.input;
    std::cout << (looks_like_template(in) ? render_template(Template::parse(in)) : render_word(BinaryWord::parse(in)));
    return 0;
}

int cmd_eval(const Args& a) {
    const Vertex v = Vertex::parse(a.word);
    std::string value;
    if (!a.model.empty()) {
        value = phi_tw(GrowthModel::parse(a.model), v).str();
    } else if (!a.paintbox.empty()) {
        value = to_string(phi_w(v, Paintbox::parse(a.paintbox)));
    } else {
        throw ParseError("--model or --paintbox is required");
    }
    if (a.format == "json") {
        print_json({{"schema", kJsonSchema}, {"word", v.str()}, {"value", value}});
    } else {
        std::cout << value << '\n';
    }
    return 0;
}

int cmd_graph(const Args& a) {
    std::optional<Template> t;
    GraphRegion region = GraphRegion::All;
    if (!a.templ.empty() || !a.model.empty()) {
        t = template_from(a);
        if (a.region == "zeta") region = GraphRegion::Zeta;
        else if (a.region == "finite") region = GraphRegion::Finite;
        else if (a.region == "J") region = GraphRegion::Ideal;
        else if (a.region == "all") region = GraphRegion::All;
        else throw ParseError("unknown region '" + a.region + "'");
    }
    const auto g = build_graph(t, region, a.level);
    if (a.format == "dot") {
        std::cout << graph_dot(g);
    } else if (a.format == "json") {
        print_json(graph_json(g));
    } else {
        std::size_t level = SIZE_MAX;
        for (const auto& v : g.vertices) {
            if (v.level() != level) {
                if (level != SIZE_MAX) std::cout << '\n';
                level = v.level();
                std::cout << "level " << level << ':';
            }
            std::cout << ' ' << v.str();
        }
        std::cout << "\nedges: " << g.edges.size() << '\n';
    }
    return 0;
}

int cmd_verify(const Args& a) {
    VerifyOptions opts;
    opts.level = a.level;
    opts.degree = a.degree;
    opts.seed = a.seed;
    const auto results = run_suites(a.input.empty() ? "all" : a.input, opts);
    if (a.format == "json") {
        print_json(report_json(results));
    } else {
        std::cout << report_text(results);
    }
    for (const auto& r : results) {
        if (!r.passed) return kExitFail;
    }
    return 0;
}

int cmd_covers(const Args& a) {
    const Vertex v = Vertex::parse(a.input.empty() ? a.word : a.input);
    const auto up = upper_covers(v);
    const auto down = lower_covers(v);
    if (a.format == "json") {
        json j{{"schema", kJsonSchema}, {"word", v.str()}, {"upper", json::array()}, {"lower", json::array()}};
        for (const auto& u : up) j["upper"].push_back(u.str());
        for (const auto& d : down) j["lower"].push_back(d.str());
        print_json(j);
        return 0;
    }
    std::cout << "upper:";
    for (const auto& u : up) std::cout << ' ' << u.str();
    std::cout << "\nlower:";
    for (const auto& d : down) std::cout << ' ' << d.str();
    std::cout << '\n';
    return 0;
}

int cmd_dim(const Args& a) {
    const Vertex from = Vertex::parse(a.input);
    const Vertex to = Vertex::parse(a.second);
    std::cout << dim(from, to).str() << '\n';
    return 0;
}

int cmd_product(const Args& a) {
    const auto f = product_F(Vertex::parse(a.input), Vertex::parse(a.second), a.degree);
    if (a.format == "json") {
        print_json(fexpansion_json(f));
        return 0;
    }
    bool first = true;
    for (const auto& [v, c] : f) {
        std::cout << (first ? "" : " + ") << (c == 1 ? "" : to_string(c) + "*") << "F[" << v.str() << "]";
        first = false;
    }
    std::cout << '\n';
    return 0;
}

int cmd_inject(const Args& a) {
    const Template t = template_from(a);
    const auto w = BinaryWord::parse(a.word);
    const auto comps = inject(t, w);
    if (a.format == "json") {
        json j{{"schema", kJsonSchema}, {"template", t.str()}, {"word", w.str()}, {"components", json::array()}};
        for (const auto& c : comps) j["components"].push_back(c.str());
        print_json(j);
        return 0;
    }
    for (std::size_t i = 0; i < comps.size(); ++i) std::cout << (i ? " " : "") << '"' << comps[i].str() << '"';
    std::cout << '\n';
    return 0;
}

int cmd_limit(const Args& a) {
    const auto model = GrowthModel::parse(a.model);
    const auto r = check_limit_formula(model, a.level);
    if (a.format == "json") {
        print_json({{"schema", kJsonSchema}, {"model", model.str()}, {"n", r.n}, {"const", to_string(r.constant)},
                    {"ok", r.ok}, {"checked", r.checked}, {"in_support", r.in_support}, {"failure", r.failure}});
    } else {
        std::cout << "n=" << r.n << " const=" << to_string(r.constant) << " ok=" << (r.ok ? "true" : "false")
                  << " checked=" << r.checked << " in_support=" << r.in_support << '\n';
        if (!r.ok) std::cout << "failure: " << r.failure << '\n';
    }
    return r.ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zigzag graph: coideals and harmonic functions"};
    app.require_subcommand(1);
    Args a;

    auto format_opt = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--format", a.format, "Output format")->check(CLI::IsMember(allowed));
    };

    auto* render = app.add_subcommand("render", "Draw a word or a template");
    render->add_option("input", a.input, "Binary word or template");
    render->add_option("--word", a.word, "Binary word");

    auto* eval = app.add_subcommand("eval", "Evaluate a harmonic function at a word");
    eval->add_option("--word", a.word, "Binary word, or @ for the root")->required();
    eval->add_option("--model", a.model, "Growth model, e.g. \"+* -1 +1 -* | w=1/3,2/3\"");
    eval->add_option("--paintbox", a.paintbox, "Paintbox, e.g. \"+1/3,-2/3\"");
    format_opt(eval, {"text", "json"});

    auto* graph = app.add_subcommand("graph", "Vertices and edges up to a level");
    graph->add_option("--level", a.level, "Level cap")->check(CLI::Range(0, 20));
    graph->add_option("--template", a.templ, "Restrict to a template");
    graph->add_option("--model", a.model, "Restrict to the template of a growth model");
    graph->add_option("--region", a.region, "all, zeta, finite or J")->check(CLI::IsMember({"all", "zeta", "finite", "J"}));
    format_opt(graph, {"text", "json", "dot"});

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", a.input, "Suite name")->check(CLI::IsMember(suite_names()));
    verify->add_option("--level", a.level, "Level cap")->check(CLI::Range(1, 12));
    verify->add_option("--degree", a.degree, "Product degree cap")->check(CLI::Range(1, 12));
    verify->add_option("--seed", a.seed, "Random seed");
    format_opt(verify, {"text", "json"});

    auto* covers = app.add_subcommand("covers", "Upper and lower covers of a word");
    covers->add_option("input", a.input, "Binary word, or @ for the root");
    covers->add_option("--word", a.word, "Binary word");
    format_opt(covers, {"text", "json"});

    auto* dimc = app.add_subcommand("dim", "Number of paths between two vertices");
    dimc->add_option("from", a.input, "Lower vertex")->required();
    dimc->add_option("to", a.second, "Upper vertex")->required();

    auto* product = app.add_subcommand("product", "F_a * F_b in the fundamental basis");
    product->add_option("a", a.input, "First word")->required();
    product->add_option("b", a.second, "Second word")->required();
    product->add_option("--degree", a.degree, "Product degree cap")->check(CLI::Range(1, 12));
    format_opt(product, {"text", "json"});

    auto* injectc = app.add_subcommand("inject", "Section components of a word");
    injectc->add_option("--word", a.word, "Binary word")->required();
    injectc->add_option("--template", a.templ, "Semifinite template");
    injectc->add_option("--model", a.model, "Growth model");
    format_opt(injectc, {"text", "json"});

    auto* limit = app.add_subcommand("limit", "Epsilon valuation and limit constant");
    limit->add_option("--model", a.model, "Growth model")->required();
    limit->add_option("--level", a.level, "Level cap")->check(CLI::Range(1, 14));
    format_opt(limit, {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*render) return cmd_render(a);
        if (*eval) return cmd_eval(a);
        if (*graph) return cmd_graph(a);
        if (*verify) return cmd_verify(a);
        if (*covers) return cmd_covers(a);
        if (*dimc) return cmd_dim(a);
        if (*product) return cmd_product(a);
        if (*injectc) return cmd_inject(a);
        if (*limit) return cmd_limit(a);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
