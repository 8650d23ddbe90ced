#include "bmg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bmg/antifactor.hpp"
#include "bmg/badness.hpp"
#include "bmg/coloring.hpp"
#include "bmg/counting.hpp"
#include "bmg/experiment.hpp"
#include "bmg/gen.hpp"
#include "bmg/gf.hpp"
#include "bmg/graph.hpp"
#include "bmg/nullpoly.hpp"

namespace bmg::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Raised for bad flag values detected after parsing.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

BipartiteMultigraph load(const std::string& path, std::istream& in) {
    if (path == "-") return parse_bmg(in);
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    try {
        return parse_bmg(file);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path + ": " + std::string(e.what()));
    }
}

std::uint32_t require_regular(const BipartiteMultigraph& g) {
    const auto q = regularity(g);
    if (!q) throw UsageError("graph is not regular");
    if (*q > static_cast<Multiplicity>(Field::kMaxOrder)) throw LimitExceeded("degree too large");
    return static_cast<std::uint32_t>(*q);
}

std::vector<std::uint32_t> parse_uint_list(const std::string& text, const char* what) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');) {
        std::size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (tok.empty() || used != tok.size() || tok[0] == '-' || value > 0xFFFFFFFFul)
            throw UsageError(std::string("invalid ") + what + " entry '" + tok + "'");
        out.push_back(static_cast<std::uint32_t>(value));
    }
    if (out.empty()) throw UsageError(std::string("empty ") + what);
    return out;
}

AlphaAssignment parse_alpha(const std::string& spec, std::size_t n_v, std::uint32_t q) {
    AlphaAssignment alpha;
    if (spec.rfind("const:", 0) == 0) {
        const auto v = parse_uint_list(spec.substr(6), "alpha");
        if (v.size() != 1) throw UsageError("alpha const: takes a single value");
        alpha.assign(n_v, v[0]);
    } else if (spec.rfind("list:", 0) == 0) {
        alpha = parse_uint_list(spec.substr(5), "alpha");
        if (alpha.size() != n_v)
            throw UsageError("alpha list has " + std::to_string(alpha.size()) + " entries, graph has " +
                             std::to_string(n_v) + " V-vertices");
    } else {
        throw UsageError("alpha must be 'const:<k>' or 'list:<k1,k2,...>'");
    }
    for (auto a : alpha)
        if (a >= q) throw UsageError("alpha value " + std::to_string(a) + " is not below q=" + std::to_string(q));
    return alpha;
}

Json choice_json(const OneFactorChoice& h) {
    Json arr = Json::array();
    for (auto v : h) arr.push_back(v + 1);
    return arr;
}

struct Options {
    bool json = false;
    std::string file = "-";
    std::optional<std::uint64_t> modulus;
    unsigned threads = 1;
    std::string alpha;
    std::string choice;
    std::string method = "search";
    std::string gen_model;
    std::optional<std::size_t> len, n;
    std::optional<std::uint64_t> q, seed, samples;
    std::uint64_t max_tries = 100000;
    std::string exp_model = "multigraph";
    bool connected = false;
    std::string format = "csv";
};

int cmd_info(const Options& o, std::istream& in, std::ostream& out) {
    const auto g = load(o.file, in);
    const auto q = regularity(g);
    const bool connected = is_connected(g);
    if (o.json) {
        Json j;
        j["n_u"] = g.n_u();
        j["n_v"] = g.n_v();
        j["q"] = q ? Json(*q) : Json(nullptr);
        j["connected"] = connected;
        j["max_mult"] = g.max_mult();
        j["simple"] = g.is_simple();
        out << j.dump() << '\n';
        return kOk;
    }
    out << g.n_u() << ' ' << g.n_v() << " q=" << (q ? std::to_string(*q) : std::string("irregular")) << ' '
        << (connected ? "connected" : "disconnected") << ' ' << (g.is_simple() ? "simple" : "multigraph")
        << " max_mult=" << g.max_mult() << '\n';
    return kOk;
}

int cmd_pm(const Options& o, std::istream& in, std::ostream& out) {
    const auto g = load(o.file, in);
    if (o.modulus) {
        const auto r = pm_mod(g, *o.modulus, o.threads);
        if (o.json)
            out << Json{{"n", g.n_u()}, {"modulus", *o.modulus}, {"residue", r}}.dump() << '\n';
        else
            out << r << '\n';
        return kOk;
    }
    const auto pm = pm_exact(g, o.threads);
    if (o.json)
        out << Json{{"n", g.n_u()}, {"pm", pm.str()}}.dump() << '\n';
    else
        out << pm << '\n';
    return kOk;
}

int cmd_color(const Options& o, std::istream& in, std::ostream& out) {
    const auto g = load(o.file, in);
    const auto q = require_regular(g);
    const auto coloring = edge_color(g);
    Json edges = Json::array();
    for (std::size_t u = 0; u < g.n_u(); ++u)
        for (std::size_t v = 0; v < g.n_v(); ++v) {
            const auto& cs = coloring.colors(u, v);
            for (std::size_t copy = 0; copy < cs.size(); ++copy) {
                if (o.json)
                    edges.push_back({u + 1, v + 1, copy, cs[copy]});
                else
                    out << u + 1 << ' ' << v + 1 << ' ' << copy << ' ' << cs[copy] << '\n';
            }
        }
    if (o.json) out << Json{{"q", q}, {"edges", edges}}.dump() << '\n';
    return kOk;
}

int cmd_antifactor(const Options& o, std::istream& in, std::ostream& out) {
    const auto g = load(o.file, in);
    const auto q = require_regular(g);
    const auto alpha = parse_alpha(o.alpha, g.n_v(), q);
    std::optional<OneFactorChoice> h;
    if (o.method == "polynomial")
        h = find_via_polynomial(g, alpha, std::make_shared<const Field>(q));
    else
        h = find_antifactor(g, alpha, q, o.threads);
    if (o.json) {
        out << Json{{"q", q}, {"feasible", h.has_value()}, {"choice", h ? choice_json(*h) : Json(nullptr)}}.dump()
            << '\n';
    } else if (h) {
        for (std::size_t u = 0; u < h->size(); ++u) out << u + 1 << " -> " << (*h)[u] + 1 << '\n';
    } else {
        out << "INFEASIBLE\n";
    }
    return h ? kOk : kNegative;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
    const auto g = load(o.file, in);
    const auto q = require_regular(g);
    const auto alpha = parse_alpha(o.alpha, g.n_v(), q);
    const auto raw = parse_uint_list(o.choice, "choice");
    if (raw.size() != g.n_u())
        throw UsageError("choice has " + std::to_string(raw.size()) + " entries, graph has " +
                         std::to_string(g.n_u()) + " U-vertices");
    OneFactorChoice h;
    for (auto v : raw) {
        if (v < 1 || v > g.n_v()) throw UsageError("choice entry " + std::to_string(v) + " out of range");
        h.push_back(v - 1);
    }
    const bool ok = verify(g, alpha, h, q);
    if (o.json) {
        Json deg = Json::array();
        for (auto d : choice_degrees(g, h)) deg.push_back(d);
        out << Json{{"q", q}, {"valid", ok}, {"degrees", deg}}.dump() << '\n';
    } else {
        out << (ok ? "VALID" : "INVALID") << '\n';
    }
    return ok ? kOk : kNegative;
}

int cmd_coeff(const Options& o, std::istream& in, std::ostream& out) {
    const auto g = load(o.file, in);
    const auto q = require_regular(g);
    const auto field = std::make_shared<const Field>(q);
    const auto alpha = o.alpha.empty() ? AlphaAssignment(g.n_v(), 0) : parse_alpha(o.alpha, g.n_v(), q);
    const auto f = build_f(g, edge_color(g, *field), alpha, field);
    const auto top = top_coefficient(f);
    FieldElement expected = field->from_int(static_cast<std::int64_t>(pm_mod(g, q)));
    if (g.n_v() % 2 == 1) expected = field->neg(expected);
    const bool match = top == expected;
    if (o.json)
        out << Json{{"q", q}, {"top_coefficient", top.value}, {"signed_pm_mod_q", expected.value}, {"match", match}}.dump()
            << '\n';
    else
        out << "top_coefficient " << top.value << '\n'
            << "signed_pm_mod_q " << expected.value << '\n'
            << (match ? "MATCH" : "MISMATCH") << '\n';
    return match ? kOk : kNegative;
}

template <typename T>
T need(const std::optional<T>& v, const char* flag, const std::string& model) {
    if (!v) throw UsageError("--model " + model + " requires " + flag);
    return *v;
}

int cmd_gen(const Options& o, std::ostream& out, std::ostream& err) {
    const std::string& m = o.gen_model;
    std::optional<BipartiteMultigraph> g;
    if (m == "k2") {
        g = gen_k2_multi(static_cast<Multiplicity>(need(o.q, "--q", m)));
    } else if (m == "cycle") {
        g = gen_inflated_cycle(need(o.len, "--len", m), static_cast<Multiplicity>(need(o.q, "--q", m)));
    } else if (m == "complete") {
        g = gen_complete(need(o.n, "--n", m));
    } else if (m == "random") {
        g = gen_random_permutation_model(need(o.n, "--n", m), need(o.q, "--q", m), need(o.seed, "--seed", m));
    } else {  // random-simple
        g = gen_random_simple(need(o.n, "--n", m), need(o.q, "--q", m), need(o.seed, "--seed", m), o.max_tries);
        if (!g) {
            err << "no simple graph after " << o.max_tries << " tries\n";
            return kNegative;
        }
    }
    if (o.json)
        out << Json{{"n_u", g->n_u()}, {"n_v", g->n_v()}, {"mult", g->rows()}}.dump() << '\n';
    else
        out << serialize_bmg(*g);
    return kOk;
}

int cmd_experiment(const Options& o, std::ostream& out) {
    const Model model = parse_model(o.exp_model);
    const auto q = static_cast<std::uint32_t>(need(o.q, "--q", o.exp_model));
    const auto n = need(o.n, "--n", o.exp_model);
    const auto modulus = static_cast<std::uint32_t>(o.modulus.value_or(0));
    ExperimentReport r;
    if (model == Model::Exhaustive) {
        r = run_exhaustive(q, n, o.connected, modulus);
    } else {
        r = run_monte_carlo(q, n, need(o.samples, "--samples", o.exp_model), need(o.seed, "--seed", o.exp_model),
                            model, o.connected, modulus, o.threads);
    }
    if (o.json || o.format == "json")
        out << to_json(r).dump() << '\n';
    else
        out << to_csv(r);
    return kOk;
}

int cmd_bad(const Options& o, std::istream& in, std::ostream& out) {
    const auto g = load(o.file, in);
    const auto result = is_bad(g);
    if (o.json) {
        Json j{{"bad", result.bad}};
        if (result.witness) {
            j["witness"] = result.witness->sub.rows();
            j["residue"] = result.witness->residue;
        }
        out << j.dump() << '\n';
    } else if (result.bad) {
        out << "BAD\n";
    } else {
        out << "NOT-BAD\n# pm mod 3 = " << result.witness->residue << '\n' << serialize_bmg(result.witness->sub);
    }
    return result.bad ? kNegative : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Perfect matchings, edge colorings and antifactors of regular bipartite multigraphs"};
    app.name("bmgtool");
    app.require_subcommand(1, 1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Emit a single JSON document");

    auto file_arg = [&](CLI::App* sub) { sub->add_option("file", o.file, "BMG file, '-' for standard input")->required(); };
    auto threads_opt = [&](CLI::App* sub) {
        sub->add_option("--threads", o.threads, "Worker threads (results do not depend on it)")->check(CLI::Range(1u, 1024u));
    };

    auto* info = app.add_subcommand("info", "Sizes, regularity, connectivity and multiplicity summary");
    file_arg(info);

    auto* pm = app.add_subcommand("pm", "Count perfect matchings (exactly, or modulo M)");
    file_arg(pm);
    pm->add_option("--mod", o.modulus, "Modulus M >= 2");
    threads_opt(pm);

    auto* color = app.add_subcommand("color", "Proper q-edge-coloring; lines 'u v copy color'");
    file_arg(color);

    auto* anti = app.add_subcommand(
        "antifactor",
        "Find H with d_H(u)=1 on U and d_H(v) != alpha(v) mod q on V. The search also runs when q is not a prime "
        "power; existence is then no longer guaranteed by pm(G) != 0 mod q.");
    file_arg(anti);
    anti->add_option("--alpha", o.alpha, "const:<k> or list:<k1,k2,...>")->required();
    anti->add_option("--method", o.method, "search (backtracking) or polynomial (Nullstellensatz witness)")
        ->check(CLI::IsMember({"search", "polynomial"}));
    threads_opt(anti);

    auto* ver = app.add_subcommand("verify", "Check a choice of one neighbour per U-vertex");
    file_arg(ver);
    ver->add_option("--alpha", o.alpha, "const:<k> or list:<k1,k2,...>")->required();
    ver->add_option("--choice", o.choice, "Chosen V-neighbour of each U-vertex, 1-indexed, comma separated")->required();

    auto* coeff = app.add_subcommand("coeff", "Compare the top coefficient of f with (-1)^|V| pm mod q");
    file_arg(coeff);
    coeff->add_option("--alpha", o.alpha, "const:<k> or list:<k1,k2,...> (default const:0)");

    auto* gen = app.add_subcommand("gen", "Generate a graph in BMG format");
    gen->add_option("--model", o.gen_model, "k2, cycle, complete, random or random-simple")
        ->required()
        ->check(CLI::IsMember({"k2", "cycle", "complete", "random", "random-simple"}));
    gen->add_option("--len", o.len, "Cycle length (cycle)");
    gen->add_option("--n", o.n, "Vertices per side");
    gen->add_option("--q", o.q, "Degree");
    gen->add_option("--seed", o.seed, "Seed (required by random models)");
    gen->add_option("--max-tries", o.max_tries, "Rejection attempts for random-simple");

    auto* exp = app.add_subcommand("experiment", "Residue distribution of pm(G) mod q");
    exp->add_option("--q", o.q, "Degree")->required();
    exp->add_option("--n", o.n, "Vertices per side")->required();
    exp->add_option("--samples", o.samples, "Accepted samples (sampling models)");
    exp->add_option("--seed", o.seed, "Seed (sampling models)");
    exp->add_option("--model", o.exp_model, "multigraph, simple or exhaustive")
        ->check(CLI::IsMember({"multigraph", "simple", "exhaustive"}));
    exp->add_flag("--connected", o.connected, "Keep connected graphs only");
    exp->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    exp->add_option("--mod", o.modulus, "Residue modulus (default q)");
    threads_opt(exp);

    auto* bad = app.add_subcommand("bad", "Decide whether no 3-regular spanning subgraph has pm != 0 mod 3");
    file_arg(bad);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }

    try {
        if (*info) return cmd_info(o, in, out);
        if (*pm) return cmd_pm(o, in, out);
        if (*color) return cmd_color(o, in, out);
        if (*anti) return cmd_antifactor(o, in, out);
        if (*ver) return cmd_verify(o, in, out);
        if (*coeff) return cmd_coeff(o, in, out);
        if (*gen) return cmd_gen(o, out, err);
        if (*exp) return cmd_experiment(o, out);
        if (*bad) return cmd_bad(o, in, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}

}  // namespace bmg::cli
