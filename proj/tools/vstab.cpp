// vstab command-line front end. Reports go to stdout as JSON, diagnostics to stderr.
// Exit codes: 0 all checks passed, 1 a check or computation failed, 2 usage error.

#include "vstab/automorphism.hpp"
#include "vstab/classify.hpp"
#include "vstab/coset_table.hpp"
#include "vstab/errors.hpp"
#include "vstab/graph_ops.hpp"
#include "vstab/local_action.hpp"
#include "vstab/ranks.hpp"
#include "vstab/split_merge.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

using namespace vstab;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json jint(const Integer& x) {
    if (x >= 0 && x <= Integer(std::numeric_limits<std::int64_t>::max())) return static_cast<std::int64_t>(x);
    return x.str();
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open graph file '" + path + "'");
    try {
        return read_edge_list(in);
    } catch (const Error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

PermGroup load_group(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open group file '" + path + "'");
    try {
        return read_group(in);
    } catch (const Error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

ActedGraph load_pair(const std::string& gpath, const std::string& hpath) {
    ActedGraph ag{load_graph(gpath), load_group(hpath), gpath};
    if (ag.group.degree() != ag.graph.order()) throw UsageError("group degree does not match the graph order");
    return ag;
}

void save(const std::string& prefix, const ActedGraph& ag, json& out) {
    if (prefix.empty()) return;
    std::ofstream g(prefix + ".edges"), h(prefix + ".group");
    if (!g || !h) throw UsageError("cannot write to '" + prefix + "'");
    write_edge_list(g, ag.graph);
    write_group(h, ag.group);
    out["files"] = {{"graph", prefix + ".edges"}, {"group", prefix + ".group"}};
}

json graph_summary(const Graph& g) {
    json j;
    j["order"] = g.order();
    j["edges"] = g.size();
    auto val = valency_list(g);
    std::size_t lo = g.order() ? *std::min_element(val.begin(), val.end()) : 0;
    std::size_t hi = g.order() ? *std::max_element(val.begin(), val.end()) : 0;
    j["min_degree"] = lo;
    j["max_degree"] = hi;
    j["regular"] = lo == hi;
    j["connected"] = is_connected(g);
    std::size_t gi = girth(g);
    j["girth"] = gi == 0 ? json(nullptr) : json(gi);
    j["bipartite"] = is_bipartite(g);
    return j;
}

json pair_summary(const ActedGraph& ag) {
    json j = graph_summary(ag.graph);
    j["group_order"] = jint(ag.group.order());
    j["vertex_transitive"] = is_vertex_transitive(ag);
    if (j["vertex_transitive"].get<bool>()) j["stabilizer_order"] = jint(ag.group.order() / ag.graph.order());
    j["provenance"] = ag.provenance;
    return j;
}

json gens_json(const std::vector<Permutation>& gens) {
    json a = json::array();
    for (const auto& g : gens) a.push_back(g.cycle_string());
    return a;
}

json verdict_json(const Verdict& v) {
    json j;
    j["cases"] = v.cases();
    j["vertices"] = jint(v.vertices);
    j["stabilizer_order"] = jint(v.stabilizer_order);
    j["threshold"] = {{"value", jint(v.threshold)}, {"source", "2|G_v| log2(|G_v|/2), exact"}};
    j["bound"] = v.bound == BoundCase::Below ? "below" : v.bound == BoundCase::Equality ? "equality" : "strict";
    j["small_stabilizer"] = v.small_stabilizer;
    if (v.gamma)
        j["gamma"] = {{"t", v.gamma->first}, {"sign", v.gamma->second > 0 ? "+" : "-"}, {"source", "isomorphism"}};
    return j;
}

// A named list of pass/fail checks.
struct Checks {
    json list = json::array();
    bool ok = true;
    void add(const std::string& name, bool pass, const std::string& source = "computed") {
        list.push_back({{"check", name}, {"pass", pass}, {"source", source}});
        ok = ok && pass;
    }
    void run(const std::string& name, const std::function<bool()>& f, const std::string& source = "computed") {
        bool pass = false;
        try {
            pass = f();
        } catch (const std::exception& e) {
            std::cerr << name << ": " << e.what() << '\n';
        }
        add(name, pass, source);
    }
};

void quick_checks(Checks& c) {
    c.run("C5 presentation has 5 cosets", [] {
        Presentation p({"a"});
        p.add_relator("a^5");
        return todd_coxeter(p, {}).coset_count() == 5;
    });
    c.run("|Sym(5)| = 120", [] { return symmetric_group(5).order() == 120; });
    c.run("Petersen has 120 automorphisms", [] { return automorphism_group(seed("Petersen").graph).order() == 120; });
    c.run("C(3,1) has 6 vertices", [] { return build_crs(3, 1).graph.order() == 6; });
    c.run("bound threshold at 8 is 32", [] { return bound_threshold(8) == 32; });
    c.run("2-rank of D4 is 4", [] { return two_rank_bruteforce(dihedral_group(4)).e == 4; });
    c.run("wreath bound with one block", [] { return wreath_rank_bound(4, 1) == 4; });
    c.run("GL(1,3) scalar bound", [] { return scalar_bound_check(1, 3); });
    c.run("Line(F6) is locally D4", [] { return is_locally(table_pair("Line(F6)"), LocalKind::D4); });
}

void full_checks(Checks& c) {
    for (const auto& r : reproduce_tables(false)) c.add("table row " + r.id, r.pass, "table");
    for (int t = 2; t <= 4; ++t)
        for (int sign : {1, -1})
            c.run("Gamma_" + std::to_string(t) + (sign > 0 ? "+" : "-") + " meets the bound with equality", [=] {
                ActedGraph g = build_gamma(t, sign);
                return classify(g).bound == BoundCase::Equality;
            });
    for (unsigned n = 2; n <= 8; ++n)
        c.run("Sym(" + std::to_string(n) + ") 2-rank formula", [=] {
            return two_rank_bruteforce(symmetric_group(n), 100000).e == e_sym_alt(n, false);
        });
    c.run("Merge(Split(C(5,2))) is C(5,2)", [] {
        ActedGraph g = build_crs(5, 2);
        SplitGraph s = split(g);
        merge_split_iso(g, s, merge(s.acted));
        return true;
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Locally-D4 graph toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    json out;
    bool ok = true;
    std::function<void()> action;
    auto start = std::chrono::steady_clock::now();

    // graph info
    std::string graph_file, group_file, graph_file2, out_prefix;
    auto* graph_cmd = app.add_subcommand("graph", "graph utilities");
    graph_cmd->require_subcommand(1);
    auto* info = graph_cmd->add_subcommand("info", "order, degrees, connectivity, girth");
    info->add_option("graph", graph_file)->required();
    info->callback([&] {
        action = [&] {
            out["command"] = "graph info";
            out["inputs"] = {{"graph", graph_file}};
            out["result"] = graph_summary(load_graph(graph_file));
        };
    });

    // derive
    std::string op_text;
    bool with_group = false;
    auto* derive_cmd = app.add_subcommand("derive", "apply a graph operator");
    derive_cmd->add_option("op", op_text, "line, bipartite-double, arc, three-arc, hill-capping, squared-arc")
        ->required();
    derive_cmd->add_option("graph", graph_file)->required();
    derive_cmd->add_option("--group", group_file, "group of the base graph; its induced action is written too");
    derive_cmd->add_option("--out", out_prefix, "write PREFIX.edges (and PREFIX.group)");
    derive_cmd->callback([&] {
        action = [&] {
            GraphOp op;
            try {
                op = parse_op(op_text);
            } catch (const ParseError& e) {
                throw UsageError(e.what());
            }
            Graph g = load_graph(graph_file);
            DerivedGraph d = derive(op, g);
            out["command"] = "derive";
            out["inputs"] = {{"op", std::string(op_name(op))}, {"graph", graph_file}};
            ActedGraph ag{d.graph, PermGroup(d.graph.order()), std::string(op_name(op))};
            with_group = !group_file.empty();
            if (with_group) {
                PermGroup base = load_group(group_file);
                if (base.degree() != g.order()) throw UsageError("group degree does not match the graph order");
                ag.group = induced_group(d, base);
                validate(ag);
                out["result"] = pair_summary(ag);
            } else {
                out["result"] = graph_summary(d.graph);
            }
            if (!out_prefix.empty()) {
                std::ofstream e(out_prefix + ".edges");
                if (!e) throw UsageError("cannot write to '" + out_prefix + "'");
                write_edge_list(e, d.graph);
                out["files"] = {{"graph", out_prefix + ".edges"}};
                if (with_group) {
                    std::ofstream h(out_prefix + ".group");
                    write_group(h, ag.group);
                    out["files"]["group"] = out_prefix + ".group";
                }
            }
        };
    });

    // family
    int r = 0, s = 0, t = 0;
    std::string sign_text = "+", row_id;
    auto* family = app.add_subcommand("family", "build a named family member");
    family->require_subcommand(1);
    auto* crs = family->add_subcommand("crs", "C(r,s) with C2 wr D_r");
    crs->add_option("--r", r)->required();
    crs->add_option("--s", s)->required();
    auto* gamma = family->add_subcommand("gamma", "Gamma_t^sign from its presentation");
    gamma->add_option("--t", t)->required();
    gamma->add_option("--sign", sign_text)->check(CLI::IsMember({"+", "-"}));
    auto* c333 = family->add_subcommand("c333", "the Cayley graph C(3,3,3)");
    auto* table = family->add_subcommand("table", "a row of the exceptional tables");
    table->add_option("--row", row_id)->required();
    for (auto* sub : {crs, gamma, c333, table}) sub->add_option("--out", out_prefix, "write PREFIX.edges and PREFIX.group");
    auto family_action = [&](std::function<ActedGraph()> build, json inputs) {
        action = [&, build, inputs] {
            ActedGraph ag;
            try {
                ag = build();
            } catch (const InvalidParams& e) {
                throw UsageError(e.what());
            } catch (const ParseError& e) {
                throw UsageError(e.what());
            }
            out["command"] = "family";
            out["inputs"] = inputs;
            out["result"] = pair_summary(ag);
            save(out_prefix, ag, out);
        };
    };
    crs->callback([&] { family_action([&] { return build_crs(r, s); }, {{"family", "crs"}, {"r", r}, {"s", s}}); });
    gamma->callback([&] {
        family_action([&] { return build_gamma(t, sign_text == "+" ? 1 : -1); },
                      {{"family", "gamma"}, {"t", t}, {"sign", sign_text}});
    });
    c333->callback([&] { family_action([] { return build_c333(); }, {{"family", "c333"}}); });
    table->callback([&] { family_action([&] { return table_pair(row_id); }, {{"family", "table"}, {"row", row_id}}); });

    // coset-enum
    std::string pres_file, subgroup_text, strategy = "hlt";
    std::size_t max_cosets = 1'000'000;
    auto* coset = app.add_subcommand("coset-enum", "Todd-Coxeter coset enumeration");
    coset->add_option("presentation", pres_file)->required();
    coset->add_option("--subgroup", subgroup_text, "comma-separated words");
    coset->add_option("--max-cosets", max_cosets);
    coset->add_option("--strategy", strategy)->check(CLI::IsMember({"hlt", "felsch"}));
    coset->callback([&] {
        action = [&] {
            std::ifstream in(pres_file);
            if (!in) throw UsageError("cannot open presentation file '" + pres_file + "'");
            Presentation p;
            std::vector<Word> sub;
            try {
                p = read_presentation(in);
                if (!subgroup_text.empty()) sub = p.parse_word_list(subgroup_text);
            } catch (const ParseError& e) {
                throw UsageError(e.what());
            }
            CosetTable tab =
                todd_coxeter(p, sub, max_cosets, strategy == "felsch" ? FillStrategy::Felsch : FillStrategy::HLT);
            PermGroup act = coset_action(tab);
            out["command"] = "coset-enum";
            out["inputs"] = {{"presentation", pres_file}, {"subgroup", subgroup_text}, {"strategy", strategy}};
            out["result"] = {{"cosets", tab.coset_count()},
                             {"closed", tab.closed},
                             {"verified", tab.verify()},
                             {"max_live", tab.max_live},
                             {"total_defined", tab.total_defined},
                             {"group_order", jint(act.order())}};
            ok = tab.verify();
        };
    });

    // local
    long long vertex = 0;
    auto* local = app.add_subcommand("local", "local action at a vertex");
    local->add_option("graph", graph_file)->required();
    local->add_option("group", group_file)->required();
    local->add_option("--vertex", vertex);
    local->callback([&] {
        action = [&] {
            ActedGraph ag = load_pair(graph_file, group_file);
            if (vertex < 0 || static_cast<std::size_t>(vertex) >= ag.graph.order()) throw UsageError("bad vertex");
            LocalActionReport rep = local_action(ag, static_cast<Point>(vertex));
            out["command"] = "local";
            out["inputs"] = {{"graph", graph_file}, {"group", group_file}, {"vertex", vertex}};
            out["result"] = {{"neighbourhood", rep.neighbourhood},
                             {"stabilizer_order", jint(rep.stabilizer_order)},
                             {"induced_order", jint(rep.induced.order())},
                             {"kernel_order", jint(rep.kernel_order)},
                             {"type", rep.type.name()},
                             {"locally_D4", is_locally(ag, LocalKind::D4)},
                             {"vertex_transitive", is_vertex_transitive(ag)},
                             {"arc_transitive", is_arc_transitive(ag)}};
        };
    });

    // aut / iso
    auto* aut = app.add_subcommand("aut", "automorphism group");
    aut->add_option("graph", graph_file)->required();
    aut->add_option("--out", out_prefix, "write the group to PREFIX.group");
    aut->callback([&] {
        action = [&] {
            Graph g = load_graph(graph_file);
            SearchStats st;
            PermGroup a = automorphism_group(g, {}, &st);
            out["command"] = "aut";
            out["inputs"] = {{"graph", graph_file}};
            out["result"] = {{"order", jint(a.order())},
                             {"generators", gens_json(a.generators())},
                             {"transitive", a.is_transitive()},
                             {"search_nodes", st.nodes}};
            if (!out_prefix.empty()) {
                std::ofstream h(out_prefix + ".group");
                write_group(h, a);
                out["files"] = {{"group", out_prefix + ".group"}};
            }
        };
    });
    auto* iso = app.add_subcommand("iso", "isomorphism test");
    iso->add_option("graph1", graph_file)->required();
    iso->add_option("graph2", graph_file2)->required();
    iso->callback([&] {
        action = [&] {
            auto f = are_isomorphic(load_graph(graph_file), load_graph(graph_file2));
            out["command"] = "iso";
            out["inputs"] = {{"graph1", graph_file}, {"graph2", graph_file2}};
            out["result"] = {{"isomorphic", f.has_value()}};
            if (f) out["result"]["mapping"] = f->images();
        };
    });

    // split / merge
    auto* split_cmd = app.add_subcommand("split", "cubic graph from a locally-D4 pair");
    split_cmd->add_option("graph", graph_file)->required();
    split_cmd->add_option("group", group_file)->required();
    split_cmd->add_option("--out", out_prefix);
    split_cmd->callback([&] {
        action = [&] {
            ActedGraph ag = load_pair(graph_file, group_file);
            SplitGraph sg = split(ag);
            Permutation theta = merge_split_iso(ag, sg, merge(sg.acted));
            out["command"] = "split";
            out["inputs"] = {{"graph", graph_file}, {"group", group_file}};
            out["result"] = pair_summary(sg.acted);
            out["result"]["merge_back_isomorphism"] = theta.images();
            save(out_prefix, sg.acted, out);
        };
    });
    auto* merge_cmd = app.add_subcommand("merge", "4-valent graph from a locally-C2^[3] cubic pair");
    merge_cmd->add_option("graph", graph_file)->required();
    merge_cmd->add_option("group", group_file)->required();
    merge_cmd->add_option("--out", out_prefix);
    merge_cmd->callback([&] {
        action = [&] {
            ActedGraph ag = load_pair(graph_file, group_file);
            MergedGraph mg = merge(ag);
            Permutation theta = split_merge_iso(ag, mg, split(mg.acted));
            out["command"] = "merge";
            out["inputs"] = {{"graph", graph_file}, {"group", group_file}};
            out["result"] = pair_summary(mg.acted);
            out["result"]["split_back_isomorphism"] = theta.images();
            save(out_prefix, mg.acted, out);
        };
    });

    // rank / dagger / bound
    std::uint64_t cap = 100000;
    auto* rank = app.add_subcommand("rank", "2-rank by exhaustive search");
    rank->add_option("group", group_file)->required();
    rank->add_option("--cap", cap, "largest group order searched");
    rank->callback([&] {
        action = [&] {
            PermGroup g = load_group(group_file);
            RankRecord rec = two_rank_bruteforce(g, cap, group_file);
            out["command"] = "rank";
            out["inputs"] = {{"group", group_file}, {"cap", cap}};
            out["result"] = {{"group_order", jint(g.order())},
                             {"r", rec.r},
                             {"e", jint(rec.e)},
                             {"method", method_name(rec.method)},
                             {"source", rec.source},
                             {"witness", gens_json(rec.witness)}};
        };
    });
    std::string entry_name;
    unsigned l = 1;
    bool list_entries = false;
    auto* dagger = app.add_subcommand("dagger", "the l-inequality for a simple group entry");
    dagger->add_option("--entry", entry_name);
    dagger->add_option("--l", l)->check(CLI::PositiveNumber);
    dagger->add_flag("--list", list_entries, "list the known entries");
    dagger->callback([&] {
        action = [&] {
            out["command"] = "dagger";
            auto entry_json = [](const SimpleGroupEntry& e) {
                json j{{"name", e.name},
                       {"two_part_exponent", e.two_part_exponent},
                       {"odd_part", jint(e.odd_part)},
                       {"e", jint(e.e_aut_upper)},
                       {"e_exact", e.exact},
                       {"source", e.source}};
                if (e.e_t != 0) j["e_T"] = jint(e.e_t);
                return j;
            };
            if (list_entries) {
                json a = json::array();
                for (const auto& e : simple_group_entries()) a.push_back(entry_json(e));
                out["result"] = a;
                return;
            }
            if (entry_name.empty()) throw UsageError("--entry is required");
            const SimpleGroupEntry* e;
            try {
                e = &simple_group_entry(entry_name);
            } catch (const ParseError& err) {
                throw UsageError(err.what());
            }
            out["inputs"] = {{"entry", entry_name}, {"l", l}};
            out["result"] = entry_json(*e);
            out["result"]["holds"] = dagger_inequality(*e, l);
        };
    });
    std::string gv_text, order_text;
    auto* bound = app.add_subcommand("bound", "compare |V| with 2|G_v| log2(|G_v|/2)");
    bound->add_option("--gv", gv_text)->required();
    bound->add_option("--order", order_text)->required();
    bound->callback([&] {
        action = [&] {
            Integer gv, n;
            try {
                gv = Integer(gv_text);
                n = Integer(order_text);
            } catch (const std::exception&) {
                throw UsageError("--gv and --order take integers");
            }
            Integer th;
            try {
                th = bound_threshold(gv);
            } catch (const NotPowerOfTwo& e) {
                throw UsageError(e.what());
            }
            auto c = compare_to_bound(n, gv);
            out["command"] = "bound";
            out["inputs"] = {{"gv", gv_text}, {"order", order_text}};
            out["result"] = {{"threshold", jint(th)},
                             {"comparison", c < 0 ? "<" : c == 0 ? "=" : ">"},
                             {"source", "exact integer arithmetic"}};
        };
    });

    // classify / reproduce-tables / selftest
    auto* classify_cmd = app.add_subcommand("classify", "which case of the trichotomy holds");
    classify_cmd->add_option("graph", graph_file)->required();
    classify_cmd->add_option("group", group_file)->required();
    classify_cmd->callback([&] {
        action = [&] {
            ActedGraph ag = load_pair(graph_file, group_file);
            out["command"] = "classify";
            out["inputs"] = {{"graph", graph_file}, {"group", group_file}};
            if (is_regular(ag.graph, 3)) {
                CubicVerdict cv = classify_cubic(ag);
                json j;
                j["cubic"] = true;
                j["kind"] = cv.kind == CubicKind::ArcTransitive ? "arc-transitive"
                            : cv.kind == CubicKind::ViaMerge    ? "merge"
                                                                : "small-stabilizer";
                j["cases"] = cv.cases();
                j["vertices"] = jint(cv.vertices);
                j["stabilizer_order"] = jint(cv.stabilizer_order);
                if (cv.merged) j["merged"] = verdict_json(*cv.merged);
                out["result"] = j;
            } else {
                out["result"] = verdict_json(classify(ag));
            }
        };
    });
    std::vector<std::string> rows;
    bool include_large = false;
    auto* repro = app.add_subcommand("reproduce-tables", "rebuild and check every table row");
    repro->add_option("--rows", rows, "row ids, e.g. (ii)b or Line(F6)");
    repro->add_flag("--include-large", include_large, "also build row (iv)");
    repro->callback([&] {
        action = [&] {
            for (const auto& id : rows) {
                try {
                    table_row(id);
                } catch (const ParseError& e) {
                    throw UsageError(e.what());
                }
            }
            out["command"] = "reproduce-tables";
            out["inputs"] = {{"rows", rows}, {"include_large", include_large}};
            json a = json::array();
            for (const auto& rep : reproduce_tables(include_large, rows)) {
                json j{{"id", rep.id},
                       {"graph", rep.graph},
                       {"pass", rep.pass},
                       {"vertices", rep.vertices},
                       {"group_order", jint(rep.group_order)},
                       {"stabilizer_order", jint(rep.stabilizer_order)},
                       {"failures", rep.failures},
                       {"seconds", rep.seconds},
                       {"source", "table"}};
                if (rep.aut_order != 0) j["aut_order"] = jint(rep.aut_order);
                ok = ok && rep.pass;
                a.push_back(j);
            }
            out["result"] = a;
        };
    });
    bool quick = false;
    auto* selftest = app.add_subcommand("selftest", "built-in checks");
    selftest->add_flag("--quick", quick, "only the fast elementary checks");
    selftest->callback([&] {
        action = [&] {
            Checks c;
            quick_checks(c);
            if (!quick) full_checks(c);
            out["command"] = "selftest";
            out["inputs"] = {{"quick", quick}};
            out["checks"] = c.list;
            ok = c.ok;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    int code = 0;
    try {
        action();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        out["error"] = e.what();
        ok = false;
    }
    if (!ok) code = 1;
    out["pass"] = ok;
    out["version"] = kVersion;
    out["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << out.dump(2) << '\n';
    return code;
}
