// Command-line front end: analyze | reduce | closure | decompose | growth |
// eval | rep-audit. Reports are deterministic; --machine switches to
// key<TAB>value lines. Exit codes: 0 ok, 2 input error, 3 precondition
// violated, 4 budget exceeded.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lpa/expr.hpp"
#include "lpa/growth.hpp"
#include "lpa/quiver.hpp"
#include "lpa/reduction.hpp"
#include "lpa/structure.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw lpa::input_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string fmt_fixed(double x) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << x;
    return os.str();
}

struct Options {
    std::string ring = "Q";
    bool machine = false;
    std::size_t term_cap = 1000000;
};

std::string ps_name(const lpa::Digraph& g, const lpa::CycleSet& cs,
                    const lpa::PosetNode& n) {
    return cs.cycles[(std::size_t)n.cycle_index].as_path(g).str(g);
}

void cmd_analyze(const std::string& file, const Options& opt) {
    using namespace lpa;
    Digraph g = Digraph::parse(slurp(file));
    RingDesc ring = RingDesc::parse(opt.ring);
    CycleSet cs = cycles(g);

    std::ostringstream sinks_os;
    for (VertexId w : g.sinks()) {
        if (sinks_os.tellp() > 0) sinks_os << " ";
        sinks_os << g.vertex_name(w);
    }
    GkDim gk = gk_dim(g, ring);

    if (opt.machine) {
        std::cout << "vertices\t" << g.vertex_count() << "\n";
        std::cout << "arrows\t" << g.arrow_count() << "\n";
        std::cout << "sinks\t" << sinks_os.str() << "\n";
        std::cout << "cycles\t" << cs.cycles.size() << "\n";
        std::cout << "disjoint\t" << (cs.disjoint ? "yes" : "no") << "\n";
        if (cs.disjoint) std::cout << "ht\t" << height(g) << "\n";
        std::cout << "gkdim\t" << gk.str() << "\n";
        if (cs.disjoint)
            std::cout << "gkdim_path_algebra\t" << gk_dim_path_algebra(g, ring).str()
                      << "\n";
    } else {
        std::cout << "vertices: " << g.vertex_count() << ", arrows: " << g.arrow_count()
                  << "\n";
        std::cout << "sinks: " << (sinks_os.tellp() > 0 ? sinks_os.str() : "(none)") << "\n";
        std::cout << "cycles: " << cs.cycles.size()
                  << (cs.disjoint ? " (pairwise disjoint)" : " (NOT pairwise disjoint)")
                  << "\n";
        for (const Cycle& c : cs.cycles)
            std::cout << "  cycle " << c.as_path(g).str(g) << ": length " << c.length()
                      << ", exits " << c.exits(g).size() << "\n";
        if (cs.disjoint) {
            CyclePoset ps = build_poset(g);
            for (const PosetNode& n : ps.nodes) {
                std::string label = n.is_cycle
                                        ? "cycle " + ps_name(g, cs, n)
                                        : "sink " + g.vertex_name(n.sink);
                std::cout << "  ht(" << label << ") = " << n.height;
                bool first = true;
                for (int j : n.below) {
                    const PosetNode& b = ps.nodes[(std::size_t)j];
                    std::cout << (first ? "   reaches: " : ", ")
                              << (b.is_cycle ? "cycle " + ps_name(g, cs, b)
                                             : "sink " + g.vertex_name(b.sink));
                    first = false;
                }
                std::cout << "\n";
            }
            std::cout << "ht = " << height(g) << "\n";
        }
        std::cout << "GKdim = " << gk.str() << "  (ring " << ring.name() << ")\n";
        if (cs.disjoint)
            std::cout << "GKdim path algebra = " << gk_dim_path_algebra(g, ring).str()
                      << "\n";
        bool no_exits = cs.disjoint;
        for (const Cycle& c : cs.cycles)
            if (c.has_exit(g)) no_exits = false;
        if (no_exits)
            std::cout << "decomposition: " << decompose_to_text(decompose(g)) << "\n";
    }
}

void cmd_reduce(const std::string& file, const std::string& strategy, const Options& opt) {
    using namespace lpa;
    Digraph g = Digraph::parse(slurp(file));
    EliminationPolicy policy;
    if (strategy == "name-order" || strategy == "max-degree") {
        policy = policy_by_name(strategy);
    } else {
        std::vector<std::string> order;
        std::istringstream ss(strategy);
        std::string tok;
        while (std::getline(ss, tok, ',')) order.push_back(tok);
        policy = scripted_policy(std::move(order));
    }
    ReductionTrace trace = complete_reduction(g, policy);
    if (opt.machine) {
        std::cout << "steps\t" << trace.steps.size() << "\n";
        for (const auto& st : trace.steps) std::cout << "eliminated\t" << st.eliminated << "\n";
    }
    std::cout << trace_to_text(trace);
}

void cmd_closure(const std::string& file, const std::vector<std::string>& verts,
                 const Options& opt) {
    using namespace lpa;
    Digraph g = Digraph::parse(slurp(file));
    VertexSet x;
    for (const auto& v : verts) x.insert(g.vertex_id(v));
    auto render = [&](const VertexSet& s) {
        std::ostringstream os;
        for (VertexId v : s) {
            if (os.tellp() > 0) os << " ";
            os << g.vertex_name(v);
        }
        return os.str();
    };
    std::string h = render(hereditary_closure(g, x));
    std::string hs = render(hereditary_saturated_closure(g, x));
    if (opt.machine) {
        std::cout << "hereditary_closure\t" << h << "\n";
        std::cout << "hereditary_saturated_closure\t" << hs << "\n";
    } else {
        std::cout << "hereditary closure: {" << h << "}\n";
        std::cout << "hereditary saturated closure: {" << hs << "}\n";
    }
}

void cmd_decompose(const std::string& file, const Options& opt) {
    using namespace lpa;
    Digraph g = Digraph::parse(slurp(file));
    auto ss = decompose(g);
    if (opt.machine) {
        for (const auto& s : ss)
            std::cout << "summand\tM_" << s.size << (s.laurent ? "(k[x,x^-1])" : "(k)")
                      << "\t" << s.at << "\n";
    } else {
        std::cout << decompose_to_text(ss) << "\n";
    }
}

void cmd_growth(const std::string& file, int nmax, double tolerance, const Options& opt) {
    using namespace lpa;
    Digraph g = Digraph::parse(slurp(file));
    GrowthTable t = growth_table(g, nmax);
    std::cout << "n\tlower\tupper\n";
    for (const auto& r : t.rows) {
        std::cout << r.n << "\t" << r.lower << "\t";
        if (r.upper_known)
            std::cout << r.upper;
        else
            std::cout << "?";
        std::cout << "\n";
    }
    double fl = fit_degree_lower(t), fu = fit_degree_upper(t);
    std::cout << "fit_lower\t" << fmt_fixed(fl) << "\n";
    std::cout << "fit_upper\t" << fmt_fixed(fu) << "\n";
    int h = height(g);
    std::cout << "ht\t" << h << "\n";
    if (t.upper_partial) std::cout << "upper_partial\tyes\n";
    if (tolerance > 0) {
        bool ok = std::abs(fl - h) <= tolerance && std::abs(fu - h) <= tolerance;
        std::cout << "within_tolerance\t" << (ok ? "yes" : "no") << "\n";
    }
}

void cmd_eval(const std::string& file, const std::string& expr, const Options& opt) {
    using namespace lpa;
    Digraph g = Digraph::parse(slurp(file));
    RingDesc ring = RingDesc::parse(opt.ring);
    Element e = parse_element(g, ring, expr);
    Normalizer norm(g, opt.term_cap);
    std::cout << norm.to_basis_string(e) << "\n";
}

void cmd_rep_audit(const std::string& gfile, const std::string& rfile, const Options& opt) {
    using namespace lpa;
    Digraph g = Digraph::parse(slurp(gfile));
    Representation rep = parse_representation(g, slurp(rfile));
    Verdict iso = check_iso(rep);
    Verdict rel = iso.pass ? relation_audit(rep) : Verdict{false, "skipped: (Iso) fails"};
    if (opt.machine) {
        std::cout << "iso\t" << (iso.pass ? "pass" : "fail") << "\n";
        std::cout << "relations\t" << (rel.pass ? "pass" : "fail") << "\n";
        if (!iso.pass) std::cout << "iso_witness\t" << iso.witness << "\n";
        if (iso.pass && !rel.pass) std::cout << "relations_witness\t" << rel.witness << "\n";
    } else {
        std::cout << "module condition (stacked arrow maps invertible): "
                  << (iso.pass ? "pass" : "FAIL — " + iso.witness) << "\n";
        std::cout << "defining relations on the induced action: "
                  << (rel.pass ? "pass" : "FAIL — " + rel.witness) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for path-algebra quotients of finite digraphs"};
    app.require_subcommand(1);

    Options opt;
    std::string file, rep_file, expr, strategy = "name-order";
    std::vector<std::string> verts;
    int nmax = 12;
    double tolerance = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--ring", opt.ring, "coefficient ring: Z, Q, Zmod:m, laurent");
        sub->add_flag("--machine", opt.machine, "machine-readable key<TAB>value output");
        sub->add_option("--term-cap", opt.term_cap, "normalization term budget");
    };

    auto* analyze = app.add_subcommand("analyze", "sinks, cycles, heights, GK dimensions");
    analyze->add_option("digraph", file, "digraph file")->required();
    add_common(analyze);

    auto* reduce = app.add_subcommand("reduce", "complete reduction trace");
    reduce->add_option("digraph", file, "digraph file")->required();
    reduce->add_option("--strategy", strategy,
                       "name-order | max-degree | comma-separated vertex list");
    add_common(reduce);

    auto* closure = app.add_subcommand("closure", "hereditary saturated closure");
    closure->add_option("digraph", file, "digraph file")->required();
    closure->add_option("vertices", verts, "generating vertices")->required();
    add_common(closure);

    auto* decomp = app.add_subcommand("decompose", "matrix-ring decomposition");
    decomp->add_option("digraph", file, "digraph file")->required();
    add_common(decomp);

    auto* growth = app.add_subcommand("growth", "two-sided growth table and degree fit");
    growth->add_option("digraph", file, "digraph file")->required();
    growth->add_option("--nmax", nmax, "table rows (default 12)");
    growth->add_option("--tolerance", tolerance, "accepted |fit - ht| gap");
    add_common(growth);

    auto* eval = app.add_subcommand("eval", "normalize an element expression");
    eval->add_option("digraph", file, "digraph file")->required();
    eval->add_option("expr", expr, "element expression")->required();
    add_common(eval);

    auto* audit = app.add_subcommand("rep-audit", "audit a representation file");
    audit->add_option("digraph", file, "digraph file")->required();
    audit->add_option("representation", rep_file, "representation file")->required();
    add_common(audit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*analyze) cmd_analyze(file, opt);
        if (*reduce) cmd_reduce(file, strategy, opt);
        if (*closure) cmd_closure(file, verts, opt);
        if (*decomp) cmd_decompose(file, opt);
        if (*growth) cmd_growth(file, nmax, tolerance, opt);
        if (*eval) cmd_eval(file, expr, opt);
        if (*audit) cmd_rep_audit(file, rep_file, opt);
    } catch (const lpa::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const lpa::precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 3;
    } catch (const lpa::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
