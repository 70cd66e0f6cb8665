/*
 * reduction.hpp
 * -------------
 * The graph reduction algorithm: eliminate a loopless nonsink v, replacing
 * every length-2 path f·g through v by a composite arrow from sf to tg.
 * Reductions preserve sinks, cycles (as loops in the end), and height, and
 * the reduced algebra embeds into the original via φ (composite arrows map
 * back to genuine length-2 paths).
 */
#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/sampling.hpp"

namespace lpa {

struct NewArrow {
    std::string name;  // "f·g", nesting as "(f·g)·h"
    std::string f, g;  // provenance: arrow names in the pre-step digraph
};

struct ReductionStep {
    std::string eliminated;
    std::vector<NewArrow> new_arrows;
    Digraph before, after;
};

struct ReductionTrace {
    Digraph start;
    std::vector<ReductionStep> steps;
    Digraph end;
};

namespace detail {

inline std::string composite_name(const std::string& f, const std::string& g) {
    auto wrap = [](const std::string& s) {
        return s.find("·") != std::string::npos ? "(" + s + ")" : s;
    };
    return wrap(f) + "·" + wrap(g);
}

}  // namespace detail

inline bool is_completely_reduced(const Digraph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!g.is_sink(v) && !g.has_loop_at(v)) return false;
    return true;
}

inline std::pair<Digraph, ReductionStep> reduce_step(const Digraph& g, VertexId v) {
    if (g.is_sink(v)) throw precondition_error("cannot eliminate a sink");
    if (g.has_loop_at(v)) throw precondition_error("cannot eliminate a vertex with a loop");

    ReductionStep step;
    step.eliminated = g.vertex_name(v);
    step.before = g;

    std::vector<std::string> verts;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        if (u != v) verts.push_back(g.vertex_name(u));
    std::vector<ArrowSpec> arrs;
    for (const Arrow& a : g.arrows())
        if (a.src != v && a.dst != v)
            arrs.push_back({a.name, g.vertex_name(a.src), g.vertex_name(a.dst)});
    for (ArrowId fi : g.in_arrows(v))
        for (ArrowId gi : g.out_arrows(v)) {
            const Arrow& f = g.arrow(fi);
            const Arrow& gg = g.arrow(gi);
            std::string name = detail::composite_name(f.name, gg.name);
            step.new_arrows.push_back({name, f.name, gg.name});
            arrs.push_back({name, g.vertex_name(f.src), g.vertex_name(gg.dst)});
        }
    Digraph reduced(std::move(verts), arrs);
    step.after = reduced;
    return {std::move(reduced), std::move(step)};
}

// Elimination order policy: pick the next loopless nonsink, or nothing.
using EliminationPolicy = std::function<std::optional<VertexId>(const Digraph&)>;

inline EliminationPolicy name_order_policy() {
    return [](const Digraph& g) -> std::optional<VertexId> {
        std::optional<VertexId> best;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (g.is_sink(v) || g.has_loop_at(v)) continue;
            if (!best || g.vertex_name(v) < g.vertex_name(*best)) best = v;
        }
        return best;
    };
}

inline EliminationPolicy max_degree_policy() {
    return [](const Digraph& g) -> std::optional<VertexId> {
        std::optional<VertexId> best;
        std::size_t best_deg = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (g.is_sink(v) || g.has_loop_at(v)) continue;
            std::size_t deg = g.in_arrows(v).size() + g.out_arrows(v).size();
            if (!best || deg > best_deg ||
                (deg == best_deg && g.vertex_name(v) < g.vertex_name(*best))) {
                best = v;
                best_deg = deg;
            }
        }
        return best;
    };
}

// User-scripted order: eliminate the listed vertices in the given order,
// then fall back to name order until completely reduced.
inline EliminationPolicy scripted_policy(std::vector<std::string> order) {
    auto remaining = std::make_shared<std::vector<std::string>>(std::move(order));
    return [remaining](const Digraph& g) -> std::optional<VertexId> {
        while (!remaining->empty()) {
            std::string name = remaining->front();
            remaining->erase(remaining->begin());
            if (!g.has_vertex(name)) continue;
            VertexId v = g.vertex_id(name);
            if (g.is_sink(v) || g.has_loop_at(v))
                throw precondition_error("scripted elimination of " + name +
                                         " which is a sink or has a loop");
            return v;
        }
        return name_order_policy()(g);
    };
}

inline EliminationPolicy policy_by_name(const std::string& name) {
    if (name == "name-order") return name_order_policy();
    if (name == "max-degree") return max_degree_policy();
    throw input_error("unknown elimination strategy: " + name);
}

inline ReductionTrace complete_reduction(const Digraph& g, EliminationPolicy policy) {
    ReductionTrace trace;
    trace.start = g;
    Digraph cur = g;
    while (auto v = policy(cur)) {
        auto [next, step] = reduce_step(cur, *v);
        trace.steps.push_back(std::move(step));
        cur = std::move(next);
    }
    trace.end = cur;
    return trace;
}

inline ReductionTrace complete_reduction(const Digraph& g,
                                         const std::string& strategy = "name-order") {
    return complete_reduction(g, policy_by_name(strategy));
}

// Exact multidigraph isomorphism for completely reduced digraphs (tiny by
// construction): search vertex bijections preserving arrow multiplicities.
inline bool reduced_isomorphic(const Digraph& g1, const Digraph& g2) {
    if (!is_completely_reduced(g1) || !is_completely_reduced(g2))
        throw precondition_error("reduced_isomorphic requires completely reduced inputs");
    const std::size_t n = g1.vertex_count();
    if (n != g2.vertex_count() || g1.arrow_count() != g2.arrow_count()) return false;

    auto mult = [](const Digraph& g) {
        std::vector<std::vector<std::size_t>> m(g.vertex_count(),
                                                std::vector<std::size_t>(g.vertex_count(), 0));
        for (const Arrow& a : g.arrows()) ++m[a.src][a.dst];
        return m;
    };
    auto m1 = mult(g1), m2 = mult(g2);
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                if (m1[i][j] != m2[perm[i]][perm[j]]) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// φ for a single step: maps an element over the post-step digraph into the
// pre-step digraph; composite arrows expand to their length-2 paths.
inline Element embed_phi(const ReductionStep& step, const Element& a) {
    const Digraph& from = step.after;
    const Digraph& to = step.before;
    if (&a.graph() != &from)
        throw precondition_error("embed_phi: element is not over the step's reduced digraph");

    std::unordered_map<std::string, std::pair<std::string, std::string>> prov;
    for (const NewArrow& na : step.new_arrows) prov[na.name] = {na.f, na.g};

    auto arrow_image = [&](ArrowId ai) -> Path {
        const std::string& name = from.arrow(ai).name;
        auto it = prov.find(name);
        if (it == prov.end()) {
            ArrowId orig = to.arrow_id(name);
            Path p = Path::at(to.arrow(orig).src);
            return p.append(to, orig);
        }
        ArrowId f = to.arrow_id(it->second.first);
        ArrowId g2 = to.arrow_id(it->second.second);
        Path p = Path::at(to.arrow(f).src);
        return p.append(to, f).append(to, g2);
    };
    auto path_image = [&](const Path& p) -> Path {
        Path out = Path::at(to.vertex_id(from.vertex_name(p.source())));
        for (ArrowId a2 : p.arrows) out = out.concat(to, arrow_image(a2));
        return out;
    };

    Element out(to, a.ring());
    for (const auto& [m, c] : a.terms())
        out.add_term(Monomial{path_image(m.p), path_image(m.q)}, c);
    return out;
}

namespace detail {

// Rebind an element onto an equal digraph stored elsewhere (matches by name).
inline Element rebind(const Element& a, const Digraph& host) {
    const Digraph& from = a.graph();
    Element out(host, a.ring());
    for (const auto& [m, c] : a.terms()) {
        auto remap = [&](const Path& p) {
            Path r = Path::at(host.vertex_id(from.vertex_name(p.source())));
            for (ArrowId a2 : p.arrows) r = r.append(host, host.arrow_id(from.arrow(a2).name));
            return r;
        };
        out.add_term(Monomial{remap(m.p), remap(m.q)}, c);
    }
    return out;
}

}  // namespace detail

// φ along a whole trace: element over trace.end mapped into trace.start.
// Copies of the intermediate digraphs are rebound by vertex/arrow name.
inline Element embed_phi(const ReductionTrace& trace, const Element& a) {
    if (trace.steps.empty()) return a;
    Element cur = detail::rebind(a, trace.steps.back().after);
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        Element next = embed_phi(*it, cur);
        if (std::next(it) != trace.steps.rend())
            cur = detail::rebind(next, std::next(it)->after);
        else
            cur = detail::rebind(next, trace.start);
    }
    return cur;
}

// Sinks and cycle counts preserved; φ of sampled elements lands in the
// corner on surviving vertices; for acyclic digraphs the corner dimension
// matches dim L of the reduced digraph (independent basis enumerations).
inline Verdict corner_correspondence_check(const Digraph& g, const ReductionTrace& trace,
                                           int samples, unsigned seed = 2024) {
    VertexSet survivors;
    for (const auto& name : trace.end.vertex_names()) survivors.insert(g.vertex_id(name));

    // sinks preserved
    {
        std::set<std::string> s1, s2;
        for (VertexId w : g.sinks()) s1.insert(g.vertex_name(w));
        for (VertexId w : trace.end.sinks()) s2.insert(trace.end.vertex_name(w));
        if (s1 != s2) return {false, "sinks not preserved"};
    }
    // cycle count preserved
    if (cycles(g).cycles.size() != cycles(trace.end).cycles.size())
        return {false, "cycle count not preserved"};

    std::mt19937 rng(seed);
    for (int s = 0; s < samples; ++s) {
        Element a = random_element(trace.end, RingDesc::Q(), rng);
        Element img = embed_phi(trace, a);
        for (const auto& [m, c] : img.terms())
            if (!survivors.count(m.p.source()) || !survivors.count(m.q.source()))
                return {false, "phi image escapes the corner at sample " + std::to_string(s)};
    }

    if (cycles(g).cycles.empty()) {
        std::size_t dim_reduced = 0;
        for (VertexId w : trace.end.sinks()) {
            auto ps = enumerate_P_sink(trace.end, w);
            dim_reduced += ps.paths.size() * ps.paths.size();
        }
        std::size_t dim_corner = 0;
        for (VertexId w : g.sinks()) {
            auto ps = enumerate_P_sink(g, w);
            std::size_t k = 0;
            for (const Path& p : ps.paths)
                if (survivors.count(p.source())) ++k;
            dim_corner += k * k;
        }
        if (dim_reduced != dim_corner) {
            std::ostringstream os;
            os << "corner dimension mismatch: dim L(end)=" << dim_reduced
               << " corner dim=" << dim_corner;
            return {false, os.str()};
        }
    }
    return {true, ""};
}

// Trace rendered as text: one step per block, then the final digraph in the
// input grammar (pipeable back into the tool).
inline std::string trace_to_text(const ReductionTrace& trace) {
    std::ostringstream os;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& st = trace.steps[i];
        os << "# step " << (i + 1) << ": eliminate " << st.eliminated << "\n";
        for (const auto& na : st.new_arrows)
            os << "#   new arrow " << na.name << " from " << na.f << " then " << na.g << "\n";
    }
    os << trace.end.to_text();
    return os.str();
}

}  // namespace lpa
