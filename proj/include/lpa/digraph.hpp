/*
 * digraph.hpp
 * -----------
 * Finite multidigraph model: named vertices and arrows, paths, cycles with
 * canonical rotation, the reachability preorder, hereditary/saturated vertex
 * sets with closures, quotients, and the P_w / P_C path index sets.
 *
 * Digraphs are immutable after construction; all queries are pure.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "lpa/error.hpp"

namespace lpa {

using VertexId = std::uint32_t;
using ArrowId = std::uint32_t;
using VertexSet = std::set<VertexId>;

struct Arrow {
    std::string name;
    VertexId src = 0;
    VertexId dst = 0;
};

struct ArrowSpec {
    std::string name, src, dst;
};

class Digraph {
public:
    Digraph() = default;

    Digraph(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows) {
        for (auto& v : vertices) add_vertex(std::move(v));
        for (const auto& a : arrows) add_arrow(a.name, a.src, a.dst);
        finalize();
    }

    // Line-oriented UTF-8 grammar:
    //   vertex <name>
    //   arrow <name> <src> <dst> [*<k>]     (k copies named <name>_1..k)
    //   # comment
    static Digraph parse(const std::string& text) {
        Digraph g;
        std::istringstream in(text);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::istringstream ls(line);
            std::string kw;
            if (!(ls >> kw)) continue;
            auto fail = [&](const std::string& msg) {
                throw input_error("digraph line " + std::to_string(lineno) + ": " + msg);
            };
            if (kw == "vertex") {
                std::string name, extra;
                if (!(ls >> name)) fail("vertex needs a name");
                if (ls >> extra) fail("trailing tokens after vertex name");
                g.add_vertex(name);
            } else if (kw == "arrow") {
                std::string name, src, dst, mult;
                if (!(ls >> name >> src >> dst)) fail("arrow needs <name> <src> <dst>");
                long k = 1;
                if (ls >> mult) {
                    if (mult.size() < 2 || mult[0] != '*') fail("bad multiplicity: " + mult);
                    try {
                        k = std::stol(mult.substr(1));
                    } catch (const std::logic_error&) {
                        fail("bad multiplicity: " + mult);
                    }
                    if (k < 1) fail("multiplicity must be >= 1");
                    std::string extra;
                    if (ls >> extra) fail("trailing tokens after multiplicity");
                }
                if (k == 1)
                    g.add_arrow(name, src, dst);
                else
                    for (long i = 1; i <= k; ++i)
                        g.add_arrow(name + "_" + std::to_string(i), src, dst);
            } else {
                fail("unknown keyword: " + kw);
            }
        }
        g.finalize();
        return g;
    }

    std::string to_text() const {
        std::ostringstream os;
        for (const auto& v : vertices_) os << "vertex " << v << "\n";
        for (const auto& a : arrows_)
            os << "arrow " << a.name << " " << vertices_[a.src] << " " << vertices_[a.dst]
               << "\n";
        return os.str();
    }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }
    const std::string& vertex_name(VertexId v) const { return vertices_[v]; }
    const Arrow& arrow(ArrowId a) const { return arrows_[a]; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<std::string>& vertex_names() const { return vertices_; }

    VertexId vertex_id(const std::string& name) const {
        auto it = vertex_index_.find(name);
        if (it == vertex_index_.end()) throw input_error("unknown vertex: " + name);
        return it->second;
    }
    ArrowId arrow_id(const std::string& name) const {
        auto it = arrow_index_.find(name);
        if (it == arrow_index_.end()) throw input_error("unknown arrow: " + name);
        return it->second;
    }
    bool has_vertex(const std::string& name) const { return vertex_index_.count(name) > 0; }
    bool has_arrow(const std::string& name) const { return arrow_index_.count(name) > 0; }

    const std::vector<ArrowId>& out_arrows(VertexId v) const { return out_[v]; }
    const std::vector<ArrowId>& in_arrows(VertexId v) const { return in_[v]; }

    bool is_sink(VertexId v) const { return out_[v].empty(); }

    std::vector<VertexId> sinks() const {
        std::vector<VertexId> r;
        for (VertexId v = 0; v < vertices_.size(); ++v)
            if (is_sink(v)) r.push_back(v);
        return r;
    }

    // u ⇝ v: path existence, reflexive.
    bool reaches(VertexId u, VertexId v) const { return reach_[u][v]; }

    bool has_loop_at(VertexId v) const {
        for (ArrowId a : out_[v])
            if (arrows_[a].dst == v) return true;
        return false;
    }

private:
    void add_vertex(std::string name) {
        if (name.empty()) throw input_error("empty vertex name");
        if (!vertex_index_.emplace(name, (VertexId)vertices_.size()).second)
            throw input_error("duplicate vertex name: " + name);
        vertices_.push_back(std::move(name));
    }

    void add_arrow(const std::string& name, const std::string& src, const std::string& dst) {
        if (name.empty()) throw input_error("empty arrow name");
        auto s = vertex_index_.find(src);
        auto t = vertex_index_.find(dst);
        if (s == vertex_index_.end())
            throw input_error("arrow " + name + ": unknown source vertex " + src);
        if (t == vertex_index_.end())
            throw input_error("arrow " + name + ": unknown target vertex " + dst);
        if (!arrow_index_.emplace(name, (ArrowId)arrows_.size()).second)
            throw input_error("duplicate arrow name: " + name);
        arrows_.push_back({name, s->second, t->second});
    }

    void finalize() {
        const std::size_t n = vertices_.size();
        out_.assign(n, {});
        in_.assign(n, {});
        for (ArrowId a = 0; a < arrows_.size(); ++a) {
            out_[arrows_[a].src].push_back(a);
            in_[arrows_[a].dst].push_back(a);
        }
        reach_.assign(n, std::vector<bool>(n, false));
        for (VertexId s = 0; s < n; ++s) {
            std::vector<VertexId> stack{s};
            reach_[s][s] = true;
            while (!stack.empty()) {
                VertexId u = stack.back();
                stack.pop_back();
                for (ArrowId a : out_[u])
                    if (!reach_[s][arrows_[a].dst]) {
                        reach_[s][arrows_[a].dst] = true;
                        stack.push_back(arrows_[a].dst);
                    }
            }
        }
    }

    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::unordered_map<std::string, VertexId> vertex_index_;
    std::unordered_map<std::string, ArrowId> arrow_index_;
    std::vector<std::vector<ArrowId>> out_, in_;
    std::vector<std::vector<bool>> reach_;
};

// A path: base vertex (the whole path when length 0) plus consecutive arrows.
// Invariant: base == source of the first arrow when nonempty.
struct Path {
    VertexId base = 0;
    std::vector<ArrowId> arrows;

    std::size_t length() const { return arrows.size(); }
    VertexId source() const { return base; }
    VertexId target(const Digraph& g) const {
        return arrows.empty() ? base : g.arrow(arrows.back()).dst;
    }

    static Path at(VertexId v) { return Path{v, {}}; }

    Path append(const Digraph& g, ArrowId a) const {
        Path r = *this;
        if (g.arrow(a).src != target(g))
            throw precondition_error("path append: arrow source mismatch");
        r.arrows.push_back(a);
        return r;
    }

    // Concatenation; targets/sources must match.
    Path concat(const Digraph& g, const Path& q) const {
        if (target(g) != q.source()) throw precondition_error("path concat mismatch");
        Path r = *this;
        r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
        return r;
    }

    std::string str(const Digraph& g) const {
        if (arrows.empty()) return g.vertex_name(base);
        std::string s;
        for (std::size_t i = 0; i < arrows.size(); ++i) {
            if (i) s += ".";
            s += g.arrow(arrows[i]).name;
        }
        return s;
    }

    friend bool operator==(const Path& a, const Path& b) {
        return a.base == b.base && a.arrows == b.arrows;
    }
    friend bool operator<(const Path& a, const Path& b) {
        if (a.base != b.base) return a.base < b.base;
        return a.arrows < b.arrows;
    }
};

// A cycle stored in canonical rotation: the base vertex (source of the first
// arrow) is the lexicographically smallest vertex name on the cycle.
struct Cycle {
    std::vector<ArrowId> arrows;

    std::size_t length() const { return arrows.size(); }
    VertexId base(const Digraph& g) const { return g.arrow(arrows.front()).src; }

    std::vector<VertexId> vertices(const Digraph& g) const {
        std::vector<VertexId> vs;
        for (ArrowId a : arrows) vs.push_back(g.arrow(a).src);
        return vs;
    }

    Path as_path(const Digraph& g) const { return Path{base(g), arrows}; }

    // Arrows starting on the cycle that are not cycle arrows.
    std::vector<ArrowId> exits(const Digraph& g) const {
        std::set<ArrowId> own(arrows.begin(), arrows.end());
        std::vector<ArrowId> ex;
        for (ArrowId a : arrows)
            for (ArrowId e : g.out_arrows(g.arrow(a).src))
                if (!own.count(e)) ex.push_back(e);
        return ex;
    }
    bool has_exit(const Digraph& g) const { return !exits(g).empty(); }

    static Cycle canonical(const Digraph& g, std::vector<ArrowId> arrows) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < arrows.size(); ++i)
            if (g.vertex_name(g.arrow(arrows[i]).src) <
                g.vertex_name(g.arrow(arrows[best]).src))
                best = i;
        std::rotate(arrows.begin(), arrows.begin() + (std::ptrdiff_t)best, arrows.end());
        return Cycle{std::move(arrows)};
    }

    friend bool operator==(const Cycle& a, const Cycle& b) { return a.arrows == b.arrows; }
};

struct CycleSet {
    std::vector<Cycle> cycles;
    bool disjoint = true;
    // vertex -> index into cycles, or -1; meaningful when disjoint.
    std::vector<int> cycle_of_vertex;
};

// All cycles up to rotation equivalence, plus the pairwise-disjointness
// verdict. Throws budget_error past `cap` cycles.
inline CycleSet cycles(const Digraph& g, std::size_t cap = 10000) {
    CycleSet cs;
    cs.cycle_of_vertex.assign(g.vertex_count(), -1);
    std::vector<ArrowId> stack;
    std::vector<bool> on_path(g.vertex_count(), false);

    // Each elementary cycle is found once, rooted at its smallest vertex id.
    auto dfs = [&](auto&& self, VertexId root, VertexId u) -> void {
        for (ArrowId a : g.out_arrows(u)) {
            VertexId w = g.arrow(a).dst;
            if (w == root) {
                stack.push_back(a);
                if (cs.cycles.size() >= cap)
                    throw budget_error("cycle count cap exceeded (" + std::to_string(cap) +
                                       ")");
                cs.cycles.push_back(Cycle::canonical(g, stack));
                stack.pop_back();
            } else if (w > root && !on_path[w]) {
                stack.push_back(a);
                on_path[w] = true;
                self(self, root, w);
                on_path[w] = false;
                stack.pop_back();
            }
        }
    };
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        on_path[v] = true;
        dfs(dfs, v, v);
        on_path[v] = false;
    }

    std::sort(cs.cycles.begin(), cs.cycles.end(), [&](const Cycle& a, const Cycle& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        for (std::size_t i = 0; i < a.length(); ++i) {
            const auto& an = g.arrow(a.arrows[i]).name;
            const auto& bn = g.arrow(b.arrows[i]).name;
            if (an != bn) return an < bn;
        }
        return false;
    });

    for (std::size_t i = 0; i < cs.cycles.size(); ++i)
        for (VertexId v : cs.cycles[i].vertices(g)) {
            if (cs.cycle_of_vertex[v] != -1 && cs.cycle_of_vertex[v] != (int)i)
                cs.disjoint = false;
            cs.cycle_of_vertex[v] = (int)i;
        }
    return cs;
}

inline bool is_hereditary(const Digraph& g, const VertexSet& h) {
    for (const Arrow& a : g.arrows())
        if (h.count(a.src) && !h.count(a.dst)) return false;
    return true;
}

inline bool is_saturated(const Digraph& g, const VertexSet& h) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.is_sink(v) || h.count(v)) continue;
        bool all_in = true;
        for (ArrowId a : g.out_arrows(v))
            if (!h.count(g.arrow(a).dst)) {
                all_in = false;
                break;
            }
        if (all_in) return false;
    }
    return true;
}

// Smallest hereditary superset: the successors of X.
inline VertexSet hereditary_closure(const Digraph& g, const VertexSet& x) {
    VertexSet s = x;
    std::vector<VertexId> stack(x.begin(), x.end());
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (ArrowId a : g.out_arrows(u)) {
            VertexId w = g.arrow(a).dst;
            if (s.insert(w).second) stack.push_back(w);
        }
    }
    return s;
}

// Least hereditary-and-saturated superset: close under successors, then
// repeatedly add every non-sink all of whose arrow targets are inside.
inline VertexSet hereditary_saturated_closure(const Digraph& g, const VertexSet& x) {
    VertexSet s = hereditary_closure(g, x);
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (s.count(v) || g.is_sink(v)) continue;
            bool all_in = true;
            for (ArrowId a : g.out_arrows(v))
                if (!s.count(g.arrow(a).dst)) {
                    all_in = false;
                    break;
                }
            if (all_in) {
                s.insert(v);
                changed = true;
            }
        }
    }
    return s;
}

// Γ/H: the full subgraph on V∖H. H must be hereditary and saturated.
inline Digraph quotient(const Digraph& g, const VertexSet& h) {
    if (!is_hereditary(g, h))
        throw precondition_error("quotient: vertex set is not hereditary");
    if (!is_saturated(g, h))
        throw precondition_error("quotient: vertex set is not saturated");
    std::vector<std::string> verts;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!h.count(v)) verts.push_back(g.vertex_name(v));
    std::vector<ArrowSpec> arrs;
    for (const Arrow& a : g.arrows())
        if (!h.count(a.src) && !h.count(a.dst))
            arrs.push_back({a.name, g.vertex_name(a.src), g.vertex_name(a.dst)});
    return Digraph(std::move(verts), arrs);
}

// Full subgraph on an arbitrary vertex set (keeps names).
inline Digraph full_subgraph(const Digraph& g, const VertexSet& keep) {
    std::vector<std::string> verts;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (keep.count(v)) verts.push_back(g.vertex_name(v));
    std::vector<ArrowSpec> arrs;
    for (const Arrow& a : g.arrows())
        if (keep.count(a.src) && keep.count(a.dst))
            arrs.push_back({a.name, g.vertex_name(a.src), g.vertex_name(a.dst)});
    return Digraph(std::move(verts), arrs);
}

struct PathSet {
    std::vector<Path> paths;  // length-then-lexicographic by arrow names
    bool infinite = false;    // true: `paths` holds all members up to the bound
};

namespace detail {

inline void sort_paths(const Digraph& g, std::vector<Path>& ps) {
    std::sort(ps.begin(), ps.end(), [&](const Path& a, const Path& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        for (std::size_t i = 0; i < a.length(); ++i) {
            const auto& an = g.arrow(a.arrows[i]).name;
            const auto& bn = g.arrow(b.arrows[i]).name;
            if (an != bn) return an < bn;
        }
        return g.vertex_name(a.base) < g.vertex_name(b.base);
    });
}

inline bool ends_with_cycle(const Path& p, const Cycle& c) {
    if (p.length() < c.length()) return false;
    return std::equal(c.arrows.begin(), c.arrows.end(), p.arrows.end() - (std::ptrdiff_t)c.length());
}

// Reverse-extension enumeration of paths ending at `target`. `prune` decides
// whether a path (and all its front-extensions, which share its suffix) is
// discarded. Stops at `max_len` when bounded >= 0.
template <typename Prune>
inline std::vector<Path> paths_into(const Digraph& g, VertexId target, Prune prune,
                                    long max_len, std::size_t budget = 1000000) {
    std::vector<Path> out, frontier{Path::at(target)};
    long len = 0;
    while (!frontier.empty() && (max_len < 0 || len <= max_len)) {
        for (const Path& p : frontier) out.push_back(p);
        if (max_len >= 0 && len == max_len) break;
        std::vector<Path> next;
        for (const Path& p : frontier)
            for (ArrowId a : g.in_arrows(p.source())) {
                Path q{g.arrow(a).src, {}};
                q.arrows.reserve(p.length() + 1);
                q.arrows.push_back(a);
                q.arrows.insert(q.arrows.end(), p.arrows.begin(), p.arrows.end());
                if (!prune(q)) next.push_back(std::move(q));
            }
        if (out.size() + next.size() > budget)
            throw budget_error("path enumeration budget exceeded");
        frontier = std::move(next);
        ++len;
    }
    return out;
}

}  // namespace detail

// P_w for a sink w: all paths ending at w (w cannot occur mid-path).
// Infinite iff some cycle reaches w; then members up to `length_bound` are
// returned with the infinite flag set.
inline PathSet enumerate_P_sink(const Digraph& g, VertexId w,
                                std::optional<VertexId> from = std::nullopt,
                                long length_bound = 16) {
    if (!g.is_sink(w)) throw precondition_error("enumerate_P_sink: vertex is not a sink");
    PathSet ps;
    CycleSet cs = cycles(g);
    for (const Cycle& c : cs.cycles)
        if (g.reaches(c.base(g), w)) ps.infinite = true;
    auto all = detail::paths_into(
        g, w, [](const Path&) { return false; }, ps.infinite ? length_bound : -1);
    for (auto& p : all)
        if (!from || p.source() == *from) ps.paths.push_back(std::move(p));
    detail::sort_paths(g, ps.paths);
    return ps;
}

// P_C: paths ending at sC that do not end with a full copy of C.
// Requires pairwise disjoint cycles. Infinite iff another cycle reaches sC.
inline PathSet enumerate_P_cycle(const Digraph& g, const Cycle& c,
                                 std::optional<VertexId> from = std::nullopt,
                                 long length_bound = 16) {
    CycleSet cs = cycles(g);
    if (!cs.disjoint)
        throw precondition_error("enumerate_P_cycle: cycles are not pairwise disjoint");
    PathSet ps;
    VertexId base = c.base(g);
    for (const Cycle& d : cs.cycles)
        if (!(d == c) && g.reaches(d.base(g), base)) ps.infinite = true;
    auto all = detail::paths_into(
        g, base, [&](const Path& p) { return detail::ends_with_cycle(p, c); },
        ps.infinite ? length_bound : -1);
    for (auto& p : all)
        if (!from || p.source() == *from) ps.paths.push_back(std::move(p));
    detail::sort_paths(g, ps.paths);
    return ps;
}

}  // namespace lpa
