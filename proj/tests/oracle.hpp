// Test-only brute-force oracles, independent of the library's monomial
// representation: words over V ⊔ E ⊔ E* reduced with the defining relations
// (V), (E), (CK1) (all length-decreasing), plus a CK2-contraction rewriter
// on word sums (replace a complete family α e e* β, se = v, by α v β).
#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "lpa/digraph.hpp"
#include "lpa/ring.hpp"

namespace oracle {

using lpa::ArrowId;
using lpa::Digraph;
using lpa::Rat;
using lpa::VertexId;

struct LVertex {
    VertexId v;
    friend bool operator==(LVertex a, LVertex b) { return a.v == b.v; }
    friend bool operator<(LVertex a, LVertex b) { return a.v < b.v; }
};
struct LArrow {
    ArrowId e;
    friend bool operator==(LArrow a, LArrow b) { return a.e == b.e; }
    friend bool operator<(LArrow a, LArrow b) { return a.e < b.e; }
};
struct LDual {
    ArrowId e;
    friend bool operator==(LDual a, LDual b) { return a.e == b.e; }
    friend bool operator<(LDual a, LDual b) { return a.e < b.e; }
};
using Letter = std::variant<LVertex, LArrow, LDual>;
using Word = std::vector<Letter>;

inline VertexId source_of(const Digraph& g, const Letter& l) {
    if (auto* v = std::get_if<LVertex>(&l)) return v->v;
    if (auto* a = std::get_if<LArrow>(&l)) return g.arrow(a->e).src;
    return g.arrow(std::get<LDual>(l).e).dst;  // dual runs backwards
}
inline VertexId target_of(const Digraph& g, const Letter& l) {
    if (auto* v = std::get_if<LVertex>(&l)) return v->v;
    if (auto* a = std::get_if<LArrow>(&l)) return g.arrow(a->e).dst;
    return g.arrow(std::get<LDual>(l).e).src;
}

// One (V)/(E)/(CK1) step on an adjacent pair: the replacement letters, or
// nullopt when the whole word is zero, or no value change when irreducible.
struct StepResult {
    bool applied = false;
    bool zero = false;
    std::vector<Letter> replacement;  // for the pair, when applied && !zero
};

inline StepResult reduce_pair(const Digraph& g, const Letter& a, const Letter& b) {
    StepResult r;
    // adjacency: target of a must match source of b, else the product is 0
    if (target_of(g, a) != source_of(g, b)) {
        r.applied = true;
        r.zero = true;
        return r;
    }
    bool av = std::holds_alternative<LVertex>(a);
    bool bv = std::holds_alternative<LVertex>(b);
    if (av && bv) {  // (V): v v = v
        r.applied = true;
        r.replacement = {a};
        return r;
    }
    if (av) {  // (E): v e = e, v e* = e*
        r.applied = true;
        r.replacement = {b};
        return r;
    }
    if (bv) {  // (E): e v = e, e* v = e*
        r.applied = true;
        r.replacement = {a};
        return r;
    }
    if (std::holds_alternative<LDual>(a) && std::holds_alternative<LArrow>(b)) {
        // (CK1): e* f = δ_{e,f} te
        ArrowId e = std::get<LDual>(a).e, f = std::get<LArrow>(b).e;
        r.applied = true;
        if (e != f) {
            r.zero = true;
        } else {
            r.replacement = {LVertex{g.arrow(e).dst}};
        }
        return r;
    }
    return r;  // e f, e f*, e* f* with matching endpoints: irreducible
}

// Full reduction; nullopt means the word is 0. The empty word never arises
// from nonempty input (replacements have length >= 1).
inline std::optional<Word> reduce_word(const Digraph& g, Word w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            StepResult r = reduce_pair(g, w[i], w[i + 1]);
            if (!r.applied) continue;
            if (r.zero) return std::nullopt;
            w.erase(w.begin() + (std::ptrdiff_t)i, w.begin() + (std::ptrdiff_t)i + 2);
            w.insert(w.begin() + (std::ptrdiff_t)i, r.replacement.begin(),
                     r.replacement.end());
            changed = true;
            break;
        }
    }
    return w;
}

// Word sum with exact rational coefficients; words kept (V)/(E)/(CK1)-reduced.
using WordSum = std::map<Word, Rat>;

inline void add_word(const Digraph& g, WordSum& s, Word w, const Rat& c) {
    if (c == 0) return;
    auto r = reduce_word(g, std::move(w));
    if (!r) return;
    auto it = s.find(*r);
    if (it == s.end()) {
        s.emplace(std::move(*r), c);
    } else {
        it->second += c;
        if (it->second == 0) s.erase(it);
    }
}

// One CK2 contraction: find a word containing f f* at position i with
// sf = v such that for EVERY arrow e with se = v the variant word (with e e*
// in place of f f*) is present with the same coefficient; replace the family
// by that coefficient times the contracted word.
inline bool ck2_contract_once(const Digraph& g, WordSum& s) {
    for (const auto& [w, c] : s) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            auto* ar = std::get_if<LArrow>(&w[i]);
            auto* du = std::get_if<LDual>(&w[i + 1]);
            if (!ar || !du || ar->e != du->e) continue;
            VertexId v = g.arrow(ar->e).src;
            const auto& outs = g.out_arrows(v);
            bool complete = true;
            std::vector<Word> family;
            for (ArrowId e : outs) {
                Word variant = w;
                variant[i] = LArrow{e};
                variant[i + 1] = LDual{e};
                auto it = s.find(variant);
                if (it == s.end() || it->second != c) {
                    complete = false;
                    break;
                }
                family.push_back(std::move(variant));
            }
            if (!complete) continue;
            // copy before erasing: w aliases one of the map nodes
            Word base = w;
            Rat coeff = c;
            for (const Word& fw : family) s.erase(fw);
            Word contracted(base.begin(), base.begin() + (std::ptrdiff_t)i);
            contracted.push_back(LVertex{v});
            contracted.insert(contracted.end(), base.begin() + (std::ptrdiff_t)i + 2,
                              base.end());
            add_word(g, s, std::move(contracted), coeff);
            return true;
        }
    }
    return false;
}

inline void ck2_contract(const Digraph& g, WordSum& s) {
    while (ck2_contract_once(g, s)) {
    }
}

// Residual of  sC − CC* − Σ_{r proper prefix of C, f exit at tr} r f f* r*
// under the word rewriter; empty iff the seam identity holds.
inline WordSum seam_identity_residual(const Digraph& g, const lpa::Cycle& c) {
    WordSum s;
    VertexId base = c.base(g);
    add_word(g, s, {LVertex{base}}, Rat(1));

    Word cc;
    for (ArrowId a : c.arrows) cc.push_back(LArrow{a});
    for (auto it = c.arrows.rbegin(); it != c.arrows.rend(); ++it)
        cc.push_back(LDual{*it});
    add_word(g, s, std::move(cc), Rat(-1));

    std::vector<ArrowId> prefix;
    for (std::size_t j = 0; j < c.length(); ++j) {
        VertexId v = g.arrow(c.arrows[j]).src;
        for (ArrowId f : g.out_arrows(v)) {
            if (f == c.arrows[j]) continue;
            Word w;
            if (prefix.empty()) w.push_back(LVertex{base});
            for (ArrowId a : prefix) w.push_back(LArrow{a});
            w.push_back(LArrow{f});
            w.push_back(LDual{f});
            for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
                w.push_back(LDual{*it});
            add_word(g, s, std::move(w), Rat(-1));
        }
        prefix.push_back(c.arrows[j]);
    }
    ck2_contract(g, s);
    return s;
}

}  // namespace oracle
