#pragma once

#include "loopfloer/errors.hpp"
#include "loopfloer/loops.hpp"
#include "loopfloer/plumbing.hpp"

#include <random>
#include <set>
#include <vector>

namespace corpus {

using loopfloer::Letter;
using loopfloer::Loop;
using loopfloer::PlumbingTree;
using loopfloer::Word;

/** Random letter with subscript magnitude at most max_sub. */
inline Letter random_letter(std::mt19937& rng, int max_sub) {
    std::uniform_int_distribution<int> fam(0, 3);
    std::uniform_int_distribution<int> sub(-max_sub, max_sub);
    Letter l{static_cast<char>('a' + fam(rng)), sub(rng), false};
    while (l.is_stable() && l.sub == 0) l.sub = sub(rng);
    return l;
}

/** A valid loop with at most max_len standard letters, by rejection sampling. */
inline Loop random_loop(std::mt19937& rng, int max_len = 8, int max_sub = 3) {
    std::uniform_int_distribution<int> len(1, max_len);
    while (true) {
        int n = len(rng);
        Word w;
        for (int i = 0; i < n; ++i) w.push_back(random_letter(rng, max_sub));
        if (loopfloer::validate(w).empty()) return Loop::from_word(w);
    }
}

/** Distinct random loops, plus a few dual-only and all-e loops. */
inline std::vector<Loop> loop_corpus(std::size_t count, unsigned seed, int max_len = 8,
                                     int max_sub = 3) {
    std::mt19937 rng(seed);
    std::set<Loop> seen;
    std::vector<Loop> out;
    for (const char* text : {"(e*)", "(e* e*)", "(d0)", "(d0 d0)"}) {
        Loop l = Loop::parse(text);
        seen.insert(l);
        out.push_back(l);
    }
    int attempts = 0;
    while (out.size() < count && attempts < 100000) {
        ++attempts;
        Loop l = random_loop(rng, max_len, max_sub);
        if (seen.insert(l).second) out.push_back(l);
    }
    return out;
}

/** Random tree on n vertices with ids 0..n-1 and weights in [lo, hi]. */
inline PlumbingTree random_tree(std::mt19937& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> weight(lo, hi);
    PlumbingTree t;
    for (int i = 0; i < n; ++i) {
        t.vertices.push_back({i, weight(rng)});
        if (i > 0) {
            std::uniform_int_distribution<int> parent(0, i - 1);
            t.edges.emplace_back(parent(rng), i);
        }
    }
    return t;
}

/** Closed trees with every vertex good and nonzero determinant. */
inline std::vector<PlumbingTree> good_closed_trees(std::size_t count, unsigned seed, int max_n = 10,
                                                   int lo = -5, int hi = 5) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> size(1, max_n);
    std::vector<PlumbingTree> out;
    while (out.size() < count) {
        PlumbingTree t = random_tree(rng, size(rng), lo, hi);
        bool good = true;
        for (const auto& c : loopfloer::classify_vertices(t)) good = good && !c.bad;
        if (good && loopfloer::plumbing_determinant(t) != 0) out.push_back(t);
    }
    return out;
}

/** Trees with boundary on which the pipeline succeeds, non-boundary vertices all good. */
inline std::vector<PlumbingTree> pipeline_trees(std::size_t count, unsigned seed, int max_n = 6,
                                                int lo = -4, int hi = 4) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> size(1, max_n);
    std::vector<PlumbingTree> out;
    while (out.size() < count) {
        PlumbingTree t = random_tree(rng, size(rng), lo, hi);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(t.size()) - 1);
        t.boundary = pick(rng);
        if (!loopfloer::non_boundary_vertices_good(t)) continue;
        try {
            loopfloer::cfd(t);
        } catch (const loopfloer::DomainError&) {
            continue;
        }
        out.push_back(t);
    }
    return out;
}

/**
 * Bordered invariants of pipeline trees: `mixed` collections that are not solid-torus-like
 * followed by `torus` that are, each with at most max_letters letters in total.
 */
inline std::vector<std::vector<Loop>> pipeline_sides(std::size_t mixed, std::size_t torus, unsigned seed,
                                                     std::size_t max_letters = 60) {
    std::vector<std::vector<Loop>> a, b;
    std::size_t batch = 0;
    while (a.size() < mixed || b.size() < torus) {
        for (const PlumbingTree& t : pipeline_trees(200, seed + static_cast<unsigned>(batch++), 9, -4, 4)) {
            std::vector<Loop> loops = loopfloer::cfd(t);
            std::size_t letters = 0;
            bool torus_like = true;
            for (const Loop& l : loops) {
                letters += l.word().size();
                torus_like = torus_like && loopfloer::is_solid_torus_like(l);
            }
            if (letters > max_letters) continue;
            auto& bucket = torus_like ? b : a;
            if (bucket.size() < (torus_like ? torus : mixed)) bucket.push_back(loops);
        }
    }
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

} // namespace corpus
