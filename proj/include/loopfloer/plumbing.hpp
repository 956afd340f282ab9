#pragma once

#include "loopfloer/loops.hpp"
#include "loopfloer/twists.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace loopfloer {

struct TreeVertex {
    int id = 0;
    int weight = 0;

    bool operator==(const TreeVertex&) const = default;
};

/** A weighted tree with at most one boundary half-edge. */
struct PlumbingTree {
    std::vector<TreeVertex> vertices;
    std::vector<std::pair<int, int>> edges;
    std::optional<int> boundary;

    std::size_t size() const { return vertices.size(); }
    int weight(int id) const;
    bool has_vertex(int id) const;
    /** Neighbour ids in ascending order. */
    std::vector<int> neighbors(int id) const;
    std::size_t valence(int id) const { return neighbors(id).size(); }
    /** Throws ParseError on cycles, disconnection, duplicate or dangling ids. */
    void validate() const;
    /** The same tree with the boundary moved to the given vertex (or removed). */
    PlumbingTree with_boundary(std::optional<int> id) const;
    std::string str() const;
};

/** Lines `v <id> <weight>`, `e <id> <id>`, `b <id>`; `#` comments; ';' also separates lines. */
PlumbingTree parse_tree(const std::string& text);

/** Determinant of the linking matrix: weights on the diagonal, 1 for each edge. */
std::int64_t plumbing_determinant(const PlumbingTree& t);

struct VertexClass {
    int id = 0;
    int n_plus = 0;
    int n_minus = 0;
    bool bad = false;
};

/** Bad iff −n₋ < w < n₊, counting tree neighbours only. */
std::vector<VertexClass> classify_vertices(const PlumbingTree& t);
bool is_bad_vertex(const PlumbingTree& t, int id);
/** Every vertex other than the boundary vertex is good. */
bool non_boundary_vertices_good(const PlumbingTree& t);

/** Merge of ℓ1, which must be all-unstable with bullets, against any ℓ2. */
std::vector<Loop> merge_loops(const Loop& l1, const Loop& l2);
/** Pairwise merge of two collections, choosing an all-unstable side for each pair. */
std::vector<Loop> merge_collections(const std::vector<Loop>& a, const std::vector<Loop>& b);

/** Bordered invariant of a tree with boundary, via twist, extend and merge. */
std::vector<Loop> cfd(const PlumbingTree& t);

struct ClosedResult {
    int dim = 0;
    bool is_lspace = false;
    int attach_vertex = 0;
    std::vector<Loop> bordered;
};

/** Dimension of HF-hat of the closed graph manifold; at most one bad vertex. */
ClosedResult hf_dim_closed(const PlumbingTree& t);

/** Star-shaped tree with central weight e0 and one leg per (α, β), α > β ≥ 1. */
PlumbingTree seifert_tree(int e0, const std::vector<std::pair<int, int>>& cone,
                          bool with_boundary = false);
/** The tree 0 – 0 with leaves t and −t on the second vertex, boundary on the first. */
PlumbingTree n_t_tree(int t);
/** Loop of the staircase knot complement with the given step lengths, framing m and τ. */
Loop staircase_loop(const std::vector<int>& exponents, int framing, int tau);

} // namespace loopfloer
