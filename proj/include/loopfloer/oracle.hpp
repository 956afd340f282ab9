#pragma once

#include "loopfloer/algebra.hpp"
#include "loopfloer/loops.hpp"
#include "loopfloer/twists.hpp"

#include <vector>

namespace loopfloer {

struct AGenerator {
    Idem idem = Idem::Bullet;
    int grading = 0;
};

/** m_{k+1}(source, inputs) = target. */
struct AOperation {
    int source = 0;
    std::vector<Alg> inputs;
    int target = 0;
};

struct TypeAStructure {
    std::vector<AGenerator> generators;
    std::vector<AOperation> operations;
};

/**
 * Type A structure of the loop graph g, with operations read off directed edge
 * paths (subscripts 1 and 3 exchanged), keeping input sequences of length at most
 * max_len. g must have no identity edges.
 */
TypeAStructure to_type_a(const DecoratedGraph& g, int max_len);

/**
 * Replaces edges on directed cycles by zig-zags through an identity edge until the
 * graph is acyclic. choice = 0 splits the first eligible edge of each cycle found,
 * choice = 1 the last.
 */
DecoratedGraph make_bounded(const DecoratedGraph& g, int choice = 0);

/** Box tensor product; D must be acyclic. Generators are tagged with `component`. */
void box_tensor_into(const TypeAStructure& a, const DecoratedGraph& d, int component,
                     ChainComplexF2& out);
ChainComplexF2 box_tensor(const TypeAStructure& a, const DecoratedGraph& d);

/** Complex of l1^A ⊠ l2 over all loop pairs, one component per pair. */
ChainComplexF2 pair_complex(const std::vector<Loop>& loops1, const std::vector<Loop>& loops2,
                            int bounding_choice = 0);
/** Per-pair (dim, χ) of the pairing. */
FillingResult pair_result(const std::vector<Loop>& loops1, const std::vector<Loop>& loops2);
bool pair_is_lspace(const std::vector<Loop>& loops1, const std::vector<Loop>& loops2);
/** Filling computed by pairing the solid torus (d0) against reparametrize(l, s). */
FillingResult fill_oracle(const std::vector<Loop>& loops, const Slope& s);

} // namespace loopfloer
