#pragma once

#include "loopfloer/loops.hpp"
#include "loopfloer/slope.hpp"
#include "loopfloer/twists.hpp"

#include <optional>
#include <vector>

namespace loopfloer {

/** The word, or its reversal, has a d-family letter and no c-family letter. */
bool lspace_word(const Word& w);
/** The word, or its reversal, splits into d_k, b1 a-1 and b-1 a1 with the mixed pairs never adjacent. */
bool strict_word(const Word& w);

bool loop_lspace_slope(const Loop& l, const Slope& s);
bool loop_strict_lspace_slope(const Loop& l, const Slope& s);
bool is_lspace_slope(const std::vector<Loop>& loops, const Slope& s);
bool is_strict_lspace_slope(const std::vector<Loop>& loops, const Slope& s);

/** Sign class of the A+/A- subword sets on a word with no c-family letter: +1, -1, 0 (neither) or 2 (both). */
int subword_sign_class(const Word& w);
/** Subword sign class of the loop in standard (dual = false) or dual notation, oriented to avoid c letters. */
int loop_sign_class(const Loop& l, bool dual);

enum class Simplicity { Yes, No, Unknown };
std::string to_string(Simplicity s);

/** First slope (∞, 0, then Stern–Brocot order) at which the reparametrized loop has only c/d letters. */
std::optional<Slope> find_unstable_slope(const Loop& l, int depth = 8);
Simplicity is_simple(const Loop& l, int depth = 8);

struct Normalization {
    int case_id = 0;
    /** Twists carrying l to final_loop; slope x of l becomes log.act(x). */
    TwistWord log;
    Loop final_loop = Loop::parse("d0");
};

/** The endpoint-finding normalisation; throws DomainError("not_simple") if no start slope is found. */
Normalization normalize_simple(const Loop& l, int depth = 8);

/** L-space slopes of one loop: exact for simple loops, sweep-based otherwise. */
SlopeSet lspace_interval(const Loop& l, int depth = 8);
SlopeSet lspace_interval(const std::vector<Loop>& loops, int depth = 8);
/** Interval located by sampling the Stern–Brocot tree and refining by mediants. */
SlopeSet sweep_interval(const Loop& l, int depth = 6, int refine_steps = 256);

} // namespace loopfloer
