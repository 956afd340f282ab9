#pragma once

#include "loopfloer/loops.hpp"
#include "loopfloer/slope.hpp"

#include <string>
#include <vector>

namespace loopfloer {

enum class TwistKind { Tw, TwInverse, Du, DuInverse };

/** tw^n or du^n applied to a loop; n may be negative. */
Loop tw_power(const Loop& l, int n);
Loop du_power(const Loop& l, int n);
/** The operation `kind` applied n ≥ 1 times. */
Loop twist(const Loop& l, TwistKind kind, int n = 1);
/** x_k ↦ x*_{-k} on the standard word, or x*_k ↦ x_{-k} when only the dual word exists. */
Loop ex(const Loop& l);

struct TwistOp {
    enum class Kind { Tw, Du } kind = Kind::Tw;
    int exponent = 0;

    bool operator==(const TwistOp&) const = default;
};

/** A composite of twists, applied left to right. */
struct TwistWord {
    std::vector<TwistOp> ops;

    void tw(int n);
    void du(int n);
    /** Appends ex, written as tw then du⁻¹ then tw. */
    void ex();
    void append(const TwistWord& other);
    TwistWord inverse() const;

    /** Image of a slope of the original loop as a slope of the twisted loop. */
    Slope act(const Slope& s) const;
    Loop apply(const Loop& l) const;
    std::string str() const;

    bool operator==(const TwistWord&) const = default;
};

enum class Parity { Even, Odd, Any };
enum class FractionStyle {
    Alternating, ///< floor, ceiling, floor, ... until exact
    Positive,    ///< floors throughout; terms after the first are positive for s > 0
    Negative     ///< ceilings throughout; terms after the first are negative for s < 0
};

/** [a1, …, an] with s = a1 + 1/(a2 + 1/(… + 1/an)); ∞ is the empty list. */
std::vector<std::int64_t> continued_fraction(const Slope& s, Parity parity = Parity::Any,
                                             FractionStyle style = FractionStyle::Alternating);
/** Value of a continued fraction; the empty list is ∞. */
Slope evaluate_fraction(const std::vector<std::int64_t>& terms);

/** tw^{a1}, du^{a2}, …, du^{an} for the even continued fraction of s; it sends s to ∞. */
TwistWord reparametrization_word(const Slope& s);
/** The loop whose ∞ filling is the s filling of l. */
Loop reparametrize(const Loop& l, const Slope& s);

struct LoopFilling {
    int dim = 0;
    int chi = 0;
    bool operator==(const LoopFilling&) const = default;
};

struct FillingResult {
    int dim = 0;
    int chi_abs = 0;
    std::vector<LoopFilling> per_loop;
    bool is_lspace = false;
};

FillingResult make_filling_result(std::vector<LoopFilling> per_loop);
/** Filling along ∞ counted from the standard word. */
LoopFilling fill_infinity(const Loop& l);
/** Filling along 0 counted from the dual word. */
LoopFilling fill_zero(const Loop& l);
FillingResult fill(const std::vector<Loop>& loops, const Slope& s);

} // namespace loopfloer
