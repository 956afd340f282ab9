#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace loopfloer {

/** Reduced element p/q of Q ∪ {1/0}, normalised so q ≥ 0 and ∞ = 1/0. */
class Slope {
public:
    Slope() : p_(1), q_(0) {}
    Slope(std::int64_t p, std::int64_t q);

    static Slope infinity() { return Slope(1, 0); }
    static Slope integer(std::int64_t n) { return Slope(n, 1); }
    /** Accepts "p/q", "-p/q", "n", "inf" and "1/0". */
    static Slope parse(const std::string& text);

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }
    bool is_infinite() const { return q_ == 0; }
    Slope reciprocal() const { return Slope(q_, p_); }
    Slope negated() const { return Slope(-p_, q_); }
    std::string str() const;

    bool operator==(const Slope&) const = default;

private:
    std::int64_t p_;
    std::int64_t q_;
};

/** Linear order on Q̂ with ∞ as the largest element. */
bool slope_less(const Slope& a, const Slope& b);
/** True if, travelling upward from `from` (wrapping through ∞), x is reached strictly before y. */
bool cyclic_before(const Slope& from, const Slope& x, const Slope& y);
/** x lies on the closed arc travelled upward from a to b; for a == b the arc is {a}. */
bool in_closed_arc(const Slope& a, const Slope& b, const Slope& x);
/** x lies on the open arc from a to b; for a == b the open arc is empty. */
bool in_open_arc(const Slope& a, const Slope& b, const Slope& x);
/** A slope strictly inside the arc from a to b (a != b). */
Slope slope_inside(const Slope& a, const Slope& b);
/** Mediant-free midpoint of two finite slopes. */
Slope midpoint(const Slope& a, const Slope& b);

/** Slopes of the Stern–Brocot tree down to the given depth on both signs, plus 0 and ∞. */
std::vector<Slope> stern_brocot_slopes(int depth);
/** All reduced p/q with |p| ≤ bound and 0 ≤ q ≤ bound. */
std::vector<Slope> slopes_up_to(int bound);
/** Sorts slopes into the cyclic order starting just after ∞. */
void sort_cyclic(std::vector<Slope>& slopes);

/** A subset of Q̂ of one of four shapes. */
class SlopeSet {
public:
    enum class Kind { Empty, All, AllExcept, ClosedArc };

    static SlopeSet empty() { return SlopeSet(Kind::Empty, Slope(), Slope()); }
    static SlopeSet all() { return SlopeSet(Kind::All, Slope(), Slope()); }
    static SlopeSet all_except(const Slope& s) { return SlopeSet(Kind::AllExcept, s, s); }
    static SlopeSet closed_arc(const Slope& from, const Slope& to) {
        return SlopeSet(Kind::ClosedArc, from, to);
    }

    Kind kind() const { return kind_; }
    const Slope& from() const { return from_; }
    const Slope& to() const { return to_; }
    /** The excluded slope of an AllExcept set. */
    const Slope& point() const { return from_; }

    bool contains(const Slope& s) const;
    bool interior_contains(const Slope& s) const;
    /** Closed set Q̂ minus the interior. */
    SlopeSet complement_of_interior() const;
    /** Image under p/q ↦ q/p. */
    SlopeSet reciprocal() const;
    /** Image under p/q ↦ -p/q. */
    SlopeSet negated() const;
    /** True if this set, assumed closed, lies inside the interior of other. */
    bool subset_of_interior(const SlopeSet& other) const;

    /** Depth of the sampling sweep that produced this set; -1 when exact. */
    int sweep_depth() const { return sweep_depth_; }
    SlopeSet with_sweep_depth(int depth) const;

    std::string str() const;
    bool operator==(const SlopeSet& o) const;

private:
    SlopeSet(Kind k, const Slope& a, const Slope& b) : kind_(k), from_(a), to_(b) {}

    Kind kind_;
    Slope from_;
    Slope to_;
    int sweep_depth_ = -1;
};

/**
 * Intersection of two slope sets. Throws DomainError when the result is not one
 * of the four representable shapes.
 */
SlopeSet intersect(const SlopeSet& a, const SlopeSet& b);

} // namespace loopfloer
