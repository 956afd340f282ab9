#include "loopfloer/twists.hpp"

#include "loopfloer/errors.hpp"

#include <cstdlib>
#include <stdexcept>

namespace loopfloer {

namespace {

Word shift_unstable(const Word& w, int n) {
    Word out = w;
    for (Letter& l : out) {
        if (l.family == 'c') l.sub -= n;
        if (l.family == 'd') l.sub += n;
    }
    return out;
}

std::int64_t floor_div(std::int64_t p, std::int64_t q) {
    std::int64_t d = p / q;
    if ((p % q != 0) && ((p < 0) != (q < 0))) --d;
    return d;
}

std::int64_t ceil_div(std::int64_t p, std::int64_t q) { return -floor_div(-p, q); }

} // namespace

Loop tw_power(const Loop& l, int n) {
    if (n == 0 || !l.has_bullet()) return l;
    return Loop::from_word(shift_unstable(*l.standard(), n));
}

Loop du_power(const Loop& l, int n) {
    if (n == 0 || !l.has_circle()) return l;
    return Loop::from_word(shift_unstable(*l.dual(), n));
}

Loop twist(const Loop& l, TwistKind kind, int n) {
    switch (kind) {
    case TwistKind::Tw: return tw_power(l, n);
    case TwistKind::TwInverse: return tw_power(l, -n);
    case TwistKind::Du: return du_power(l, n);
    case TwistKind::DuInverse: return du_power(l, -n);
    }
    return l;
}

Loop ex(const Loop& l) {
    Word w = l.word();
    for (Letter& x : w) {
        x.sub = -x.sub;
        x.star = !x.star;
    }
    return Loop::from_word(w);
}

void TwistWord::tw(int n) {
    if (n != 0) ops.push_back(TwistOp{TwistOp::Kind::Tw, n});
}

void TwistWord::du(int n) {
    if (n != 0) ops.push_back(TwistOp{TwistOp::Kind::Du, n});
}

void TwistWord::ex() {
    tw(1);
    du(-1);
    tw(1);
}

void TwistWord::append(const TwistWord& other) {
    ops.insert(ops.end(), other.ops.begin(), other.ops.end());
}

TwistWord TwistWord::inverse() const {
    TwistWord inv;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        inv.ops.push_back(TwistOp{it->kind, -it->exponent});
    }
    return inv;
}

Slope TwistWord::act(const Slope& s) const {
    std::int64_t p = s.p();
    std::int64_t q = s.q();
    for (const TwistOp& op : ops) {
        if (op.kind == TwistOp::Kind::Tw) p -= op.exponent * q;
        else q -= op.exponent * p;
    }
    return Slope(p, q);
}

Loop TwistWord::apply(const Loop& l) const {
    Loop out = l;
    for (const TwistOp& op : ops) {
        out = op.kind == TwistOp::Kind::Tw ? tw_power(out, op.exponent)
                                           : du_power(out, op.exponent);
    }
    return out;
}

std::string TwistWord::str() const {
    std::string s;
    for (const TwistOp& op : ops) {
        if (!s.empty()) s += ' ';
        s += op.kind == TwistOp::Kind::Tw ? "tw^" : "du^";
        s += std::to_string(op.exponent);
    }
    return s.empty() ? "id" : s;
}

std::vector<std::int64_t> continued_fraction(const Slope& s, Parity parity, FractionStyle style) {
    std::vector<std::int64_t> terms;
    if (!s.is_infinite()) {
        std::int64_t p = s.p();
        std::int64_t q = s.q();
        bool use_floor = style != FractionStyle::Negative;
        while (true) {
            std::int64_t a = use_floor ? floor_div(p, q) : ceil_div(p, q);
            terms.push_back(a);
            std::int64_t r = p - a * q;
            if (r == 0) break;
            p = q;
            q = r;
            if (q < 0) {
                p = -p;
                q = -q;
            }
            if (style == FractionStyle::Alternating) use_floor = !use_floor;
            else use_floor = style == FractionStyle::Positive;
        }
    }
    bool even = terms.size() % 2 == 0;
    if (parity == Parity::Any || (parity == Parity::Even) == even) return terms;
    if (terms.empty()) {
        throw DomainError("no_fraction", "infinity has no odd-length continued fraction");
    }
    std::int64_t last = terms.back();
    if (style == FractionStyle::Negative) {
        terms.back() = last + 1;
        terms.push_back(-1);
    } else {
        terms.back() = last - 1;
        terms.push_back(1);
    }
    return terms;
}

Slope evaluate_fraction(const std::vector<std::int64_t>& terms) {
    std::int64_t p = 1;
    std::int64_t q = 0;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        // a + 1/(p/q) = (a p + q) / p
        std::int64_t np = *it * p + q;
        q = p;
        p = np;
    }
    return Slope(p, q);
}

TwistWord reparametrization_word(const Slope& s) {
    auto terms = continued_fraction(s, Parity::Even);
    TwistWord w;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        int a = static_cast<int>(terms[i]);
        if (i % 2 == 0) w.tw(a);
        else w.du(a);
    }
    return w;
}

Loop reparametrize(const Loop& l, const Slope& s) { return reparametrization_word(s).apply(l); }

FillingResult make_filling_result(std::vector<LoopFilling> per_loop) {
    FillingResult r;
    r.is_lspace = !per_loop.empty();
    for (const LoopFilling& f : per_loop) {
        r.dim += f.dim;
        r.chi_abs += std::abs(f.chi);
        if (f.dim == 0 || f.dim != std::abs(f.chi)) r.is_lspace = false;
    }
    r.per_loop = std::move(per_loop);
    return r;
}

namespace {

LoopFilling count_filling(const Word& w, char cancelling_family) {
    LoopFilling f;
    int g = 0;
    for (const Letter& l : w) {
        f.chi += g == 0 ? 1 : -1;
        if (l.family == cancelling_family) f.dim -= 2;
        if (l.is_stable()) g ^= 1;
    }
    f.dim += static_cast<int>(w.size());
    return f;
}

} // namespace

LoopFilling fill_infinity(const Loop& l) {
    if (!l.has_bullet()) return LoopFilling{2, 0};
    return count_filling(*l.standard(), 'a');
}

LoopFilling fill_zero(const Loop& l) {
    if (!l.has_circle()) return LoopFilling{2, 0};
    return count_filling(*l.dual(), 'b');
}

FillingResult fill(const std::vector<Loop>& loops, const Slope& s) {
    std::vector<LoopFilling> per_loop;
    for (const Loop& l : loops) {
        if (s == Slope(0, 1)) per_loop.push_back(fill_zero(l));
        else per_loop.push_back(fill_infinity(reparametrize(l, s)));
    }
    return make_filling_result(std::move(per_loop));
}

} // namespace loopfloer
