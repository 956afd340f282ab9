#include "loopfloer/slope.hpp"

#include "loopfloer/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace loopfloer {

Slope::Slope(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0) throw DomainError("invalid_slope", "slope 0/0 is undefined");
    std::int64_t g = std::gcd(p, q);
    p /= g;
    q /= g;
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    p_ = p;
    q_ = q;
}

Slope Slope::parse(const std::string& raw) {
    std::string text;
    for (char c : raw) {
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    }
    if (text == "inf" || text == "infinity" || text == "oo") return infinity();
    auto parse_int = [&](const std::string& s) -> std::int64_t {
        if (s.empty()) throw ParseError("bad slope '" + raw + "'");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw ParseError("bad slope '" + raw + "'");
        for (std::size_t k = i; k < s.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
                throw ParseError("bad slope '" + raw + "'");
            }
        }
        try {
            return std::stoll(s);
        } catch (const std::out_of_range&) {
            throw ParseError("slope out of range '" + raw + "'");
        }
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Slope(parse_int(text), 1);
    std::int64_t p = parse_int(text.substr(0, slash));
    std::int64_t q = parse_int(text.substr(slash + 1));
    if (p == 0 && q == 0) throw ParseError("bad slope '" + raw + "'");
    return Slope(p, q);
}

std::string Slope::str() const {
    if (q_ == 0) return "inf";
    if (q_ == 1) return std::to_string(p_);
    return std::to_string(p_) + "/" + std::to_string(q_);
}

bool slope_less(const Slope& a, const Slope& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return static_cast<__int128>(a.p()) * b.q() < static_cast<__int128>(b.p()) * a.q();
}

bool cyclic_before(const Slope& from, const Slope& x, const Slope& y) {
    int gx = slope_less(x, from) ? 1 : 0;
    int gy = slope_less(y, from) ? 1 : 0;
    if (gx != gy) return gx < gy;
    return slope_less(x, y);
}

bool in_closed_arc(const Slope& a, const Slope& b, const Slope& x) {
    if (a == b) return x == a;
    return !cyclic_before(a, b, x);
}

bool in_open_arc(const Slope& a, const Slope& b, const Slope& x) {
    if (a == b) return false;
    return x != a && cyclic_before(a, x, b);
}

Slope midpoint(const Slope& a, const Slope& b) {
    __int128 p = static_cast<__int128>(a.p()) * b.q() + static_cast<__int128>(b.p()) * a.q();
    __int128 q = static_cast<__int128>(2) * a.q() * b.q();
    __int128 g = p < 0 ? -p : p;
    __int128 h = q;
    while (h != 0) {
        __int128 t = g % h;
        g = h;
        h = t;
    }
    return Slope(static_cast<std::int64_t>(p / g), static_cast<std::int64_t>(q / g));
}

Slope slope_inside(const Slope& a, const Slope& b) {
    if (a == b) throw std::invalid_argument("degenerate arc has no interior");
    if (a.is_infinite()) return Slope(b.p() - b.q(), b.q());
    if (b.is_infinite()) return Slope(a.p() + a.q(), a.q());
    if (slope_less(a, b)) return midpoint(a, b);
    return Slope::infinity();
}

std::vector<Slope> stern_brocot_slopes(int depth) {
    std::vector<Slope> out{Slope(0, 1), Slope::infinity()};
    struct Node { std::int64_t lp, lq, rp, rq; int d; };
    std::vector<Node> stack{{0, 1, 1, 0, 1}};
    while (!stack.empty()) {
        Node n = stack.back();
        stack.pop_back();
        std::int64_t p = n.lp + n.rp;
        std::int64_t q = n.lq + n.rq;
        out.push_back(Slope(p, q));
        out.push_back(Slope(-p, q));
        if (n.d < depth) {
            stack.push_back({n.lp, n.lq, p, q, n.d + 1});
            stack.push_back({p, q, n.rp, n.rq, n.d + 1});
        }
    }
    sort_cyclic(out);
    return out;
}

std::vector<Slope> slopes_up_to(int bound) {
    std::vector<Slope> out;
    for (int q = 0; q <= bound; ++q) {
        for (int p = -bound; p <= bound; ++p) {
            if (p == 0 && q == 0) continue;
            if (std::gcd(p, q) != 1) continue;
            if (q == 0 && p != 1) continue;
            out.push_back(Slope(p, q));
        }
    }
    sort_cyclic(out);
    return out;
}

void sort_cyclic(std::vector<Slope>& slopes) {
    std::sort(slopes.begin(), slopes.end(), slope_less);
    slopes.erase(std::unique(slopes.begin(), slopes.end()), slopes.end());
}

bool SlopeSet::contains(const Slope& s) const {
    switch (kind_) {
    case Kind::Empty: return false;
    case Kind::All: return true;
    case Kind::AllExcept: return s != from_;
    case Kind::ClosedArc: return in_closed_arc(from_, to_, s);
    }
    return false;
}

bool SlopeSet::interior_contains(const Slope& s) const {
    switch (kind_) {
    case Kind::Empty: return false;
    case Kind::All: return true;
    case Kind::AllExcept: return s != from_;
    case Kind::ClosedArc: return in_open_arc(from_, to_, s);
    }
    return false;
}

SlopeSet SlopeSet::complement_of_interior() const {
    switch (kind_) {
    case Kind::Empty: return all();
    case Kind::All: return empty();
    case Kind::AllExcept: return closed_arc(from_, from_);
    case Kind::ClosedArc: return from_ == to_ ? all() : closed_arc(to_, from_);
    }
    return empty();
}

SlopeSet SlopeSet::reciprocal() const {
    SlopeSet out = *this;
    switch (kind_) {
    case Kind::Empty: case Kind::All: break;
    case Kind::AllExcept: out.from_ = out.to_ = from_.reciprocal(); break;
    case Kind::ClosedArc:
        out.from_ = to_.reciprocal();
        out.to_ = from_.reciprocal();
        break;
    }
    return out;
}

SlopeSet SlopeSet::negated() const {
    SlopeSet out = *this;
    switch (kind_) {
    case Kind::Empty: case Kind::All: break;
    case Kind::AllExcept: out.from_ = out.to_ = from_.negated(); break;
    case Kind::ClosedArc:
        out.from_ = to_.negated();
        out.to_ = from_.negated();
        break;
    }
    return out;
}

bool SlopeSet::subset_of_interior(const SlopeSet& other) const {
    if (kind_ == Kind::Empty) return true;
    switch (other.kind_) {
    case Kind::Empty: return false;
    case Kind::All: return true;
    case Kind::AllExcept:
        if (kind_ != Kind::ClosedArc) return false;
        return !contains(other.from_);
    case Kind::ClosedArc: {
        if (kind_ != Kind::ClosedArc) return false;
        const Slope& a = other.from_;
        const Slope& b = other.to_;
        if (!in_open_arc(a, b, from_) || !in_open_arc(a, b, to_)) return false;
        return from_ == to_ || cyclic_before(a, from_, to_);
    }
    }
    return false;
}

SlopeSet SlopeSet::with_sweep_depth(int depth) const {
    SlopeSet out = *this;
    out.sweep_depth_ = depth;
    return out;
}

std::string SlopeSet::str() const {
    switch (kind_) {
    case Kind::Empty: return "Empty";
    case Kind::All: return "All";
    case Kind::AllExcept: return "AllExcept(" + from_.str() + ")";
    case Kind::ClosedArc: return "ClosedArc(" + from_.str() + ", " + to_.str() + ")";
    }
    return "?";
}

bool SlopeSet::operator==(const SlopeSet& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ == Kind::Empty || kind_ == Kind::All) return true;
    return from_ == o.from_ && to_ == o.to_;
}

namespace {

bool arc_subset(const Slope& a1, const Slope& b1, const Slope& a2, const Slope& b2) {
    // [a2, b2] inside [a1, b1]
    if (!in_closed_arc(a1, b1, a2) || !in_closed_arc(a1, b1, b2)) return false;
    if (a2 == b2) return true;
    if (a1 == b1) return false;
    return a2 == a1 ? true : cyclic_before(a1, a2, b2);
}

} // namespace

SlopeSet intersect(const SlopeSet& x, const SlopeSet& y) {
    using Kind = SlopeSet::Kind;
    int depth = std::max(x.sweep_depth(), y.sweep_depth());
    auto tag = [&](SlopeSet s) { return s.with_sweep_depth(depth); };
    if (x.kind() == Kind::Empty || y.kind() == Kind::Empty) return tag(SlopeSet::empty());
    if (x.kind() == Kind::All) return tag(y);
    if (y.kind() == Kind::All) return tag(x);
    if (x.kind() == Kind::AllExcept && y.kind() == Kind::AllExcept) {
        if (x.point() == y.point()) return tag(x);
        throw DomainError("not_connected", "intersection " + x.str() + " and " + y.str() +
                                               " is not an arc");
    }
    if (x.kind() == Kind::AllExcept || y.kind() == Kind::AllExcept) {
        const SlopeSet& pt = x.kind() == Kind::AllExcept ? x : y;
        const SlopeSet& arc = x.kind() == Kind::AllExcept ? y : x;
        if (!arc.contains(pt.point())) return tag(arc);
        throw DomainError("not_connected", "intersection " + x.str() + " and " + y.str() +
                                               " is not closed");
    }
    const Slope& a1 = x.from();
    const Slope& b1 = x.to();
    const Slope& a2 = y.from();
    const Slope& b2 = y.to();
    if (arc_subset(a1, b1, a2, b2)) return tag(y);
    if (arc_subset(a2, b2, a1, b1)) return tag(x);
    bool first = in_closed_arc(a1, b1, a2) && in_closed_arc(a2, b2, b1);
    bool second = in_closed_arc(a2, b2, a1) && in_closed_arc(a1, b1, b2);
    if (first && second) {
        throw DomainError("not_connected", "intersection " + x.str() + " and " + y.str() +
                                               " has two components");
    }
    if (first) return tag(SlopeSet::closed_arc(a2, b1));
    if (second) return tag(SlopeSet::closed_arc(a1, b2));
    return tag(SlopeSet::empty());
}

} // namespace loopfloer
