#include "loopfloer/detection.hpp"

#include "loopfloer/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace loopfloer {

namespace {

bool has_family(const Word& w, char family) {
    return std::any_of(w.begin(), w.end(), [&](const Letter& l) { return l.family == family; });
}

bool strict_oriented(const Word& w) {
    if (has_family(w, 'c') || !has_family(w, 'd')) return false;
    for (const Letter& l : w) {
        if (l.is_stable() && std::abs(l.sub) != 1) return false;
    }
    auto sign_pair = [](const Letter& l) {
        if (!l.is_stable()) return 0;
        return l.sub;
    };
    std::size_t n = w.size();
    for (std::size_t i = 0; n > 1 && i < n; ++i) {
        int x = sign_pair(w[i]);
        int y = sign_pair(w[(i + 1) % n]);
        if (x != 0 && x == y) return false;
    }
    return true;
}

/** The word with the d family present, reversing if only c letters occur; nullopt if mixed. */
std::optional<Word> d_oriented(const Word& w) {
    bool c = has_family(w, 'c');
    bool d = has_family(w, 'd');
    if (c && d) return std::nullopt;
    if (c) return reverse_word(w);
    return w;
}

Word unstarred(Word w) {
    for (Letter& l : w) l.star = false;
    return w;
}

bool all_unstable(const Word& w) {
    return std::all_of(w.begin(), w.end(), [](const Letter& l) { return l.is_unstable(); });
}

bool is_e(const Letter& l) { return l.family == 'd' && l.sub == 0; }

/** Whether the word has a subword of the A+ shape, after multiplying subscripts by sign. */
bool has_signed_subword(const Word& w, int sign) {
    std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Letter& x = w[i];
        int sx = sign * x.sub;
        if (x.family != 'c' && sx >= 2) return true;
        if (sx < 1) continue;
        if (x.family == 'b') {
            const Letter& y = w[(i + 1) % n];
            if (y.family == 'a' && sign * y.sub >= 1) return true;
        }
        if (x.family == 'a' || x.family == 'd') {
            std::size_t j = (i + 1) % n;
            while (is_e(w[j]) && j != i) j = (j + 1) % n;
            const Letter& y = w[j];
            if ((y.family == 'b' || y.family == 'd') && sign * y.sub >= 1) return true;
        }
    }
    return false;
}

std::optional<Word> loop_word_at(const Loop& l, const Slope& s) {
    if (s == Slope(0, 1)) return l.dual();
    return reparametrize(l, s).standard();
}

bool is_case_two(const Word& u) {
    std::vector<int> nonzero;
    for (const Letter& l : u) {
        if (std::abs(l.sub) > 1) return false;
        if (l.sub != 0) nonzero.push_back(l.sub);
    }
    if (nonzero.empty() || nonzero.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < nonzero.size(); ++i) {
        if (nonzero[i] == nonzero[(i + 1) % nonzero.size()]) return false;
    }
    return true;
}

bool is_case_three(const Word& u) {
    std::size_t n = u.size();
    bool has_minus = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].sub < -1) return false;
        if (u[i].sub != -1) continue;
        has_minus = true;
        std::size_t j = (i + 1) % n;
        while (u[j].sub == 0 && j != i) j = (j + 1) % n;
        if (u[j].sub <= 0) return false;
    }
    return has_minus && !is_case_two(u);
}

Word d_only_word(const Loop& l) {
    auto w = l.standard();
    if (!w) throw std::logic_error("normalisation left the standard alphabet: " + l.str());
    auto d = d_oriented(*w);
    if (!d || !all_unstable(*d)) {
        throw std::logic_error("normalisation produced a stable letter: " + l.str());
    }
    return *d;
}

int min_sub(const Word& w) {
    int m = w.front().sub;
    for (const Letter& l : w) m = std::min(m, l.sub);
    return m;
}

bool word_slope_sign_mixed(const std::optional<Word>& w) {
    if (!w) return false;
    bool pos = false;
    bool neg = false;
    for (const Letter& l : *w) {
        if (!l.is_stable()) continue;
        if (l.sub > 0) pos = true;
        if (l.sub < 0) neg = true;
    }
    return pos && neg;
}

/** Mediant of neighbouring slopes a and b, taken on the arc travelled upward from a to b. */
Slope mediant_on_arc(const Slope& a, const Slope& b) {
    std::int64_t ap = a.p();
    std::int64_t aq = a.q();
    std::int64_t bp = b.p();
    std::int64_t bq = b.q();
    if (a.is_infinite()) ap = -1;
    return Slope(ap + bp, aq + bq);
}

} // namespace

bool lspace_word(const Word& w) {
    bool c = has_family(w, 'c');
    bool d = has_family(w, 'd');
    return c != d;
}

bool strict_word(const Word& w) { return strict_oriented(w) || strict_oriented(reverse_word(w)); }

bool loop_lspace_slope(const Loop& l, const Slope& s) {
    auto w = loop_word_at(l, s);
    return w && lspace_word(*w);
}

bool loop_strict_lspace_slope(const Loop& l, const Slope& s) {
    auto w = loop_word_at(l, s);
    return w && strict_word(*w);
}

bool is_lspace_slope(const std::vector<Loop>& loops, const Slope& s) {
    if (loops.empty()) return false;
    return std::all_of(loops.begin(), loops.end(),
                       [&](const Loop& l) { return loop_lspace_slope(l, s); });
}

bool is_strict_lspace_slope(const std::vector<Loop>& loops, const Slope& s) {
    if (loops.empty()) return false;
    return std::all_of(loops.begin(), loops.end(),
                       [&](const Loop& l) { return loop_strict_lspace_slope(l, s); });
}

int subword_sign_class(const Word& w) {
    bool pos = has_signed_subword(w, 1);
    bool neg = has_signed_subword(w, -1);
    if (pos && neg) return 2;
    if (pos) return 1;
    if (neg) return -1;
    return 0;
}

int loop_sign_class(const Loop& l, bool dual) {
    auto w = dual ? l.dual() : l.standard();
    if (!w) return 0;
    Word plain = unstarred(*w);
    auto oriented = d_oriented(plain);
    if (!oriented || !has_family(*oriented, 'd')) return 0;
    return subword_sign_class(*oriented);
}

std::string to_string(Simplicity s) {
    switch (s) {
    case Simplicity::Yes: return "yes";
    case Simplicity::No: return "no";
    case Simplicity::Unknown: return "unknown";
    }
    return "unknown";
}

std::optional<Slope> find_unstable_slope(const Loop& l, int depth) {
    std::vector<Slope> candidates{Slope::infinity(), Slope(0, 1)};
    for (const Slope& s : stern_brocot_slopes(depth)) {
        if (!(s == Slope::infinity()) && !(s == Slope(0, 1))) candidates.push_back(s);
    }
    std::stable_sort(candidates.begin() + 2, candidates.end(), [](const Slope& a, const Slope& b) {
        return std::abs(a.p()) + a.q() < std::abs(b.p()) + b.q();
    });
    for (const Slope& s : candidates) {
        auto w = reparametrize(l, s).standard();
        if (w && all_unstable(*w)) return s;
    }
    return std::nullopt;
}

Simplicity is_simple(const Loop& l, int depth) {
    auto std_word = l.standard();
    auto dual_word = l.dual();
    if ((std_word && all_unstable(*std_word)) || (dual_word && all_unstable(*dual_word))) {
        return Simplicity::Yes;
    }
    if (word_slope_sign_mixed(std_word) || word_slope_sign_mixed(dual_word)) return Simplicity::No;
    return find_unstable_slope(l, depth) ? Simplicity::Yes : Simplicity::Unknown;
}

Normalization normalize_simple(const Loop& l, int depth) {
    auto start = find_unstable_slope(l, depth);
    if (!start) throw DomainError("not_simple", "no reparametrization of " + l.str() + " is unstable");
    Normalization result;
    result.log = reparametrization_word(*start);
    Loop cur = result.log.apply(l);
    int shift = -min_sub(d_only_word(cur));
    result.log.tw(shift);
    cur = tw_power(cur, shift);

    std::size_t cap = 16 + 16 * (l.vertex_count() + 1);
    for (std::size_t iter = 0; iter < cap; ++iter) {
        Word w = d_only_word(cur);
        if (std::all_of(w.begin(), w.end(), [](const Letter& x) { return x.sub == 0; })) {
            result.case_id = 1;
            result.final_loop = cur;
            return result;
        }
        Loop t = tw_power(cur, -1);
        Word u = d_only_word(t);
        if (is_case_two(u) || is_case_three(u)) {
            result.log.tw(-1);
            result.case_id = is_case_two(u) ? 2 : 3;
            result.final_loop = t;
            return result;
        }
        cur = ex(cur);
        result.log.ex();
        int m = -min_sub(d_only_word(cur));
        result.log.tw(m);
        cur = tw_power(cur, m);
    }
    throw std::logic_error("measure violated while normalising " + l.str());
}

SlopeSet sweep_interval(const Loop& l, int depth, int refine_steps) {
    std::vector<Slope> slopes = stern_brocot_slopes(depth);
    sort_cyclic(slopes);
    std::size_t n = slopes.size();
    std::vector<char> in(n);
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        in[i] = loop_lspace_slope(l, slopes[i]) ? 1 : 0;
        count += static_cast<std::size_t>(in[i]);
    }
    auto longitude = rational_longitude(l);
    if (count == 0) return SlopeSet::empty().with_sweep_depth(depth);
    if (count == n) {
        if (longitude) return SlopeSet::all_except(*longitude).with_sweep_depth(depth);
        return SlopeSet::all().with_sweep_depth(depth);
    }
    if (count == n - 1 && longitude) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!in[i] && slopes[i] == *longitude) return SlopeSet::all_except(*longitude);
        }
    }

    std::size_t first = n;
    std::size_t last = n;
    int changes = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t next = (i + 1) % n;
        if (in[i] == in[next]) continue;
        ++changes;
        if (in[next]) first = next;
        else last = i;
    }
    if (changes != 2) {
        throw DomainError("not_connected", "L-space slopes of " + l.str() + " are not an interval");
    }

    bool exact = true;
    Slope lo = slopes[last];
    Slope hi = slopes[(last + 1) % n];
    int steps = 0;
    while (!(loop_lspace_slope(l, lo) && !loop_strict_lspace_slope(l, lo)) && steps < refine_steps) {
        Slope m = mediant_on_arc(lo, hi);
        if (loop_lspace_slope(l, m)) lo = m;
        else hi = m;
        ++steps;
    }
    if (loop_strict_lspace_slope(l, lo)) exact = false;
    Slope end = lo;

    Slope out = slopes[(first + n - 1) % n];
    Slope up = slopes[first];
    steps = 0;
    while (!(loop_lspace_slope(l, up) && !loop_strict_lspace_slope(l, up)) && steps < refine_steps) {
        Slope m = mediant_on_arc(out, up);
        if (loop_lspace_slope(l, m)) up = m;
        else out = m;
        ++steps;
    }
    if (loop_strict_lspace_slope(l, up)) exact = false;

    SlopeSet arc = SlopeSet::closed_arc(up, end);
    return exact ? arc : arc.with_sweep_depth(depth);
}

SlopeSet lspace_interval(const Loop& l, int depth) {
    if (is_simple(l, depth) != Simplicity::Yes) return sweep_interval(l, std::min(depth, 6));
    Normalization norm = normalize_simple(l, depth);
    if (norm.case_id != 3) {
        auto longitude = rational_longitude(l);
        if (!longitude) throw std::logic_error("simple loop without a longitude: " + l.str());
        return SlopeSet::all_except(*longitude);
    }
    Slope e1 = norm.log.inverse().act(Slope(0, 1));
    auto std_word = l.standard();
    Loop mirror = Loop::from_word(mirror_word(*std_word));
    Normalization mnorm = normalize_simple(mirror, depth);
    if (mnorm.case_id != 3) {
        throw std::logic_error("mirror of a third-case loop normalised differently: " + l.str());
    }
    Slope e2 = mnorm.log.inverse().act(Slope(0, 1)).negated();
    if (e1 == e2) return SlopeSet::closed_arc(e1, e1);
    if (loop_lspace_slope(l, slope_inside(e1, e2))) return SlopeSet::closed_arc(e1, e2);
    return SlopeSet::closed_arc(e2, e1);
}

SlopeSet lspace_interval(const std::vector<Loop>& loops, int depth) {
    if (loops.empty()) return SlopeSet::empty();
    SlopeSet result = lspace_interval(loops.front(), depth);
    for (std::size_t i = 1; i < loops.size(); ++i) {
        result = intersect(result, lspace_interval(loops[i], depth));
    }
    return result;
}

bool is_solid_torus_like(const Loop& l) {
    if (!l.has_bullet() || !l.has_circle()) return true;
    if (is_simple(l) != Simplicity::Yes) return false;
    return normalize_simple(l).case_id == 1;
}

} // namespace loopfloer
