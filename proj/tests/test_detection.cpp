#include "corpus.hpp"
#include "loopfloer/detection.hpp"
#include "loopfloer/errors.hpp"
#include "loopfloer/oracle.hpp"

#include <catch_amalgamated.hpp>

using namespace loopfloer;

namespace {

bool has_family(const Word& w, char f) {
    for (const Letter& l : w)
        if (l.family == f) return true;
    return false;
}

/** Number of membership changes around the cyclically ordered sample. */
int membership_changes(const std::vector<Loop>& loops, const std::vector<Slope>& sample) {
    int changes = 0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        bool a = is_lspace_slope(loops, sample[i]);
        bool b = is_lspace_slope(loops, sample[(i + 1) % sample.size()]);
        changes += a != b;
    }
    return changes;
}

} // namespace

TEST_CASE("L-space words") {
    CHECK(lspace_word(parse_word("(d0)")));
    CHECK(lspace_word(parse_word("(a1 b1 c-2)")));
    CHECK(lspace_word(parse_word("(c1)")));
    CHECK_FALSE(lspace_word(parse_word("(a1 b1)")));
    CHECK_FALSE(lspace_word(parse_word("(c1 d1)")));
    CHECK(strict_word(parse_word("(d1 d2)")));
    CHECK(strict_word(parse_word("(d0 b1 a-1)")));
    CHECK_FALSE(strict_word(parse_word("(d0 b2 a-2)")));
    CHECK(strict_word(parse_word("(d0 b1 a-1 b1 a-1)")));
    CHECK_FALSE(strict_word(parse_word("(d0 b1 a-1 b-1 a1)")));
    CHECK_FALSE(strict_word(parse_word("(a1 b1 c-2)")));
}

TEST_CASE("slope detection agrees with the pairing oracle") {
    std::vector<Slope> slopes = slopes_up_to(4);
    for (const Loop& l : corpus::loop_corpus(150, 41)) {
        for (const Slope& s : slopes) {
            INFO(l.str() << " at " << s.str());
            CHECK(loop_lspace_slope(l, s) == fill_oracle({l}, s).is_lspace);
        }
    }
}

TEST_CASE("sign classes match the dual letters") {
    int compared = 0;
    for (const Loop& l : corpus::loop_corpus(400, 42)) {
        if (l.alphabet() != Alphabet::Standard || !l.has_circle()) continue;
        for (const Word& w : {l.word(), reverse_word(l.word())}) {
            if (has_family(w, 'c')) continue;
            std::optional<Word> dual = trace_to_word(word_to_trace(w), Alphabet::Dual);
            REQUIRE(dual);
            int cls = subword_sign_class(w);
            INFO(format_word(w) << " dual " << format_word(*dual) << " class " << cls);
            CHECK((cls == 1 || cls == 2) == has_family(*dual, 'd'));
            CHECK((cls == -1 || cls == 2) == has_family(*dual, 'c'));
            ++compared;
        }
    }
    CHECK(compared > 100);
}

TEST_CASE("positive and negative sign classes give half-lines of L-space slopes") {
    std::vector<Slope> slopes = slopes_up_to(4);
    for (const Loop& l : corpus::loop_corpus(200, 43)) {
        auto w = l.standard();
        if (!w || !lspace_word(*w) || !loop_lspace_slope(l, Slope(0, 1))) continue;
        int cls = loop_sign_class(l, false);
        if (cls != 1 && cls != -1) continue;
        for (const Slope& s : slopes) {
            if (s.is_infinite() || s.p() == 0) continue;
            bool same_side = (s.p() > 0) == (cls == 1);
            if (!same_side) continue;
            INFO(l.str() << " class " << cls << " at " << s.str());
            CHECK(loop_lspace_slope(l, s));
        }
    }
}

TEST_CASE("simplicity") {
    CHECK(is_simple(Loop::parse("(d0)")) == Simplicity::Yes);
    CHECK(is_simple(Loop::parse("(d3 d1)")) == Simplicity::Yes);
    CHECK(is_simple(Loop::parse("(a1 b1 c-2)")) == Simplicity::Yes);
    CHECK(is_simple(Loop::parse("(a1 b1 a-1 b-1)")) == Simplicity::No);
    CHECK(is_simple(Loop::parse("(a-1 b1 c1)")) == Simplicity::No);
    CHECK(to_string(Simplicity::Unknown) == "unknown");
    for (const Loop& l : corpus::loop_corpus(150, 44)) {
        if (is_simple(l) != Simplicity::Yes) continue;
        auto s = find_unstable_slope(l);
        REQUIRE(s);
        auto w = reparametrize(l, *s).standard();
        REQUIRE(w);
        for (const Letter& x : *w) CHECK(x.is_unstable());
    }
}

TEST_CASE("normalisation reaches one of three forms") {
    for (const Loop& l : corpus::loop_corpus(150, 45)) {
        if (is_simple(l) != Simplicity::Yes) continue;
        Normalization n = normalize_simple(l);
        INFO(l.str() << " -> " << n.final_loop.str() << " by " << n.log.str());
        CHECK((n.case_id >= 1 && n.case_id <= 3));
        CHECK(n.log.apply(l) == n.final_loop);
        for (const Slope& s : slopes_up_to(3)) {
            CHECK(loop_lspace_slope(l, s) == loop_lspace_slope(n.final_loop, n.log.act(s)));
        }
    }
    CHECK_THROWS_AS(normalize_simple(Loop::parse("(a1 b1 a-1 b-1)")), DomainError);
}

TEST_CASE("intervals agree with the oracle on a dense sample") {
    std::vector<Slope> sample = stern_brocot_slopes(6);
    for (const Loop& l : corpus::loop_corpus(120, 46)) {
        SlopeSet interval = lspace_interval(l);
        INFO(l.str() << " interval " << interval.str());
        for (const Slope& s : sample) {
            bool lspace = fill_oracle({l}, s).is_lspace;
            CHECK(interval.contains(s) == lspace);
            if (interval.sweep_depth() == -1) {
                CHECK(interval.interior_contains(s) == loop_strict_lspace_slope(l, s));
            }
        }
    }
}

TEST_CASE("L-space slopes form an interval") {
    std::vector<Slope> sample = stern_brocot_slopes(6);
    for (const Loop& l : corpus::loop_corpus(200, 47)) {
        INFO(l.str());
        CHECK(membership_changes({l}, sample) <= 2);
    }
}

TEST_CASE("closed interval endpoints are L-space slopes but not strict") {
    for (const Loop& l : corpus::loop_corpus(200, 48)) {
        SlopeSet interval = lspace_interval(l);
        if (interval.kind() != SlopeSet::Kind::ClosedArc || interval.sweep_depth() != -1) continue;
        INFO(l.str() << " " << interval.str());
        for (const Slope& e : {interval.from(), interval.to()}) {
            CHECK(loop_lspace_slope(l, e));
            CHECK_FALSE(loop_strict_lspace_slope(l, e));
        }
    }
}

TEST_CASE("known intervals") {
    Loop trefoil = Loop::parse("(a1 b1 c-2)");
    CHECK(lspace_interval(trefoil) == SlopeSet::closed_arc(Slope::infinity(), Slope(-1, 1)));
    CHECK(lspace_interval(Loop::parse("(d0)")) == SlopeSet::all_except(Slope(0, 1)));
    CHECK(lspace_interval(Loop::parse("(e*)")) == SlopeSet::all_except(Slope::infinity()));
    CHECK(lspace_interval(Loop::parse("(a1 b1)")) == SlopeSet::all_except(Slope::infinity()));
    CHECK(lspace_interval(Loop::parse("(a1 b1 a-1 b-1)")).kind() == SlopeSet::Kind::Empty);
    CHECK(lspace_interval(Loop::parse("(d2 d0 d1 d1 d1 d0)")) ==
          SlopeSet::closed_arc(Slope(-4, 5), Slope(-1, 1)));
    CHECK(sweep_interval(trefoil) == SlopeSet::closed_arc(Slope::infinity(), Slope(-1, 1)));
    CHECK(lspace_interval(parse_loops("(d0) | (d0 d0)")) == SlopeSet::all_except(Slope(0, 1)));
}

TEST_CASE("solid-torus-like loops") {
    CHECK(is_solid_torus_like(Loop::parse("(d0)")));
    CHECK(is_solid_torus_like(Loop::parse("(e* e*)")));
    CHECK(is_solid_torus_like(Loop::parse("(d1 d1 d1)")));
    CHECK_FALSE(is_solid_torus_like(Loop::parse("(a1 b1)")));
    CHECK_FALSE(is_solid_torus_like(Loop::parse("(a1 b1 c-2)")));
    CHECK(is_solid_torus_like(Loop::parse("(d1 d0)")));
    CHECK_FALSE(is_solid_torus_like(Loop::parse("(d2 d0 d1 d1 d1 d0)")));
    for (const Loop& l : corpus::loop_corpus(150, 49)) {
        if (!is_solid_torus_like(l)) continue;
        SlopeSet interval = lspace_interval(l);
        INFO(l.str() << " " << interval.str());
        CHECK(interval.kind() == SlopeSet::Kind::AllExcept);
        CHECK(std::optional<Slope>(interval.point()) == rational_longitude(l));
    }
}
