#include "corpus.hpp"
#include "loopfloer/errors.hpp"
#include "loopfloer/oracle.hpp"
#include "loopfloer/twists.hpp"

#include <catch_amalgamated.hpp>

using namespace loopfloer;

namespace {

bool equal_up_to_sign(EulerChars x, EulerChars y) {
    return x == y || (x.bullet == -y.bullet && x.circle == -y.circle);
}

} // namespace

TEST_CASE("tw and du act on subscripts") {
    CHECK(tw_power(Loop::parse("(d0)"), 3) == Loop::parse("(d3)"));
    CHECK(tw_power(Loop::parse("(c1 c0)"), 1) == Loop::parse("(c0 c-1)"));
    CHECK(tw_power(Loop::parse("(a1 b1)"), 5) == Loop::parse("(a1 b1)"));
    CHECK(du_power(Loop::parse("(e*)"), 2) == Loop::parse("(d*2)"));
    CHECK(twist(Loop::parse("(d0)"), TwistKind::TwInverse, 2) == Loop::parse("(d-2)"));
}

TEST_CASE("the framed solid torus chain") {
    Loop l = tw_power(Loop::parse("(d0)"), 3);
    CHECK(l == Loop::parse("(d3)"));
    CHECK(l == Loop::parse("(d*1 d*0 d*0)"));
    l = du_power(l, -2);
    CHECK(l == Loop::parse("(c1 c1 c0 c1 c0)"));
    CHECK(l == Loop::parse("(d*-1 d*-2 d*-2)"));
    l = tw_power(l, 2);
    CHECK(l == Loop::parse("(c-1 c-1 c-2 c-1 c-2)"));
    l = du_power(l, -1);
    CHECK(l == Loop::parse("(d-4 d-3)"));
    CHECK(rational_longitude(l) == Slope(7, 2));
}

TEST_CASE("twists are invertible and ex has order four") {
    for (const Loop& l : corpus::loop_corpus(300, 21)) {
        INFO(l.str());
        for (int n : {1, 2, -3}) {
            CHECK(tw_power(tw_power(l, n), -n) == l);
            CHECK(du_power(du_power(l, n), -n) == l);
        }
        CHECK(ex(ex(ex(ex(l)))) == l);
        CHECK(tw_power(du_power(tw_power(l, 1), -1), 1) == ex(l));
        TwistWord w;
        w.ex();
        CHECK(w.apply(l) == ex(l));
    }
}

TEST_CASE("Euler characteristics follow the twist matrices") {
    for (const Loop& l : corpus::loop_corpus(300, 22)) {
        EulerChars e = euler_chars(l);
        INFO(l.str());
        for (int n : {1, 2, -1, -3}) {
            CHECK(equal_up_to_sign(euler_chars(tw_power(l, n)), {e.bullet, e.circle + n * e.bullet}));
            CHECK(equal_up_to_sign(euler_chars(du_power(l, n)), {e.bullet + n * e.circle, e.circle}));
        }
        CHECK(equal_up_to_sign(euler_chars(ex(l)), {-e.circle, e.bullet}));
    }
}

TEST_CASE("ex twice acts trivially on slopes") {
    CHECK(ex(ex(Loop::parse("(d1 d0)"))) == Loop::parse("(d1 d0)"));
    CHECK(ex(Loop::parse("(d1 d0)")) == Loop::parse("(d*-1 d*0)"));
    for (const Loop& l : corpus::loop_corpus(60, 25, 6, 2)) {
        Loop m = ex(ex(l));
        for (const Slope& s : slopes_up_to(3)) {
            INFO(l.str() << " at " << s.str());
            FillingResult a = fill_oracle({l}, s);
            FillingResult b = fill_oracle({m}, s);
            CHECK(a.dim == b.dim);
            CHECK(a.chi_abs == b.chi_abs);
        }
    }
}

TEST_CASE("continued fractions") {
    CHECK(continued_fraction(Slope::infinity()).empty());
    CHECK(evaluate_fraction({}) == Slope::infinity());
    CHECK(evaluate_fraction({2, 3}) == Slope(7, 3));
    CHECK(continued_fraction(Slope(7, 3), Parity::Any, FractionStyle::Positive) ==
          std::vector<std::int64_t>{2, 3});
    for (const Slope& s : slopes_up_to(9)) {
        INFO(s.str());
        for (auto style : {FractionStyle::Alternating, FractionStyle::Positive, FractionStyle::Negative}) {
            CHECK(evaluate_fraction(continued_fraction(s, Parity::Any, style)) == s);
            auto even = continued_fraction(s, Parity::Even, style);
            CHECK(even.size() % 2 == 0);
            CHECK(evaluate_fraction(even) == s);
            if (s.is_infinite()) {
                CHECK_THROWS_AS(continued_fraction(s, Parity::Odd, style), DomainError);
                continue;
            }
            auto odd = continued_fraction(s, Parity::Odd, style);
            CHECK(odd.size() % 2 == 1);
            CHECK(evaluate_fraction(odd) == s);
        }
        if (s.p() > 0 && s.q() > 0) {
            auto terms = continued_fraction(s, Parity::Any, FractionStyle::Positive);
            CHECK(terms.front() >= 0);
            for (std::size_t i = 1; i < terms.size(); ++i) CHECK(terms[i] > 0);
        }
        if (s.p() < 0) {
            auto terms = continued_fraction(s, Parity::Any, FractionStyle::Negative);
            CHECK(terms.front() <= 0);
            for (std::size_t i = 1; i < terms.size(); ++i) CHECK(terms[i] < 0);
        }
    }
}

TEST_CASE("reparametrization sends a slope to infinity") {
    for (const Slope& s : slopes_up_to(8)) {
        TwistWord w = reparametrization_word(s);
        CHECK(w.act(s) == Slope::infinity());
        CHECK(w.inverse().act(Slope::infinity()) == s);
        for (const Slope& t : slopes_up_to(3)) CHECK(w.inverse().act(w.act(t)) == t);
    }
    TwistWord w;
    w.tw(2);
    w.du(-1);
    CHECK(w.str() == "tw^2 du^-1");
    CHECK(w.inverse().str() == "du^1 tw^-2");
}

TEST_CASE("twisting a loop moves its fillings with the slope action") {
    std::vector<Loop> loops = corpus::loop_corpus(60, 23, 6, 2);
    std::vector<TwistWord> words(3);
    words[0].tw(1);
    words[1].du(-2);
    words[2].ex();
    words[2].tw(-1);
    for (const Loop& l : loops) {
        for (const TwistWord& w : words) {
            Loop m = w.apply(l);
            for (const Slope& s : slopes_up_to(3)) {
                INFO(l.str() << " " << w.str() << " at " << s.str());
                FillingResult a = fill({l}, s);
                FillingResult b = fill({m}, w.act(s));
                CHECK(a.dim == b.dim);
                CHECK(a.chi_abs == b.chi_abs);
            }
        }
    }
}

TEST_CASE("fill matches the pairing oracle") {
    std::vector<Slope> slopes;
    for (const Slope& s : slopes_up_to(20))
        if (std::abs(s.p()) <= 4 && std::abs(s.q()) <= 4) slopes.push_back(s);
    for (const Loop& l : corpus::loop_corpus(80, 24)) {
        for (const Slope& s : slopes) {
            FillingResult a = fill({l}, s);
            FillingResult b = fill_oracle({l}, s);
            INFO(l.str() << " at " << s.str());
            CHECK(a.dim == b.dim);
            CHECK(a.chi_abs == b.chi_abs);
            CHECK(a.is_lspace == b.is_lspace);
        }
    }
}

TEST_CASE("known fillings") {
    Loop trefoil = Loop::parse("(a1 b1 c-2)");
    CHECK(fill({trefoil}, Slope::infinity()).dim == 1);
    CHECK(fill({Loop::parse("(d0)")}, Slope::infinity()).dim == 1);
    CHECK(fill({Loop::parse("(d0)")}, Slope(0, 1)).dim == 2);
    CHECK(fill({Loop::parse("(d0)")}, Slope(0, 1)).chi_abs == 0);
    CHECK(fill({Loop::parse("(d0)")}, Slope(5, 1)).dim == 5);
    CHECK(fill({Loop::parse("(d0)")}, Slope(5, 1)).is_lspace);
}
