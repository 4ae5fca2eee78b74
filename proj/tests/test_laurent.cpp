#include "doctest.h"

#include "tangles/laurent.hpp"
#include "testutil.hpp"

using namespace tangles;
using testutil::rand_laurent;
using testutil::rand_laurent_nonzero;
using testutil::rand_unit;

namespace {
Laurent L(const char* s) { return parse_laurent(s); }
}

TEST_CASE("laurent basic arithmetic") {
    Laurent t = Laurent::t();
    CHECK(t * t == Laurent::t(2));
    CHECK(t * t.involute() == Laurent(1));
    CHECK((t + Laurent(1)) * (t - Laurent(1)) == Laurent::t(2) - Laurent(1));
    CHECK((t - t).is_zero());
    CHECK(Laurent(0).is_zero());
    CHECK(Laurent(1).is_one());
    CHECK(Laurent::term(3, 2).coeff(2) == 3);
    CHECK(Laurent::term(3, 2).coeff(1) == 0);
    CHECK(L("2t^2 - 3t + 2").eval_at_one() == 1);
}

TEST_CASE("laurent units") {
    CHECK(Laurent(1).is_unit());
    CHECK(Laurent(-1).is_unit());
    CHECK(Laurent::t(-7).is_unit());
    CHECK(Laurent::term(-1, 3).is_unit());
    CHECK_FALSE(Laurent(2).is_unit());
    CHECK_FALSE((Laurent::t() + Laurent(1)).is_unit());
    CHECK_FALSE(Laurent(0).is_unit());
}

TEST_CASE("involute is a ring involution") {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        Laurent a = rand_laurent(rng), b = rand_laurent(rng);
        CHECK(involute(a + b) == involute(a) + involute(b));
        CHECK(involute(a * b) == involute(a) * involute(b));
        CHECK(involute(involute(a)) == a);
    }
    CHECK(involute(L("t - 1 + t^-1")) == L("t - 1 + t^-1"));
}

TEST_CASE("canonical form") {
    CHECK(canonical_form(Laurent(0)) == Laurent(0));
    CHECK(canonical_form(L("-3t^5")) == Laurent(3));
    CHECK(canonical_form(L("2t^-1 - 3 + 2t")) == L("2t^2 - 3t + 2"));
    CHECK(canonical_form(L("-2t^3 + 3t^2 - 2t")) == L("2t^2 - 3t + 2"));
    CHECK(to_string(canonical_form(L("2t^4 - 3t^3 + 2t^2"))) == "2t^2 - 3t + 2");

    std::mt19937 rng(12);
    for (int i = 0; i < 200; ++i) {
        Laurent p = rand_laurent_nonzero(rng);
        Laurent c = canonical_form(p);
        CHECK(canonical_form(c) == c);
        CHECK(c.lowest_exp() == 0);
        CHECK(c.coeff(0) > 0);
        CHECK(canonical_form(p * rand_unit(rng)) == c);
        CHECK(p * canonical_unit(p) == c);
        CHECK(unit_equal(p, p * rand_unit(rng)));
    }
}

TEST_CASE("content and primitive part") {
    auto [c, prim] = content_primitive(L("-8"));
    CHECK(c == 8);
    CHECK(prim == Laurent(-1));

    auto [c2, p2] = content_primitive(L("6t^2 - 9t^-1"));
    CHECK(c2 == 3);
    CHECK(p2 == L("2t^2 - 3t^-1"));

    CHECK_THROWS_AS(content_primitive(Laurent(0)), MathError);

    std::mt19937 rng(13);
    for (int i = 0; i < 200; ++i) {
        Laurent p = rand_laurent_nonzero(rng);
        auto [content, primitive] = content_primitive(p);
        CHECK(Laurent(content) * primitive == p);
        CHECK(content_primitive(primitive).first == 1);
    }
}

TEST_CASE("gcd golden cases") {
    CHECK(gcd(Laurent(0), Laurent(0)) == Laurent(0));
    CHECK(gcd(L("t - 1"), Laurent(0)) == L("-t + 1"));
    CHECK(gcd(Laurent(0), L("-t + 1")) == L("-t + 1"));
    CHECK(gcd(L("t^2 - 1"), L("t^3 - 1")) == L("-t + 1"));
    CHECK(gcd(L("2t + 2"), Laurent(4)) == Laurent(2));
    CHECK(gcd(L("t^5"), L("t^-5")) == Laurent(1));
    CHECK(gcd(L("t^2 - 2t + 1"), L("t^2 - 1")) == L("-t + 1"));
    CHECK(gcd(L("6t^2 + 6"), L("4t^4 - 4")) == L("2t^2 + 2"));
}

TEST_CASE("gcd properties") {
    std::mt19937 rng(14);
    for (int i = 0; i < 150; ++i) {
        Laurent a = rand_laurent(rng, 3, 3, 4), b = rand_laurent(rng, 3, 3, 4);
        Laurent g = gcd(a, b);
        CHECK(g == gcd(b, a));
        if (!g.is_zero()) {
            CHECK(exact_div(a, g) * g == a);
            CHECK(exact_div(b, g) * g == b);
        }
        Laurent c = rand_laurent_nonzero(rng, 2, 2, 3);
        CHECK(gcd(a * c, b * c) == canonical_form(g * c));
        CHECK(gcd(a * rand_unit(rng), b * rand_unit(rng)) == g);
    }
}

TEST_CASE("exact division") {
    CHECK(exact_div(L("t^2 - 1"), L("t - 1")) == L("t + 1"));
    CHECK(exact_div(L("2t^2 + 2t"), L("2t")) == L("t + 1"));
    CHECK(exact_div(L("t - 1 + t^-1"), Laurent(1)) == L("t - 1 + t^-1"));
    CHECK(exact_div(Laurent(0), L("t - 1")).is_zero());
    CHECK(exact_div(L("t^2 - 1"), L("-t^3")) == L("-t^-1 + t^-3"));
    CHECK_THROWS_AS(exact_div(L("t^2 + 1"), L("t - 1")), DivisionError);
    CHECK_THROWS_AS(exact_div(L("2t"), Laurent(4)), DivisionError);
    CHECK_THROWS_AS(exact_div(L("t"), Laurent(0)), DivisionError);

    std::mt19937 rng(15);
    for (int i = 0; i < 200; ++i) {
        Laurent a = rand_laurent(rng), b = rand_laurent_nonzero(rng);
        CHECK(exact_div(a * b, b) == a);
    }
}

TEST_CASE("lcm") {
    CHECK(lcm(L("t - 1"), L("t + 1")) == canonical_form(L("t^2 - 1")));
    CHECK(lcm(L("2t - 2"), L("4t - 4")) == L("-4t + 4"));
    CHECK(lcm(Laurent(0), L("t")).is_zero());
}

TEST_CASE("text rendering") {
    CHECK(to_string(Laurent(0)) == "0");
    CHECK(to_string(L("2t^2 - 3t + 2")) == "2t^2 - 3t + 2");
    CHECK(to_string(Laurent(1) - Laurent::t()) == "-t + 1");
    CHECK(to_string(Laurent::t() - Laurent(1) + Laurent::t(-1)) == "t - 1 + t^-1");
    CHECK(to_string(Laurent::t(-2)) == "t^-2");
    CHECK(to_string(Laurent::term(-1, 1)) == "-t");
    CHECK(to_string(Laurent(-7)) == "-7");
    CHECK(to_string(L("-2t^3 + 4t^2 - 4t + 2")) == "-2t^3 + 4t^2 - 4t + 2");
}

TEST_CASE("text parsing") {
    CHECK(parse_laurent("0").is_zero());
    CHECK(parse_laurent("2t^2-3t+2") == L("2t^2 - 3t + 2"));
    CHECK(parse_laurent("  t ") == Laurent::t());
    CHECK(parse_laurent("-t^-1") == Laurent::term(-1, -1));
    CHECK(parse_laurent("+5") == Laurent(5));
    CHECK(parse_laurent("3*t^2") == Laurent::term(3, 2));
    CHECK(parse_laurent("t + t") == Laurent::term(2, 1));
    CHECK_THROWS_AS(parse_laurent(""), ParseError);
    CHECK_THROWS_AS(parse_laurent("t^"), ParseError);
    CHECK_THROWS_AS(parse_laurent("2x"), ParseError);
    CHECK_THROWS_AS(parse_laurent("+"), ParseError);
    CHECK_THROWS_AS(parse_laurent("3 4"), ParseError);

    std::mt19937 rng(16);
    for (int i = 0; i < 200; ++i) {
        Laurent p = rand_laurent(rng);
        CHECK(parse_laurent(to_string(p)) == p);
    }
}

TEST_CASE("rational functions reduce eagerly") {
    RatFunc r(L("t^2 - 1"), L("t - 1"));
    CHECK(r.is_laurent());
    CHECK(r.as_laurent() == L("t + 1"));

    RatFunc s(Laurent(1), L("-t"));
    CHECK(s.is_laurent());
    CHECK(s.as_laurent() == Laurent::term(-1, -1));

    RatFunc q(Laurent(1), L("t - 1"));
    CHECK_FALSE(q.is_laurent());
    CHECK_THROWS_AS(q.as_laurent(), MathError);
    CHECK(q + RatFunc(Laurent(1), L("-t + 1")) == RatFunc());

    CHECK_THROWS_AS(RatFunc(Laurent(1), Laurent(0)), DivisionError);
    CHECK_THROWS_AS(RatFunc(Laurent(1)) / RatFunc(), DivisionError);
}

TEST_CASE("rational function field laws") {
    std::mt19937 rng(17);
    for (int i = 0; i < 100; ++i) {
        RatFunc a(rand_laurent(rng, 2, 2, 3), rand_laurent_nonzero(rng, 2, 2, 3));
        RatFunc b(rand_laurent(rng, 2, 2, 3), rand_laurent_nonzero(rng, 2, 2, 3));
        RatFunc c(rand_laurent(rng, 2, 2, 3), rand_laurent_nonzero(rng, 2, 2, 3));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RatFunc());
        if (!b.is_zero()) CHECK(a / b * b == a);
    }
}
