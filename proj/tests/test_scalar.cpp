#include <doctest.h>

#include <sstream>

#include "sleib/scalar.hpp"

using namespace sleib;

TEST_CASE("scalar parsing accepts the full grammar") {
    CHECK(parse_scalar("0") == GaussianRational(0));
    CHECK(parse_scalar("-3") == GaussianRational(-3));
    CHECK(parse_scalar("5/7") == GaussianRational(5, 7));
    CHECK(parse_scalar("-10/4") == GaussianRational(-5, 2));
    CHECK(parse_scalar("i") == GaussianRational::i());
    CHECK(parse_scalar("-i") == -GaussianRational::i());
    CHECK(parse_scalar("1i") == GaussianRational::i());
    CHECK(parse_scalar("2/3i") == GaussianRational(mpq_class(0), mpq_class(2, 3)));
    CHECK(parse_scalar("1-i") == GaussianRational(mpq_class(1), mpq_class(-1)));
    CHECK(parse_scalar("-1/2+3/4i") == GaussianRational(mpq_class(-1, 2), mpq_class(3, 4)));
}

TEST_CASE("scalar parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_scalar(""), ParseError);
    CHECK_THROWS_AS(parse_scalar("1+"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1 + 2"), ParseError);
    CHECK_THROWS_AS(parse_scalar("i+1"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ZeroDenominator);
    CHECK_THROWS_AS(parse_scalar("x"), ParseError);
}

TEST_CASE("format is canonical and round-trips") {
    const char* cases[] = {"0",  "1",    "-1",      "1/2",      "-5/7",       "i",
                           "-i", "2/3i", "1-i",     "-3+2i",    "-1/2+3/4i",  "7-2/5i"};
    for (const char* s : cases) {
        GaussianRational x = parse_scalar(s);
        CHECK(format_scalar(x) == s);
        CHECK(parse_scalar(format_scalar(x)) == x);
    }
    // Non-canonical spellings normalize.
    CHECK(format_scalar(parse_scalar("2/4")) == "1/2");
    CHECK(format_scalar(parse_scalar("1i")) == "i");
    CHECK(format_scalar(parse_scalar("0i")) == "0");
    CHECK(format_scalar(parse_scalar("3+0i")) == "3");
}

TEST_CASE("field arithmetic") {
    GaussianRational a = parse_scalar("1/2-3i");
    GaussianRational b = parse_scalar("-2+1/5i");
    GaussianRational c = parse_scalar("7/3+i");

    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == GaussianRational(0));
    CHECK(a * a.inverse() == GaussianRational(1));
    CHECK(a / b * b == a);
    CHECK((a * b).is_zero() == false);
    CHECK_THROWS_AS(GaussianRational(0).inverse(), ZeroScale);
    CHECK_THROWS_AS(a / GaussianRational(0), ZeroScale);
}

TEST_CASE("integer powers") {
    GaussianRational x = parse_scalar("1+i");
    CHECK(x.pow(0) == GaussianRational(1));
    CHECK(x.pow(2) == parse_scalar("2i"));
    CHECK(x.pow(4) == GaussianRational(-4));
    CHECK(x.pow(-2) == parse_scalar("2i").inverse());
    CHECK(GaussianRational(3).pow(5) == GaussianRational(243));
    CHECK_THROWS_AS(GaussianRational(0).pow(-1), ZeroScale);
}

TEST_CASE("stream output matches format_scalar") {
    std::ostringstream os;
    os << parse_scalar("-3+2i");
    CHECK(os.str() == "-3+2i");
}
