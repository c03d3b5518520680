#include <doctest.h>

#include <algorithm>

#include "kac/codes.hpp"
#include "kac/factors.hpp"
#include "support.hpp"

using namespace kac;
using kactest::running_lambda;

namespace {

Code make(const std::string& text) { return parse_code(text); }

std::vector<Code> running_codes() {
    std::vector<Code> out;
    for (const char* text : {"0;0;0;0", "1;0;0;0", "1,2;2;0;0", "0;0;3;0", "1;0;3;0",
                             "1,2;2;3;0", "1,3;3;3;0"}) {
        Code base = make(text);
        out.push_back(base);
        Code variant = base;
        variant.columns[3] = {4};
        out.push_back(variant);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("code text format round-trips") {
    for (const char* text : {"1,3;3;3;0", "0;0;0;0", "1,2;2;3;4"})
        CHECK(format_code(parse_code(text)) == text);
    CHECK_THROWS_AS(parse_code("1,x;0"), ParseError);
}

TEST_CASE("validation accepts the seventh code and the zero code") {
    const Weight lambda = running_lambda();
    CHECK(validate_code(lambda, make("1,3;3;3;0")).empty());
    CHECK(validate_code(lambda, make("0;0;0;0")).empty());
}

TEST_CASE("the un-propagated variant breaks the last-label rule") {
    const auto violations = validate_code(running_lambda(), make("1,3;0;3;0"));
    REQUIRE(!violations.empty());
    CHECK(std::any_of(violations.begin(), violations.end(),
                      [](const RuleViolation& v) { return v.rule == Rule::VII; }));
}

TEST_CASE("malformed shapes are rejected before rule checks") {
    const Weight lambda = running_lambda();
    CHECK_THROWS_AS(validate_code(lambda, make("0;0;0")), MalformedCode);
    CHECK_THROWS_AS(validate_code(lambda, make("3,1;0;0;0")), MalformedCode);
    CHECK_THROWS_AS(validate_code(lambda, make("0,1;0;0;0")), MalformedCode);
    CHECK_THROWS_AS(validate_code(lambda, make("5;0;0;0")), MalformedCode);
}

TEST_CASE("enumeration reproduces the fourteen codes") {
    CHECK(enumerate_codes(running_lambda()) == running_codes());
}

TEST_CASE("typical weights have the empty code") {
    const auto codes = enumerate_codes(parse_shifted("5,3|1"));
    REQUIRE(codes.size() == 1);
    CHECK(codes.front().columns.empty());
}

TEST_CASE("code to tuple on the worked pairs") {
    const Weight lambda = running_lambda();
    CHECK(code_to_theta(lambda, make("1,3;3;3;0")) == Theta{1, 0, 3, 0});
    CHECK(code_to_theta(lambda, make("1,2;2;0;0")) == Theta{1, 2, 0, 0});
    CHECK(code_to_theta(lambda, make("0;0;0;0")) == Theta{0, 0, 0, 0});
    CHECK_THROWS_AS(code_to_theta(lambda, make("1,3;0;3;0")), InvalidCode);
}

TEST_CASE("tuple to code on the worked pairs") {
    const Weight lambda = running_lambda();
    CHECK(theta_to_code(lambda, {1, 0, 3, 0}) == make("1,3;3;3;0"));
    CHECK(theta_to_code(lambda, {0, 0, 0, 0}) == make("0;0;0;0"));
    CHECK_THROWS_AS(theta_to_code(lambda, {0, 2, 0, 0}), ThetaNotInThetaLambda);
}

TEST_CASE("full bijection on the running example") {
    const Weight lambda = running_lambda();
    const auto codes = enumerate_codes(lambda);
    const auto thetas = enumerate_direct(lambda);
    REQUIRE(codes.size() == thetas.size());
    std::vector<Theta> image;
    for (const Code& code : codes) {
        const Theta theta = code_to_theta(lambda, code);
        image.push_back(theta);
        CHECK(theta_to_code(lambda, theta) == code);
    }
    std::sort(image.begin(), image.end());
    CHECK(image == thetas);
}

TEST_CASE("bijection and appearance facts on random weights") {
    kactest::RandomWeights gen(41, 5, -15, 15, 4);
    for (int i = 0; i < 40; ++i) {
        const Weight w = gen.next();
        const auto codes = enumerate_codes(w);
        const auto thetas = enumerate_direct(w);
        CHECK(codes.size() == thetas.size());
        CHECK(codes.size() == composition_factors(w).factors.size());
        for (const Code& code : codes) {
            CHECK(theta_to_code(w, code_to_theta(w, code)) == code);
            // any appearing label tops its own column
            for (int p = 1; p <= code.length(); ++p)
                for (int s : code.column(p))
                    if (s != 0) CHECK(code.top(s) == s);
        }
        for (const Theta& theta : thetas)
            CHECK(code_to_theta(w, theta_to_code(w, theta)) == theta);
    }
}

TEST_CASE("codes are shift invariant") {
    const Weight lambda = running_lambda();
    const auto base = enumerate_codes(lambda);
    for (Entry c = -5; c <= 5; ++c) CHECK(enumerate_codes(shift(lambda, c)) == base);
}
