#include <doctest.h>

#include "kac/nqc.hpp"
#include "support.hpp"

using namespace kac;
using kactest::running_lambda;

namespace {

// Brute-force recomputation of the interval count straight from the words
// of the definition.
Entry ell_by_scan(const Weight& w, int s, int t) {
    const AtypicalData aty = atypical_data(w);
    const Entry lo = aty.values[static_cast<std::size_t>(s - 1)];
    const Entry hi = aty.values[static_cast<std::size_t>(t - 1)];
    Entry count = 0;
    for (Entry v = lo; v <= hi; ++v)
        if (std::find(w.entries.begin(), w.entries.end(), v) == w.entries.end()) ++count;
    return count;
}

} // namespace

TEST_CASE("relation table of the running example") {
    const NqcTable table = NqcTable::build(running_lambda());
    CHECK(table.degree() == 4);
    CHECK(table.rel(1, 2) == Relation::C);
    CHECK(table.rel(1, 3) == Relation::C);
    CHECK(table.rel(1, 4) == Relation::N);
    CHECK(table.rel(2, 3) == Relation::Q);
    CHECK(table.rel(2, 4) == Relation::N);
    CHECK(table.rel(3, 4) == Relation::N);
    for (int s = 1; s <= 4; ++s) {
        CHECK(table.rel(s, s) == Relation::Q);
        CHECK(table.ell(s, s) == 0);
    }
    CHECK(table.ell(1, 3) == 1);
    CHECK(table.ell(1, 4) == 4);
    CHECK_THROWS_AS(table.rel(2, 1), IndexOutOfRange); // defined only for s <= t
    CHECK_THROWS_AS(table.ell(1, 5), IndexOutOfRange);
}

TEST_CASE("chain bounds of the running example") {
    const NqcTable table = NqcTable::build(running_lambda());
    CHECK(table.p(1) == 3);
    CHECK(table.p(2) == 2);
    CHECK(table.p(3) == 3);
    CHECK(table.p(4) == 4);
    CHECK(table.plow(1) == 1);
    CHECK(table.plow(2) == 1);
    CHECK(table.plow(3) == 3);
    CHECK(table.plow(4) == 4);
}

TEST_CASE("r=1 boundary case") {
    const Weight w = parse_shifted("1|1");
    CHECK(p_upper(w, 1) == 1);
    CHECK(p_lower(w, 1) == 1);
    CHECK(k_step(w, 1) == 1); // next missing integer is 2
}

TEST_CASE("interval counts match the brute-force scan; relations classify them") {
    kactest::RandomWeights gen(42, 6, -20, 20, 4);
    for (int i = 0; i < 100; ++i) {
        const Weight w = gen.next();
        const NqcTable table = NqcTable::build(w);
        const int r = table.degree();
        for (int s = 1; s <= r; ++s)
            for (int t = s; t <= r; ++t) {
                const Entry l = ell_by_scan(w, s, t);
                CHECK(table.ell(s, t) == l);
                const Relation expected = l > t - s   ? Relation::N
                                          : l == t - s ? Relation::Q
                                                       : Relation::C;
                CHECK(table.rel(s, t) == expected);
            }
    }
}

TEST_CASE("critical, normal and quasi-critical relations are transitive") {
    kactest::RandomWeights gen(4242, 6, -20, 20, 4);
    for (int i = 0; i < 100; ++i) {
        const NqcTable table = NqcTable::build(gen.next());
        const int r = table.degree();
        for (int s = 1; s <= r; ++s)
            for (int t = s + 1; t <= r; ++t)
                for (int u = t + 1; u <= r; ++u) {
                    if (table.rel(s, t) == table.rel(t, u))
                        CHECK(table.rel(s, u) == table.rel(s, t));
                    // interval additivity behind it all
                    CHECK(table.ell(s, u) == table.ell(s, t) + table.ell(t, u));
                }
    }
}

TEST_CASE("raising steps of the running example") {
    const Weight lambda = running_lambda();
    const std::vector<Entry> expected{10, 2, 2, 1};
    for (int s = 1; s <= 4; ++s) CHECK(k_step(lambda, s) == expected[static_cast<std::size_t>(s - 1)]);
    CHECK(k_step_sequential(lambda) == expected);
}

TEST_CASE("lowering gaps of the running example") {
    const Weight lambda = running_lambda();
    const std::vector<Entry> expected{1, 5, 1, 1};
    for (int s = 1; s <= 4; ++s) CHECK(k_low(lambda, s, 1) == expected[static_cast<std::size_t>(s - 1)]);
    CHECK(k_low(lambda, 2, 2) == 6); // missing below 7: 2 then 1
    CHECK(k_low(lambda, 1, 0) == 0);
    CHECK_THROWS_AS(k_low(lambda, 5, 1), IndexOutOfRange);
}

TEST_CASE("raising gaps and the step identity") {
    const Weight lambda = running_lambda();
    CHECK(k_hat(lambda, 1, 3) == 10); // missing above 3: 9, 12, 13
    CHECK(k_hat(lambda, 4, 1) == 1);  // 16 is free
    kactest::RandomWeights gen(2024, 6, -20, 20, 4);
    for (int i = 0; i < 200; ++i) {
        const Weight w = gen.next();
        const NqcTable table = NqcTable::build(w);
        for (int s = 1; s <= table.degree(); ++s)
            CHECK(k_step(table, s) == k_hat(w, s, table.p(s) + 1 - s));
    }
}

TEST_CASE("definitional and sequential step procedures agree on dominant weights") {
    kactest::RandomWeights gen(777, 6, -20, 20, 4);
    for (int i = 0; i < 200; ++i) {
        const Weight w = gen.next();
        const NqcTable table = NqcTable::build(w);
        const auto seq = k_step_sequential(w);
        for (int s = 1; s <= table.degree(); ++s)
            CHECK(k_step(table, s) == seq[static_cast<std::size_t>(s - 1)]);
    }
}

TEST_CASE("totally normal weights have unit steps") {
    for (int r = 1; r <= 6; ++r) {
        const auto seq = k_step_sequential(kactest::totally_n(r));
        for (Entry k : seq) CHECK(k == 1);
    }
}

TEST_CASE("step minimality, brute force") {
    kactest::RandomWeights gen(31337, 5, -15, 15, 3);
    for (int i = 0; i < 50; ++i) {
        const Weight w = gen.next();
        const NqcTable table = NqcTable::build(w);
        const auto in_s = [&](Entry v) {
            return std::binary_search(table.entry_set().begin(), table.entry_set().end(), v);
        };
        for (int s = 1; s <= table.degree(); ++s) {
            const Entry v = table.atypical().values[static_cast<std::size_t>(s - 1)];
            // k_step: minimal k with p_s+1-s integers of (v, v+k] free
            const Entry k = k_step(table, s);
            const auto free_above = [&](Entry kk) {
                Entry c = 0;
                for (Entry x = v + 1; x <= v + kk; ++x) c += !in_s(x);
                return c;
            };
            const int target = table.p(s) + 1 - s;
            CHECK(free_above(k) == target);
            for (Entry kk = 1; kk < k; ++kk) CHECK(free_above(kk) < target);
            // first lowering gap: minimal k whose subtraction keeps regularity
            const Entry kl = k_low(w, s, 1);
            CHECK(!in_s(v - kl));
            for (Entry kk = 1; kk < kl; ++kk) CHECK(in_s(v - kk));
        }
    }
}

TEST_CASE("restriction of the running example") {
    const Weight lambda = running_lambda();
    CHECK(restrict(lambda, 2, 3) == parse_shifted("10,7,6,4|5,7,8,10"));
    CHECK(restrict(lambda, 3, 4) == parse_shifted("15,11,10|8,10,15"));
    CHECK(restrict(lambda, 1, 4) == lambda);
}

TEST_CASE("restriction preserves the sub-table") {
    kactest::RandomWeights gen(555, 6, -20, 20, 4);
    for (int i = 0; i < 100; ++i) {
        const Weight w = gen.next();
        const NqcTable table = NqcTable::build(w);
        const int r = table.degree();
        for (int s = 1; s <= r; ++s)
            for (int t = s; t <= r; ++t) {
                const Weight sub = restrict(w, s, t);
                CHECK(is_dominant(sub));
                const NqcTable subtable = NqcTable::build(sub);
                CHECK(subtable.degree() == t - s + 1);
                for (int a = 1; a <= subtable.degree(); ++a)
                    for (int b = a; b <= subtable.degree(); ++b)
                        CHECK(subtable.rel(a, b) == table.rel(s - 1 + a, s - 1 + b));
            }
    }
}

TEST_CASE("nqc data is shift invariant") {
    const Weight lambda = running_lambda();
    const NqcTable base = NqcTable::build(lambda);
    for (Entry c = -5; c <= 5; ++c) {
        const NqcTable shifted = NqcTable::build(shift(lambda, c));
        for (int s = 1; s <= 4; ++s)
            for (int t = s; t <= 4; ++t) {
                CHECK(shifted.ell(s, t) == base.ell(s, t));
                CHECK(shifted.rel(s, t) == base.rel(s, t));
            }
    }
}
