#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "pivmat/strategies.hpp"
#include "testutil.hpp"

using namespace pivmat;
using testutil::mat;

namespace {

const ExactArith kExact;

/// Matrix with explicit candidate masks; positions are matrix coordinates.
struct StubState {
    Matrix<Rational> m;
    std::vector<std::size_t> rs, cs;

    const std::vector<std::size_t>& rows() const { return rs; }
    const std::vector<std::size_t>& cols() const { return cs; }
    const Rational& entry(std::size_t p, std::size_t k) const { return m.at(p, k); }
    bool row_ok(std::size_t p) const { return std::count(rs.begin(), rs.end(), p) > 0; }
    bool col_ok(std::size_t k) const { return std::count(cs.begin(), cs.end(), k) > 0; }
};

StubState full(Matrix<Rational> m) {
    StubState s{std::move(m), {}, {}};
    for (std::size_t i = 0; i < s.m.order(); ++i) {
        s.rs.push_back(i);
        s.cs.push_back(i);
    }
    return s;
}

}  // namespace

TEST_SUITE("strategies") {

TEST_CASE("first-nonzero scans candidates in row-major order") {
    FirstNonzero fn;
    auto s = full(testutil::sample4());
    auto c = fn.choose(s, kExact);
    REQUIRE(c.has_value());
    CHECK(c->p == 0);
    CHECK(c->k == 0);
    CHECK(c->value == Rational(2));

    auto z = full(mat(3, {0, 0, 0, 0, 0, 7, 0, 0, 0}));
    c = fn.choose(z, kExact);
    REQUIRE(c.has_value());
    CHECK(c->p == 1);
    CHECK(c->k == 2);
}

TEST_CASE("row-max takes the largest magnitude in the first usable row") {
    RowMaxMagnitude rm;
    auto s = full(testutil::sample4());
    auto c = rm.choose(s, kExact);
    REQUIRE(c.has_value());
    CHECK(c->p == 0);
    CHECK(c->k == 1);
    CHECK(c->value == Rational(5));
}

TEST_CASE("global-max takes the largest magnitude overall") {
    GlobalMaxMagnitude gm;
    auto s = full(testutil::sample4());
    auto c = gm.choose(s, kExact);
    REQUIRE(c.has_value());
    CHECK(c->p == 1);
    CHECK(c->k == 1);
    CHECK(c->value == Rational(10));
}

TEST_CASE("magnitude ties resolve to the earliest position") {
    GlobalMaxMagnitude gm;
    auto s = full(mat(2, {3, -3, -3, 3}));
    auto c = gm.choose(s, kExact);
    REQUIRE(c.has_value());
    CHECK(c->p == 0);
    CHECK(c->k == 0);

    RowMaxMagnitude rm;
    auto t = full(mat(2, {-4, 4, 0, 1}));
    c = rm.choose(t, kExact);
    REQUIRE(c.has_value());
    CHECK(c->k == 0);
    CHECK(c->value == Rational(-4));
}

TEST_CASE("no candidate means every candidate cell is zero") {
    auto zero = full(mat(2, {0, 0, 0, 0}));
    CHECK_FALSE(FirstNonzero{}.choose(zero, kExact).has_value());
    CHECK_FALSE(RowMaxMagnitude{}.choose(zero, kExact).has_value());
    CHECK_FALSE(GlobalMaxMagnitude{}.choose(zero, kExact).has_value());

    // Non-zero entries outside the candidate sets do not count.
    StubState masked{mat(3, {1, 0, 2, 0, 0, 0, 3, 0, 4}), {1}, {1}};
    CHECK_FALSE(FirstNonzero{}.choose(masked, kExact).has_value());
    CHECK_FALSE(GlobalMaxMagnitude{}.choose(masked, kExact).has_value());
}

TEST_CASE("float tolerance gates candidacy") {
    FloatArith loose{0.5};
    struct FloatStub {
        Matrix<double> m;
        std::vector<std::size_t> rc;
        const std::vector<std::size_t>& rows() const { return rc; }
        const std::vector<std::size_t>& cols() const { return rc; }
        double entry(std::size_t p, std::size_t k) const { return m.at(p, k); }
        bool row_ok(std::size_t p) const { return p < m.order(); }
        bool col_ok(std::size_t k) const { return k < m.order(); }
    };
    Matrix<double> m{2};
    m.at(0, 0) = 0.4;
    m.at(1, 1) = -0.3;
    FloatStub s{std::move(m), {0, 1}};
    CHECK_FALSE(GlobalMaxMagnitude{}.choose(s, loose).has_value());
    FloatArith tight{0.1};
    auto c = GlobalMaxMagnitude{}.choose(s, tight);
    REQUIRE(c.has_value());
    CHECK(c->value == 0.4);
}

TEST_CASE("every strategy returns admissible non-zero pivots on random states") {
    auto rng = testutil::make_rng(505);
    FirstNonzero fn;
    RowMaxMagnitude rm;
    GlobalMaxMagnitude gm;
    int nones = 0;
    for (int it = 0; it < 10000; ++it) {
        std::size_t n = 1 + rng() % 5;
        StubState s{testutil::random_matrix(rng, n, 55), {}, {}};
        for (std::size_t i = 0; i < n; ++i) {
            if (rng() % 4) s.rs.push_back(i);
            if (rng() % 4) s.cs.push_back(i);
        }
        if (s.rs.empty()) s.rs.push_back(rng() % n);
        if (s.cs.empty()) s.cs.push_back(rng() % n);

        bool any_nonzero = false;
        for (std::size_t p : s.rs)
            for (std::size_t k : s.cs)
                if (!s.m.at(p, k).is_zero()) any_nonzero = true;

        auto inspect = [&](const auto& choice) {
            CHECK(choice.has_value() == any_nonzero);
            if (!choice) {
                ++nones;
                return;
            }
            CHECK(s.row_ok(choice->p));
            CHECK(s.col_ok(choice->k));
            CHECK_FALSE(choice->value.is_zero());
            CHECK(choice->value == s.m.at(choice->p, choice->k));
        };
        inspect(fn.choose(s, kExact));
        inspect(rm.choose(s, kExact));
        inspect(gm.choose(s, kExact));
    }
    CHECK(nones > 0);  // the sampler must actually exercise the empty case
}

TEST_CASE("scripted parses 1-based pairs with comments") {
    std::istringstream in{"# pivots\n1 1\n\n  2 3\n"};
    Scripted s = Scripted::parse(in);
    auto st = full(testutil::sample4());
    auto c = s.choose(st, kExact);
    REQUIRE(c.has_value());
    CHECK(c->p == 0);
    CHECK(c->k == 0);
    c = s.choose(st, kExact);
    REQUIRE(c.has_value());
    CHECK(c->p == 1);
    CHECK(c->k == 2);
    CHECK(s.consumed() == 2);
}

TEST_CASE("scripted rejects malformed script lines") {
    auto bad = [](const char* text) {
        std::istringstream in{std::string(text)};
        CHECK_THROWS_AS(Scripted::parse(in), ParseError);
    };
    bad("1\n");
    bad("1 2 3\n");
    bad("0 1\n");
    bad("1 -2\n");
    bad("a b\n");
    try {
        std::istringstream in{"1 1\nnope\n"};
        Scripted::parse(in);
        FAIL_CHECK("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("scripted replay failures name the offending step") {
    auto st = full(mat(2, {1, 0, 0, 1}));

    Scripted exhausted{{}};
    CHECK_THROWS_AS((void)exhausted.choose(st, kExact), ScriptedPivotError);

    Scripted out_of_range{{{5, 0}}};
    try {
        (void)out_of_range.choose(st, kExact);
        FAIL_CHECK("expected ScriptedPivotError");
    } catch (const ScriptedPivotError& e) {
        CHECK(e.step() == 1);
        CHECK(std::string(e.what()).find("row 6") != std::string::npos);
    }

    Scripted zero_pivot{{{0, 1}}};
    CHECK_THROWS_AS((void)zero_pivot.choose(st, kExact), ScriptedPivotError);
}

TEST_CASE("make_strategy resolves names") {
    CHECK(std::holds_alternative<FirstNonzero>(make_strategy("first-nonzero")));
    CHECK(std::holds_alternative<RowMaxMagnitude>(make_strategy("row-max")));
    CHECK(std::holds_alternative<GlobalMaxMagnitude>(make_strategy("global-max")));
    auto v = make_strategy("scripted:" + testutil::fixture_path("det_pivots.txt"));
    CHECK(std::holds_alternative<Scripted>(v));
    CHECK_THROWS_AS(make_strategy("fastest"), std::invalid_argument);
    CHECK_THROWS_AS(make_strategy("scripted:/no/such/file"), Error);
}

}  // TEST_SUITE
