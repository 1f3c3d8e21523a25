#include "parhiggs/error.hpp"
#include "parhiggs/families.hpp"

#include <doctest.h>

using namespace parhiggs;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

Example62Params params(int n, long a, const Rational& eps) {
    Example62Params p;
    p.n = n;
    p.a = a;
    p.eps = eps;
    p.eps_vec = default_eps_vec(n);
    return p;
}

// Lines in a rank-2 bundle O(c)^2 with generic flags: a line of degree c - m
// is a degree-m map to P^1, which can pass through the flag line at one
// puncture when m = 0, through any three prescribed directions when m = 1,
// and through any number of them when m >= 2.
Rational rank2_line_oracle(const SplitParabolicBundle& e) {
    const int d = e.punctures();
    const long c = e.summands()[0].degree;
    std::optional<Rational> best;
    for (int m = 0; m <= 3; ++m)
        for (unsigned J = 0; J < (1u << d); ++J) {
            int hits = __builtin_popcount(J);
            if ((m == 0 && hits > 1) || (m == 1 && hits > 3)) continue;
            Rational v(c - m);
            for (int j = 0; j < d; ++j) {
                Rational a = e.summands()[0].weights[j], b = e.summands()[1].weights[j];
                v += (J >> j & 1) ? max(a, b) : min(a, b);
            }
            if (!best || *best < v) best = v;
        }
    return *best;
}

}  // namespace

TEST_CASE("weight inequality") {
    CHECK(lemma_6_1_check(3, 1, R(1, 100)));
    CHECK(lemma_6_1_check(2, 0, R(1, 1000)));
    CHECK_FALSE(lemma_6_1_check(3, 1, R(1, 2)));
    CHECK_THROWS_AS(lemma_6_1_check(1, 1, R(1, 2)), InputError);
    CHECK_THROWS_AS(lemma_6_1_check(3, 1, R(0)), InputError);
}

TEST_CASE("parameter validation") {
    auto p = params(3, 1, R(1, 100));
    CHECK_NOTHROW(validate(p));
    p.eps_vec = {R(1, 1000000), R(-1, 1000000)};
    CHECK_THROWS_AS(validate(p), InputError);
    p.eps_vec = {R(-1, 1000000), R(2, 1000000)};
    CHECK_THROWS_AS(validate(p), InputError);
    p.eps_vec = {R(0)};
    CHECK_THROWS_AS(validate(p), InputError);
    CHECK_THROWS_AS(validate(params(3, 1, R(1, 2))), InputError);
    CHECK(default_eps_vec(2) == std::vector<Rational>{R(0)});
    CHECK(default_eps_vec(4) == std::vector<Rational>{R(-2, 1000000), R(0), R(2, 1000000)});
    for (int n = 2; n <= 6; ++n)
        for (long a = 0; a <= 5; ++a) {
            auto s = suggest_example62_params(n, a);
            CHECK(s.eps > 0);
            CHECK(s.eps <= R(1, 100));
            CHECK_NOTHROW(validate(s));
        }
}

TEST_CASE("rank-n family with n = 3, a = 1") {
    auto p = params(3, 1, R(1, 100));
    auto ex = build_example_62(p);
    CHECK(ex.d == 4);
    CHECK(ex.model.total().underlying() == SplitBundle({-1, -1, -2}));
    CHECK(par_deg(ex.model.total()) == 0);
    for (int j = 0; j < 4; ++j) {
        Rational s;
        for (const auto& v : ex.weights.expanded(j)) s += v;
        CHECK(s == 1);
    }
    CHECK(check_distinct(ex.weights));
    auto c = certify_example_62(ex);
    CHECK(c.stability.stable);
    CHECK(c.minimal_energy.minimal_energy);
    CHECK(c.hom_underlying == SplitBundle({-1, -1}));
    CHECK(c.formulas_agree);
    CHECK(c.higgs_field_nonzero);
    CHECK(c.stability.entries.size() == 4);
    CHECK(c.stability.entries[0].value == -4 * R(1, 100));

    const auto& S = ex.model.piece(2);
    CHECK(max_subbundle_pardeg(S, 1) == R(-1) + 4 * (R(1, 2) * (R(1, 2) + R(1, 100)) + R(1, 1000000)));
    CHECK(max_subbundle_pardeg(S, 2) == par_deg(S));
}

TEST_CASE("rank-n family with two graded pieces of rank one") {
    auto c = certify_example_62(build_example_62(params(2, 2, R(1, 100))));
    CHECK(c.stability.stable);
    CHECK(c.minimal_energy.minimal_energy);
    // Large a: the puncture count exceeds 4n^2 - 28 with only two graded pieces.
    auto big = build_example_62(params(2, 20, R(1, 100)));
    CHECK(big.d > 4 * 4 - 28);
    auto cb = certify_example_62(big);
    CHECK(cb.stability.stable);
    CHECK(cb.minimal_energy.minimal_energy);
}

TEST_CASE("rank-n family with a = 0 has a vanishing Higgs field") {
    for (int n = 2; n <= 5; ++n) {
        auto c = certify_example_62(build_example_62(params(n, 0, R(1, 100))));
        CHECK_FALSE(c.higgs_field_nonzero);
        CHECK_FALSE(c.stability.stable);
        CHECK(c.total_par_deg == 0);
    }
}

TEST_CASE("rank-n family grid, a >= 1") {
    for (int n = 2; n <= 5; ++n)
        for (long a = 1; a <= 3; ++a)
            for (const auto& eps : {R(1, 100), R(1, 1000)}) {
                auto ex = build_example_62(params(n, a, eps));
                auto c = certify_example_62(ex);
                CHECK(c.total_par_deg == 0);
                CHECK(c.stability.stable);
                CHECK(c.minimal_energy.minimal_energy);
                CHECK(c.hom_underlying == SplitBundle(std::vector<long>(n - 1, -1)));
                CHECK(c.distinct);
                CHECK(c.formulas_agree);
            }
}

TEST_CASE("subbundle bounds") {
    SplitParabolicBundle e(0, {{0, {}}, {-5, {}}}, FlagMode::generic);
    CHECK(max_subbundle_pardeg(e, 1) == 0);
    CHECK_THROWS_AS(max_subbundle_pardeg(e, 3), InputError);
    SplitParabolicBundle a(1, {{0, {R(1, 2)}}, {0, {R(1, 4)}}});
    CHECK_THROWS_AS(max_line_subbundle_pardeg_generic(a), InputError);
}

TEST_CASE("rank-three example") {
    CHECK_THROWS_AS(build_example_69(R(1, 48)), InputError);
    CHECK_THROWS_AS(build_example_69(R(1, 24)), InputError);
    for (const auto& eps : {R(1, 36), R(1, 40), R(1, 30), R(1, 25), R(1, 45), R(1, 47)}) {
        auto m = build_example_69(eps);
        const auto& S = m.piece(2);
        const auto& Q = m.piece(1);
        CHECK(par_slope(S) == R(1, 12) - eps);
        CHECK(par_deg(m.total()) == 0);
        CHECK(max_line_subbundle_pardeg_generic(Q) == rank2_line_oracle(Q));
        CHECK(max_line_subbundle_pardeg_generic(Q) == R(-1, 24));
        CHECK(general_line_pardeg(Q) == R(-1, 24) - eps);
        auto c = certify_example_69(m, eps);
        CHECK(c.minimal_energy.minimal_energy);
        CHECK(c.hom_underlying == SplitBundle({-1, -1}));
        CHECK(c.stability.stable);
        CHECK(c.formulas_agree);
        auto ps = adjoint_pieces(m);
        REQUIRE(ps.front().split.has_value());
        CHECK(ps.front().k == -1);
        CHECK(ps.front().rank == 2);
        CHECK(ps.front().split->underlying() == SplitBundle({-1, -1}));
    }
}

TEST_CASE("line oracle on random generic rank-2 bundles") {
    unsigned seed = 3;
    auto next = [&] { return seed = seed * 1103515245u + 12345u, (seed >> 8) % 97; };
    for (int t = 0; t < 300; ++t) {
        int d = 1 + int(next() % 4);
        std::vector<Rational> w1, w2;
        for (int j = 0; j < d; ++j) {
            w1.push_back(Rational(long(next()), 97));
            w2.push_back(Rational(long(next()), 97));
        }
        SplitParabolicBundle e(d, {{-1, w1}, {-1, w2}}, FlagMode::generic);
        CHECK(max_line_subbundle_pardeg_generic(e) == rank2_line_oracle(e));
    }
}
