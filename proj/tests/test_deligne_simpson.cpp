#include "parhiggs/deligne_simpson.hpp"
#include "parhiggs/error.hpp"
#include "parhiggs/families.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace parhiggs;

namespace {

SUnClass su2(const Rational& a) { return SUnClass({a, -a}); }

struct Quat {
    double w, x, y, z;
    Quat operator*(const Quat& o) const {
        return {w * o.w - x * o.x - y * o.y - z * o.z, w * o.x + x * o.w + y * o.z - z * o.y,
                w * o.y - x * o.z + y * o.w + z * o.x, w * o.z + x * o.y - y * o.x + z * o.w};
    }
};

// Sampled range of the rotation parameter of A_1 ... A_{d-1} over random
// conjugates; the last class is realizable iff its parameter lies in the true range.
std::pair<double, double> sampled_range(const std::vector<double>& a, int samples, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    double lo = 1, hi = 0;
    for (int t = 0; t < samples; ++t) {
        Quat p{1, 0, 0, 0};
        for (size_t j = 0; j + 1 < a.size(); ++j) {
            double ux = g(rng), uy = g(rng), uz = g(rng), nn = std::sqrt(ux * ux + uy * uy + uz * uz);
            double c = std::cos(2 * std::numbers::pi * a[j]), s = std::sin(2 * std::numbers::pi * a[j]);
            p = p * Quat{c, s * ux / nn, s * uy / nn, s * uz / nn};
        }
        double v = std::acos(std::clamp(p.w, -1.0, 1.0)) / (2 * std::numbers::pi);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo, hi};
}

SplitParabolicBundle random_adapted(std::mt19937_64& rng, int N, int d) {
    std::vector<LineSummand> s(N);
    for (int i = 0; i < N; ++i) {
        s[i].degree = static_cast<long>(rng() % 7) - 3;
        s[i].weights.assign(d, Rational(0));
    }
    for (int j = 0; j < d; ++j) {
        long den = N + 2 + static_cast<long>(rng() % 9);
        std::vector<long> nums;
        while (static_cast<int>(nums.size()) < N) {
            long x = static_cast<long>(rng() % den);
            if (std::find(nums.begin(), nums.end(), x) == nums.end()) nums.push_back(x);
        }
        for (int i = 0; i < N; ++i) s[i].weights[j] = Rational(nums[i], den);
    }
    return SplitParabolicBundle(d, s);
}

}  // namespace

TEST_CASE("existence for simple collections") {
    CHECK(su_existence({su2(0), su2(0)}).exists);
    CHECK(su_existence({su2(Rational(1, 4)), su2(Rational(1, 4)), su2(Rational(1, 4))}).exists);
    auto bad = su_existence({su2(Rational(49, 100)), su2(Rational(49, 100)), su2(Rational(49, 100))});
    CHECK_FALSE(bad.exists);
    REQUIRE_FALSE(bad.violations.empty());
    CHECK(bad.violations.front().s == 1);
    CHECK(bad.violations.front().invariant == 1);
    CHECK(bad.violations.front().lhs > bad.violations.front().rhs);
    CHECK(bad.inequalities_checked > 0);
    // Two classes realize a product one only when they are inverse.
    CHECK(su_existence({su2(Rational(1, 3)), su2(Rational(1, 3))}).exists);
    CHECK_FALSE(su_existence({su2(Rational(1, 3)), su2(Rational(1, 5))}).exists);
    CHECK_THROWS_AS(su_existence({}), InputError);
    CHECK_THROWS_AS(su_existence({su2(0), SUnClass({0, 0, 0})}), InputError);
}

TEST_CASE("rank three existence") {
    SUnClass c({Rational(1, 3), 0, Rational(-1, 3)});
    CHECK(su_existence({c, c, c}).exists);
    SUnClass other({Rational(1, 6), 0, Rational(-1, 6)});
    CHECK_FALSE(su_existence({c, other}).exists);
    CHECK(su_existence({other, other}).exists);
}

TEST_CASE("literal right-hand side is weaker") {
    std::vector<SUnClass> cls{su2(Rational(49, 100)), su2(Rational(49, 100)), su2(Rational(49, 100))};
    auto v = su_existence(cls, {InequalityRhs::puncture_count, false});
    CHECK(v.exists);
}

TEST_CASE("SU(2) existence agrees with sampling") {
    std::mt19937_64 rng(2024);
    int decided = 0;
    for (int t = 0; t < 60; ++t) {
        int d = 3 + static_cast<int>(rng() % 2);
        std::vector<SUnClass> cls;
        std::vector<double> a;
        for (int j = 0; j < d; ++j) {
            Rational x(static_cast<long>(rng() % 25), 50);
            cls.push_back(su2(x));
            a.push_back(x.to_double());
        }
        auto [lo, hi] = sampled_range(a, 20000, rng);
        const double margin = 0.02;
        bool inside = a.back() > lo + margin && a.back() < hi - margin;
        bool outside = a.back() < lo - margin || a.back() > hi + margin;
        if (!inside && !outside) continue;
        ++decided;
        CHECK(su_existence(cls).exists == inside);
    }
    CHECK(decided >= 30);
}

TEST_CASE("modified bundle preserves parabolic degree") {
    std::mt19937_64 rng(5);
    int built = 0;
    for (int t = 0; t < 400; ++t) {
        int N = 1 + static_cast<int>(rng() % 3), d = 1 + static_cast<int>(rng() % 4);
        auto e = random_adapted(rng, N, d);
        ModifiedBundle m;
        try {
            m = modified_bundle(e);
        } catch (const InputError&) {
            continue;
        }
        ++built;
        CHECK(m.par_deg_before == par_deg(e));
        CHECK(m.par_deg_after == m.par_deg_before);
        for (long deg : m.degrees) CHECK(deg == 0);
        for (const auto& ws : m.weights) {
            CHECK(ws.size() == static_cast<size_t>(N));
            CHECK(ws.front().value - ws.back().value < Rational(1));
        }
    }
    CHECK(built > 100);
}

TEST_CASE("modified two-step model") {
    auto m = build_example_69(Rational(1, 36));
    auto mod = modified_model(m);
    CHECK(mod.par_deg_after == mod.par_deg_before);
    CHECK(mod.par_deg_before == par_deg(m.total()));
    CHECK_THROWS_AS(modified_model(m, std::vector<long>{1}), InputError);
}

TEST_CASE("certificate for the rank three family") {
    for (auto eps : {Rational(1, 36), Rational(1, 40), Rational(1, 30)}) {
        auto c = gw_certificate(build_example_69(eps));
        CHECK(c.invariant == 1);
        CHECK(c.dimension_ok);
        CHECK(c.inequality_violated);
        CHECK(c.lambda_sum > Rational(c.query.degree));
        CHECK(c.query.k == 1);
        CHECK(c.query.n == 3);
        CHECK(c.modified.par_deg_after == c.modified.par_deg_before);
        CHECK(gw_invariant(c.query).value == c.invariant);
    }
}

TEST_CASE("certificate rejects a non-destabilizing top piece") {
    std::vector<SplitParabolicBundle> pieces{
        SplitParabolicBundle(3, {{-1, {Rational(1, 4), Rational(1, 4), Rational(1, 4)}}}),
        SplitParabolicBundle(3, {{0, {Rational(1, 2), Rational(1, 2), Rational(1, 2)}}})};
    GradedHiggsModel m(pieces, {1});
    CHECK_THROWS_AS(gw_certificate(m), InputError);
}
