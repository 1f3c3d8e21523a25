#include "parhiggs/deligne_simpson.hpp"
#include "parhiggs/error.hpp"
#include "parhiggs/higgs.hpp"
#include "parhiggs/parabolic.hpp"
#include "parhiggs/weights.hpp"

#include <doctest.h>

#include <map>
#include <optional>
#include <random>

using namespace parhiggs;

namespace {

constexpr int kCases = 1000;

long rand_range(std::mt19937_64& rng, long lo, long hi) { return lo + static_cast<long>(rng() % (hi - lo + 1)); }

// Distinct weights per puncture across the summands, so every pair is adapted.
SplitParabolicBundle random_bundle(std::mt19937_64& rng, int N, int d, long den) {
    std::vector<LineSummand> s(N);
    for (auto& x : s) x.degree = rand_range(rng, -4, 4);
    for (int j = 0; j < d; ++j) {
        std::vector<long> nums;
        while (static_cast<long>(nums.size()) < N) {
            long v = rand_range(rng, 0, den - 1);
            if (std::find(nums.begin(), nums.end(), v) == nums.end()) nums.push_back(v);
        }
        for (int i = 0; i < N; ++i) s[i].weights.push_back(Rational(nums[i], den));
    }
    return SplitParabolicBundle(d, s);
}

SplitParabolicBundle random_line(std::mt19937_64& rng, int d, long den) {
    std::vector<Rational> w;
    for (int j = 0; j < d; ++j) w.push_back(Rational(rand_range(rng, 0, den - 1), den));
    return SplitParabolicBundle(d, {{rand_range(rng, -4, 4), w}});
}

// Monomials of degree a in two variables.
long sections(long a) {
    long c = 0;
    for (long i = 0; i <= a; ++i) ++c;
    return c;
}

// Graded pieces with pairwise distinct nonzero weights at every puncture.
GradedHiggsModel random_model(std::mt19937_64& rng, int r, int d) {
    std::vector<int> ranks(r);
    int total = 0;
    for (auto& x : ranks) total += x = static_cast<int>(rand_range(rng, 1, 2));
    const long den = 2 * total + 3;
    std::vector<std::vector<long>> nums(d);
    for (auto& v : nums)
        while (static_cast<int>(v.size()) < total) {
            long x = rand_range(rng, 1, den - 1);
            if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
        }
    std::vector<SplitParabolicBundle> pieces;
    int used = 0;
    for (int p = 0; p < r; ++p) {
        std::vector<LineSummand> s(ranks[p]);
        for (auto& x : s) {
            x.degree = rand_range(rng, -3, 3);
            for (int j = 0; j < d; ++j) x.weights.push_back(Rational(nums[j][used], den));
            ++used;
        }
        pieces.emplace_back(d, s);
    }
    std::vector<long> hr;
    for (int p = 0; p + 1 < r; ++p) hr.push_back(rand_range(rng, 1, std::min(ranks[p], ranks[p + 1])));
    return GradedHiggsModel(pieces, hr);
}

std::vector<long> random_degrees(std::mt19937_64& rng, long n) {
    std::vector<long> v(n);
    for (auto& x : v) x = rand_range(rng, -5, 3);
    return v;
}

// Adds consistent step data for every k >= 2 together with its mirror at 1 - k.
std::optional<GradedHiggsModel> with_full_adjoint(std::mt19937_64& rng, const GradedHiggsModel& m) {
    std::map<int, StepSplit> adj;
    const long d = m.punctures();
    for (int k = 2; k <= m.r() - 1; ++k) {
        long rk = m.adjoint_rank(k), rp = m.adjoint_rank(k - 1), lb = m.adjoint_higgs_rank_lower_bound(k);
        long lo = std::max(0L, rk - rp), hi = rk - lb;
        if (lo > hi) return std::nullopt;
        long kr = rand_range(rng, lo, hi), cr = kr - (rk - rp);
        auto ker = random_degrees(rng, kr), coker = random_degrees(rng, cr);
        long ker_deg = 0, coker_deg = 0;
        for (long x : ker) ker_deg += x;
        for (long x : coker) coker_deg += x;
        long need = ker_deg + m.adjoint_split(k - 1)->degree() + rp * (d - 2) - m.adjoint_split(k)->degree();
        if (cr > 0) coker.back() += need - coker_deg;
        else if (kr > 0) ker.back() -= need;
        else if (need != 0) return std::nullopt;
        StepSplit s{SplitBundle(ker), SplitBundle(coker)};
        adj[k] = s;
        adj[1 - k] = mirror_step(s);
    }
    return GradedHiggsModel(m.pieces(), m.higgs_ranks(), {}, adj);
}

}  // namespace

TEST_CASE("adjoint pieces are antisymmetric") {
    std::mt19937_64 rng(108);
    for (int t = 0; t < kCases; ++t) {
        int d = static_cast<int>(rand_range(rng, 1, 4));
        auto m = random_model(rng, static_cast<int>(rand_range(rng, 2, 4)), d);
        auto pieces = adjoint_pieces(m);
        const int r = m.r();
        for (int k = 1; k <= r - 1; ++k) {
            const auto& up = pieces[r - 1 + k];
            const auto& down = pieces[r - 1 - k];
            CHECK(up.rank == down.rank);
            CHECK(up.par_deg == -down.par_deg);
            REQUIRE(up.split);
            REQUIRE(down.split);
            CHECK(down.split->degree() == -up.split->degree() - up.rank * d);
        }
        CHECK(pieces[r - 1].par_deg == 0);
    }
}

TEST_CASE("Hodge symmetry on models with full step data") {
    std::mt19937_64 rng(109);
    int built = 0;
    for (int t = 0; t < kCases; ++t) {
        auto m = random_model(rng, static_cast<int>(rand_range(rng, 3, 4)), static_cast<int>(rand_range(rng, 1, 4)));
        std::optional<GradedHiggsModel> full;
        try {
            full = with_full_adjoint(rng, m);
        } catch (const InputError& e) {
            FAIL_CHECK(e.what());
            continue;
        }
        if (!full) continue;
        ++built;
        for (const auto& [k, s] : full->adjoint()) {
            const auto& other = full->adjoint().at(1 - k);
            CHECK(hyper_h1_dim(s.ker, s.coker) == hyper_h1_dim(other.ker, other.coker));
        }
    }
    CHECK(built >= kCases / 2);
}

TEST_CASE("parabolic degree is additive") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < kCases; ++t) {
        int d = static_cast<int>(rand_range(rng, 0, 4));
        auto a = random_bundle(rng, static_cast<int>(rand_range(rng, 1, 3)), d, 12);
        auto b = random_bundle(rng, static_cast<int>(rand_range(rng, 1, 3)), d, 12);
        CHECK(par_deg(direct_sum(a, b)) == par_deg(a) + par_deg(b));
    }
}

TEST_CASE("Hom split matches the Hom parabolic degree") {
    std::mt19937_64 rng(102);
    int checked = 0;
    for (int t = 0; t < kCases; ++t) {
        int d = static_cast<int>(rand_range(rng, 0, 4));
        auto e = rng() % 2 ? random_line(rng, d, 10) : random_bundle(rng, 2, d, 10);
        auto f = rng() % 2 ? random_line(rng, d, 10) : random_bundle(rng, 2, d, 10);
        if (hom_split_regime(e, f).empty()) continue;
        ++checked;
        auto h = hom_split(e, f);
        CHECK(par_deg(h) == par_deg_hom(e, f));
        CHECK(h.rank() == e.rank() * f.rank());
        CHECK(par_deg_hom(e, f) == -par_deg_hom(f, e));
    }
    CHECK(checked >= kCases / 2);
}

TEST_CASE("parabolic degree bounds") {
    std::mt19937_64 rng(103);
    for (int t = 0; t < kCases; ++t) {
        int d = static_cast<int>(rand_range(rng, 0, 5));
        auto e = random_bundle(rng, static_cast<int>(rand_range(rng, 1, 4)), d, 9);
        CHECK(pardeg_bounds_check(e));
        CHECK(pardeg_bounds_check(direct_sum(e, e)));
    }
}

TEST_CASE("Riemann-Roch on the projective line") {
    std::mt19937_64 rng(104);
    for (int t = 0; t < kCases; ++t) {
        std::vector<long> degs(rand_range(rng, 1, 5));
        long total = 0, h0 = 0, h1 = 0;
        for (auto& a : degs) {
            a = rand_range(rng, -8, 8);
            total += a;
            h0 += sections(a);
            h1 += sections(-a - 2);
        }
        auto c = cohomology(SplitBundle(degs));
        CHECK(c.h0 == h0);
        CHECK(c.h1 == h1);
        CHECK(c.h0 - c.h1 == total + static_cast<long>(degs.size()));
    }
}

TEST_CASE("mirror data is an involution preserving the hypercohomology count") {
    std::mt19937_64 rng(105);
    for (int t = 0; t < kCases; ++t) {
        std::vector<long> k(rand_range(rng, 0, 3)), c(rand_range(rng, 0, 3));
        for (auto& x : k) x = rand_range(rng, -6, 6);
        for (auto& x : c) x = rand_range(rng, -6, 6);
        StepSplit s{SplitBundle(k), SplitBundle(c)};
        auto m = mirror_step(s);
        CHECK(mirror_step(m) == s);
        CHECK(hyper_h1_dim(m.ker, m.coker) == hyper_h1_dim(s.ker, s.coker));
    }
}

TEST_CASE("subset-sum genericity implies selection genericity") {
    std::mt19937_64 rng(106);
    int generic = 0;
    for (int t = 0; t < kCases; ++t) {
        int n = static_cast<int>(rand_range(rng, 2, 3)), d = static_cast<int>(rand_range(rng, 1, 3));
        long den = rand_range(rng, n + 1, 13);
        std::vector<std::vector<Rational>> vals(d);
        for (auto& v : vals) {
            std::vector<long> nums;
            while (static_cast<int>(nums.size()) < n) {
                long x = rand_range(rng, 0, den - 1);
                if (std::find(nums.begin(), nums.end(), x) == nums.end()) nums.push_back(x);
            }
            for (long x : nums) v.push_back(Rational(x, den));
        }
        auto w = WeightSystem::from_values(n, vals);
        if (!check_generic_subset_sum(w).generic) continue;
        ++generic;
        CHECK(check_generic_selection(w).generic);
    }
    CHECK(generic > 0);
}

TEST_CASE("modification preserves parabolic degree") {
    std::mt19937_64 rng(107);
    int built = 0;
    for (int t = 0; t < kCases; ++t) {
        auto e = random_bundle(rng, static_cast<int>(rand_range(rng, 1, 3)), static_cast<int>(rand_range(rng, 1, 4)), 11);
        try {
            auto m = modified_bundle(e);
            ++built;
            CHECK(m.par_deg_after == par_deg(e));
        } catch (const InputError&) {
        }
    }
    CHECK(built >= kCases / 4);
}
