#include "parhiggs/weights.hpp"

#include "parhiggs/error.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

namespace parhiggs {

WeightSystem::WeightSystem(int rank, std::vector<std::vector<WeightEntry>> punctures)
    : rank_(rank), punctures_(std::move(punctures)) {
    if (rank_ < 1) throw InputError("weight system rank must be positive");
    for (size_t j = 0; j < punctures_.size(); ++j) {
        const auto& ws = punctures_[j];
        int total = 0;
        for (size_t i = 0; i < ws.size(); ++i) {
            if (ws[i].value < 0 || ws[i].value >= 1)
                throw InputError("weight " + ws[i].value.str() + " outside [0,1) at puncture " +
                                 std::to_string(j));
            if (ws[i].multiplicity < 1) throw InputError("multiplicity must be positive");
            if (i > 0 && !(ws[i - 1].value < ws[i].value))
                throw InputError("weights must be strictly increasing at puncture " + std::to_string(j));
            total += ws[i].multiplicity;
        }
        if (total != rank_)
            throw InputError("multiplicities at puncture " + std::to_string(j) + " sum to " +
                             std::to_string(total) + ", expected rank " + std::to_string(rank_));
    }
}

WeightSystem WeightSystem::from_values(int rank, const std::vector<std::vector<Rational>>& values) {
    std::vector<std::vector<WeightEntry>> ps;
    for (const auto& vs : values) {
        std::map<Rational, int> counts;
        for (const auto& v : vs) ++counts[v];
        std::vector<WeightEntry> es;
        for (const auto& [v, m] : counts) es.push_back({v, m});
        ps.push_back(std::move(es));
    }
    return WeightSystem(rank, std::move(ps));
}

std::vector<Rational> WeightSystem::expanded(int j) const {
    std::vector<Rational> out;
    for (const auto& e : punctures_.at(j))
        for (int m = 0; m < e.multiplicity; ++m) out.push_back(e.value);
    return out;
}

bool check_distinct(const WeightSystem& w) {
    for (const auto& ws : w.punctures())
        if (static_cast<int>(ws.size()) != w.rank()) return false;
    return true;
}

namespace {

// Prime factors of a positive integer. Trial division to a fixed bound; a
// leftover cofactor is kept only if it is (probably) prime.
std::vector<mpz_class> prime_factors(mpz_class m) {
    std::vector<mpz_class> ps;
    for (unsigned long p = 2; p < 1000000 && m > 1; ++p) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ps.emplace_back(p);
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) m /= p;
        }
        if (mpz_class(p) * p > m) break;
    }
    if (m > 1 && mpz_probab_prime_p(m.get_mpz_t(), 30) > 0) ps.push_back(m);
    return ps;
}

long valuation(const mpz_class& m, const mpz_class& p) {
    long v = 0;
    mpz_class x = m;
    while (x != 0 && mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
        x /= p;
        ++v;
    }
    return v;
}

// An element whose p-adic valuation is negative and strictly below that of
// every other candidate cannot lie in a subset with integral sum.
std::vector<size_t> valuation_prefilter(const std::vector<Rational>& xs) {
    std::vector<size_t> pool(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) pool[i] = i;
    std::set<mpz_class> primes;
    for (const auto& x : xs)
        for (const auto& p : prime_factors(x.den())) primes.insert(p);

    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& p : primes) {
            long best = 0;
            int count = 0;
            size_t who = 0;
            for (size_t idx : pool) {
                long v = -valuation(xs[idx].den(), p);
                if (xs[idx].num() == 0) continue;
                if (v < best) {
                    best = v;
                    count = 1;
                    who = idx;
                } else if (v == best && v < 0) {
                    ++count;
                }
            }
            if (count == 1) {
                pool.erase(std::find(pool.begin(), pool.end(), who));
                changed = true;
            }
        }
    }
    return pool;
}

std::vector<Rational> half_sums(const std::vector<Rational>& xs) {
    size_t n = xs.size();
    std::vector<Rational> s(size_t{1} << n);
    for (size_t mask = 1; mask < s.size(); ++mask) {
        size_t low = static_cast<size_t>(__builtin_ctzll(mask));
        s[mask] = (s[mask & (mask - 1)] + xs[low]).frac();
    }
    return s;
}

}  // namespace

SubsetSumResult check_generic_subset_sum(const WeightSystem& w) {
    std::vector<Rational> xs;
    std::vector<int> where;
    for (int j = 0; j < w.puncture_count(); ++j)
        for (const auto& v : w.expanded(j)) {
            xs.push_back(v);
            where.push_back(j);
        }
    const size_t total = xs.size();
    std::vector<size_t> pool = valuation_prefilter(xs);
    if (pool.size() > 40)
        throw InputError("subset-sum search limited to 40 undecided weights, got " +
                         std::to_string(pool.size()));

    size_t h = pool.size() / 2;
    std::vector<Rational> a, b;
    for (size_t i = 0; i < pool.size(); ++i) (i < h ? a : b).push_back(xs[pool[i]]);
    std::vector<Rational> sa = half_sums(a);
    std::map<Rational, std::vector<uint64_t>> index;
    for (uint64_t m = 0; m < sa.size(); ++m) {
        auto& slot = index[sa[m]];
        if (slot.size() < 2) slot.push_back(m);
    }
    std::vector<Rational> sb = half_sums(b);
    const bool pool_is_all = pool.size() == total;
    const uint64_t full = pool.size() == 64 ? ~uint64_t{0} : (uint64_t{1} << pool.size()) - 1;
    for (uint64_t mb = 0; mb < sb.size(); ++mb) {
        Rational need = (Rational(0) - sb[mb]).frac();
        auto it = index.find(need);
        if (it == index.end()) continue;
        for (uint64_t ma : it->second) {
            uint64_t combined = ma | (mb << h);
            if (combined == 0 || (pool_is_all && combined == full)) continue;
            SubsetSumResult r;
            r.generic = false;
            for (size_t i = 0; i < pool.size(); ++i)
                if (combined >> i & 1) {
                    r.witness.push_back({where[pool[i]], xs[pool[i]]});
                    r.witness_sum += xs[pool[i]];
                }
            return r;
        }
    }
    return {};
}

namespace {

void combinations(const std::vector<Rational>& vs, int r, size_t start, std::vector<Rational>& cur,
                  std::vector<std::vector<Rational>>& out) {
    if (static_cast<int>(cur.size()) == r) {
        out.push_back(cur);
        return;
    }
    for (size_t i = start; i < vs.size(); ++i) {
        cur.push_back(vs[i]);
        combinations(vs, r, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

SelectionResult check_generic_selection(const WeightSystem& w) {
    if (!check_distinct(w)) throw InputError("selection criterion requires distinct weights");
    using Choice = std::vector<std::vector<Rational>>;
    for (int r = 1; r < w.rank(); ++r) {
        std::map<Rational, Choice> states{{Rational(0), {}}};
        for (int j = 0; j < w.puncture_count(); ++j) {
            std::vector<std::vector<Rational>> combos;
            std::vector<Rational> cur;
            combinations(w.expanded(j), r, 0, cur, combos);
            std::map<Rational, Choice> next;
            for (const auto& [s, choice] : states)
                for (const auto& c : combos) {
                    Rational t = s;
                    for (const auto& v : c) t += v;
                    t = t.frac();
                    Choice ext = choice;
                    ext.push_back(c);
                    auto it = next.find(t);
                    if (it == next.end())
                        next.emplace(t, std::move(ext));
                    else if (ext < it->second)
                        it->second = std::move(ext);
                }
            states = std::move(next);
        }
        auto it = states.find(Rational(0));
        if (it != states.end()) {
            SelectionResult res;
            res.generic = false;
            res.witness_rank = r;
            res.witness = it->second;
            for (const auto& c : res.witness)
                for (const auto& v : c) res.witness_sum += v;
            return res;
        }
    }
    return {};
}

SUnClass::SUnClass(std::vector<Rational> theta) : theta_(std::move(theta)) {
    if (theta_.empty()) throw InputError("conjugacy class needs at least one eigenvalue");
    Rational sum;
    for (size_t i = 0; i < theta_.size(); ++i) {
        sum += theta_[i];
        if (i > 0 && theta_[i] > theta_[i - 1])
            throw InputError("class values must be non-increasing");
    }
    if (sum != 0) throw InputError("class values must sum to zero, got " + sum.str());
    if (theta_.back() < theta_.front() - 1)
        throw InputError("class values must satisfy theta_n >= theta_1 - 1");
}

Rational SUnClass::lambda(const std::vector<int>& subset) const {
    Rational s;
    for (int i : subset) {
        if (i < 1 || i > n()) throw InputError("index " + std::to_string(i) + " out of range");
        s += theta_[i - 1];
    }
    return s;
}

std::vector<WeightEntry> class_to_weights(const SUnClass& c) {
    std::map<Rational, int> counts;
    for (const auto& t : c.theta()) ++counts[t.frac()];
    std::vector<WeightEntry> out;
    for (const auto& [v, m] : counts) out.push_back({v, m});
    return out;
}

}  // namespace parhiggs
