#include "parhiggs/parabolic.hpp"

#include "parhiggs/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace parhiggs {

std::string to_string(FlagMode m) { return m == FlagMode::adapted ? "adapted" : "generic"; }

FlagMode flag_mode_from_string(const std::string& s) {
    if (s == "adapted") return FlagMode::adapted;
    if (s == "generic") return FlagMode::generic;
    throw InputError("flag_mode must be \"adapted\" or \"generic\", got \"" + s + "\"");
}

SplitBundle::SplitBundle(std::vector<long> degrees) : degrees_(std::move(degrees)) {
    std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

long SplitBundle::degree() const { return std::accumulate(degrees_.begin(), degrees_.end(), 0L); }

SplitParabolicBundle::SplitParabolicBundle(int punctures, std::vector<LineSummand> summands,
                                           FlagMode mode)
    : punctures_(punctures), summands_(std::move(summands)), mode_(mode) {
    if (punctures_ < 0) throw InputError("puncture count must be non-negative");
    if (summands_.empty()) throw InputError("bundle needs at least one summand");
    for (size_t i = 0; i < summands_.size(); ++i) {
        const auto& s = summands_[i];
        if (static_cast<int>(s.weights.size()) != punctures_)
            throw InputError("summand " + std::to_string(i) + " has " +
                             std::to_string(s.weights.size()) + " weights, expected " +
                             std::to_string(punctures_));
        for (const auto& w : s.weights)
            if (w < 0 || w >= 1)
                throw InputError("weight " + w.str() + " outside [0,1) on summand " + std::to_string(i));
    }
}

long SplitParabolicBundle::degree() const {
    long d = 0;
    for (const auto& s : summands_) d += s.degree;
    return d;
}

WeightSystem SplitParabolicBundle::weight_system() const {
    std::vector<std::vector<Rational>> vals(punctures_);
    for (const auto& s : summands_)
        for (int j = 0; j < punctures_; ++j) vals[j].push_back(s.weights[j]);
    return WeightSystem::from_values(rank(), vals);
}

SplitBundle SplitParabolicBundle::underlying() const {
    std::vector<long> ds;
    for (const auto& s : summands_) ds.push_back(s.degree);
    return SplitBundle(ds);
}

SplitParabolicBundle direct_sum(const SplitParabolicBundle& a, const SplitParabolicBundle& b) {
    if (a.punctures() != b.punctures()) throw InputError("direct sum of bundles with different punctures");
    auto ss = a.summands();
    ss.insert(ss.end(), b.summands().begin(), b.summands().end());
    FlagMode m = (a.flag_mode() == FlagMode::adapted && b.flag_mode() == FlagMode::adapted)
                     ? FlagMode::adapted
                     : FlagMode::generic;
    return SplitParabolicBundle(a.punctures(), std::move(ss), m);
}

Rational par_deg(const SplitParabolicBundle& e) {
    Rational p(e.degree());
    for (const auto& s : e.summands())
        for (const auto& w : s.weights) p += w;
    return p;
}

Rational par_slope(const SplitParabolicBundle& e) { return par_deg(e) / Rational(e.rank()); }

Rational par_deg_hom(const SplitParabolicBundle& e, const SplitParabolicBundle& f) {
    if (e.punctures() != f.punctures()) throw InputError("Hom between bundles with different punctures");
    return Rational(e.rank()) * par_deg(f) - Rational(f.rank()) * par_deg(e);
}

namespace {

bool adapted_like(const SplitParabolicBundle& b) {
    return b.flag_mode() == FlagMode::adapted || b.rank() == 1;
}

bool separated(const SplitParabolicBundle& e, const SplitParabolicBundle& f) {
    for (int j = 0; j < e.punctures(); ++j) {
        Rational emin = e.summands()[0].weights[j], emax = emin;
        for (const auto& s : e.summands()) {
            emin = min(emin, s.weights[j]);
            emax = max(emax, s.weights[j]);
        }
        Rational fmin = f.summands()[0].weights[j], fmax = fmin;
        for (const auto& s : f.summands()) {
            fmin = min(fmin, s.weights[j]);
            fmax = max(fmax, s.weights[j]);
        }
        if (!(emax < fmin) && !(fmax < emin)) return false;
    }
    return true;
}

}  // namespace

std::string hom_split_regime(const SplitParabolicBundle& e, const SplitParabolicBundle& f) {
    if (e.punctures() != f.punctures()) return {};
    if (adapted_like(e) && adapted_like(f)) return "adapted";
    if (separated(e, f)) return "separated";
    return {};
}

SplitParabolicBundle hom_split(const SplitParabolicBundle& e, const SplitParabolicBundle& f) {
    std::string regime = hom_split_regime(e, f);
    if (regime.empty())
        throw InputError(
            "Hom is not determined by summand data: need adapted flags on both sides or weights "
            "separated at every puncture");
    std::vector<LineSummand> out;
    for (const auto& es : e.summands())
        for (const auto& fs : f.summands()) {
            LineSummand h;
            h.degree = fs.degree - es.degree;
            for (int j = 0; j < e.punctures(); ++j) {
                if (es.weights[j] > fs.weights[j]) --h.degree;
                h.weights.push_back((fs.weights[j] - es.weights[j]).frac());
            }
            out.push_back(std::move(h));
        }
    // Within a block of equal Hom weights the induced flag is again generic
    // only if it was on an input; coordinate flags pull back to coordinate flags.
    return SplitParabolicBundle(e.punctures(), std::move(out),
                                regime == "adapted" ? FlagMode::adapted : FlagMode::generic);
}

SplitParabolicBundle twist_log(const SplitParabolicBundle& e, int d) {
    auto ss = e.summands();
    for (auto& s : ss) s.degree += d - 2;
    return SplitParabolicBundle(e.punctures(), std::move(ss), e.flag_mode());
}

SplitBundle twist_log(const SplitBundle& b, int d) {
    auto ds = b.degrees();
    for (auto& x : ds) x += d - 2;
    return SplitBundle(ds);
}

Cohomology cohomology(const SplitBundle& b) {
    Cohomology c;
    for (long a : b.degrees()) {
        c.h0 += std::max(a + 1, 0L);
        c.h1 += std::max(-a - 1, 0L);
    }
    return c;
}

bool pardeg_bounds_check(const SplitParabolicBundle& e) {
    Rational pd = par_deg(e);
    Rational deg(e.degree());
    if (e.punctures() == 0) return pd == deg;
    return deg <= pd && pd < deg + Rational(long(e.rank()) * e.punctures());
}

}  // namespace parhiggs
