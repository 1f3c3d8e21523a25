#include "parhiggs/higgs.hpp"

#include "parhiggs/error.hpp"

#include <algorithm>

namespace parhiggs {

namespace {

std::string kstr(int k) { return std::to_string(k); }

}  // namespace

GradedHiggsModel::GradedHiggsModel(std::vector<SplitParabolicBundle> pieces, std::vector<long> higgs_ranks,
                                   std::vector<std::optional<StepSplit>> steps,
                                   std::map<int, StepSplit> adjoint)
    : pieces_(std::move(pieces)),
      higgs_rank_(std::move(higgs_ranks)),
      steps_(std::move(steps)),
      adjoint_(std::move(adjoint)) {
    if (pieces_.empty()) throw InputError("model needs at least one graded piece");
    const int d = pieces_.front().punctures();
    for (const auto& p : pieces_)
        if (p.punctures() != d) throw InputError("graded pieces have different puncture counts");
    const int rr = r();
    if (static_cast<int>(higgs_rank_.size()) != rr - 1)
        throw InputError("expected " + std::to_string(rr - 1) + " Higgs ranks, got " +
                         std::to_string(higgs_rank_.size()));
    for (int p = rr; p >= 2; --p) {
        long h = higgs_rank(p);
        long cap = std::min(piece(p).rank(), piece(p - 1).rank());
        if (h < 1 || h > cap)
            throw InputError("Higgs rank of step " + std::to_string(p) + " must lie in [1, " +
                             std::to_string(cap) + "]");
    }
    if (!steps_.empty() && static_cast<int>(steps_.size()) != rr - 1)
        throw InputError("step data must list one entry per step");
    for (int p = rr; p >= 2 && !steps_.empty(); --p) {
        const auto& s = steps_[rr - p];
        if (!s) continue;
        if (s->ker.rank() != piece(p).rank() - higgs_rank(p))
            throw InputError("ker rank of step " + std::to_string(p) + " disagrees with Higgs rank");
        if (s->coker.rank() != piece(p - 1).rank() - higgs_rank(p))
            throw InputError("coker rank of step " + std::to_string(p) + " disagrees with Higgs rank");
    }
    validate_adjoint();
}

const SplitParabolicBundle& GradedHiggsModel::piece(int p) const {
    if (p < 1 || p > r()) throw InputError("graded piece index out of range");
    return pieces_[r() - p];
}

long GradedHiggsModel::higgs_rank(int p) const {
    if (p < 2 || p > r()) throw InputError("Higgs step index out of range");
    return higgs_rank_[r() - p];
}

SplitParabolicBundle GradedHiggsModel::total() const {
    SplitParabolicBundle t = pieces_.front();
    for (size_t i = 1; i < pieces_.size(); ++i) t = direct_sum(t, pieces_[i]);
    return t;
}

long GradedHiggsModel::total_rank() const {
    long n = 0;
    for (const auto& p : pieces_) n += p.rank();
    return n;
}

long GradedHiggsModel::adjoint_rank(int k) const {
    long s = 0;
    for (int p = 1; p <= r(); ++p)
        if (p + k >= 1 && p + k <= r()) s += long(piece(p).rank()) * piece(p + k).rank();
    return s;
}

std::optional<SplitParabolicBundle> GradedHiggsModel::adjoint_split(int k) const {
    std::optional<SplitParabolicBundle> acc;
    for (int p = 1; p <= r(); ++p) {
        if (p + k < 1 || p + k > r()) continue;
        const auto& e = piece(p);
        const auto& f = piece(p + k);
        if (hom_split_regime(e, f).empty()) return std::nullopt;
        auto h = hom_split(e, f);
        acc = acc ? direct_sum(*acc, h) : h;
    }
    return acc;
}

long GradedHiggsModel::adjoint_higgs_rank_lower_bound(int k) const {
    long s = 0;
    for (int j = 1; j + k <= r(); ++j) s += long(piece(j).rank()) * higgs_rank(j + k);
    return s;
}

void GradedHiggsModel::validate_adjoint() const {
    const int rr = r();
    for (const auto& [k, s] : adjoint_) {
        if (rr < 2 || k < 2 - rr || k > rr - 1 || k == 1)
            throw InputError("adjoint step k=" + kstr(k) + " outside [2-r, r-1] \\ {1}");
        long rk = adjoint_rank(k), rp = adjoint_rank(k - 1);
        if (s.ker.rank() > rk || s.coker.rank() > rp)
            throw InputError("adjoint step k=" + kstr(k) + ": ker/coker rank exceeds rank of V^k / V^{k-1}");
        if (s.ker.rank() - s.coker.rank() != rk - rp)
            throw InputError("adjoint step k=" + kstr(k) + ": rank ker - rank coker must equal " +
                             std::to_string(rk - rp));
        if (k >= 2 && rk - s.ker.rank() < adjoint_higgs_rank_lower_bound(k))
            throw InputError("adjoint step k=" + kstr(k) + ": Higgs rank below block lower bound " +
                             std::to_string(adjoint_higgs_rank_lower_bound(k)));
        auto vk = adjoint_split(k), vp = adjoint_split(k - 1);
        if (vk && vp) {
            long lhs = s.ker.degree() + vp->degree() + rp * (punctures() - 2);
            long rhs = vk->degree() + s.coker.degree();
            if (lhs != rhs)
                throw InputError("adjoint step k=" + kstr(k) +
                                 ": degrees violate deg ker + deg V^{k-1}(Ω) = deg V^k + deg coker");
        }
        auto mirror = adjoint_.find(1 - k);
        if (mirror != adjoint_.end() &&
            hyper_h1_dim(s.ker, s.coker) != hyper_h1_dim(mirror->second.ker, mirror->second.coker))
            throw InputError("adjoint steps k=" + kstr(k) + " and k=" + kstr(1 - k) +
                             " violate Hodge symmetry");
    }
}

std::vector<AdjointPiece> adjoint_pieces(const GradedHiggsModel& m) {
    std::vector<AdjointPiece> out;
    for (int k = 1 - m.r(); k <= m.r() - 1; ++k) {
        AdjointPiece a;
        a.k = k;
        a.rank = m.adjoint_rank(k);
        for (int p = 1; p <= m.r(); ++p)
            if (p + k >= 1 && p + k <= m.r()) a.par_deg += par_deg_hom(m.piece(p), m.piece(p + k));
        a.split = m.adjoint_split(k);
        out.push_back(std::move(a));
    }
    return out;
}

StepSplit mirror_step(const StepSplit& s) {
    std::vector<long> ker, coker;
    for (long b : s.coker.degrees()) ker.push_back(-b - 2);
    for (long a : s.ker.degrees()) coker.push_back(-a - 2);
    return {SplitBundle(ker), SplitBundle(coker)};
}

long hyper_h1_dim(const SplitBundle& ker, const SplitBundle& coker) {
    return cohomology(ker).h1 + cohomology(coker).h0;
}

BoundReport make_bound(std::string name, Rational lhs, std::string relation, Rational rhs,
                       std::vector<ChainEntry> chain) {
    BoundReport b;
    b.name = std::move(name);
    b.lhs = std::move(lhs);
    b.rhs = std::move(rhs);
    b.relation = std::move(relation);
    b.chain = std::move(chain);
    if (b.relation == "<=") b.holds = b.lhs <= b.rhs;
    else if (b.relation == "<") b.holds = b.lhs < b.rhs;
    else if (b.relation == ">=") b.holds = b.lhs >= b.rhs;
    else if (b.relation == ">") b.holds = b.lhs > b.rhs;
    else if (b.relation == "==") b.holds = b.lhs == b.rhs;
    else throw InputError("unknown relation " + b.relation);
    return b;
}

MinimalEnergyReport minimal_energy_check(const GradedHiggsModel& m) {
    MinimalEnergyReport rep;
    const int r = m.r();
    if (r == 1) {
        rep.minimal_energy = true;
        rep.reason = "single graded piece: the Higgs field vanishes";
        return rep;
    }
    const auto& top = m.piece(r);
    const auto& bottom = m.piece(1);
    if (hom_split_regime(top, bottom).empty())
        throw InputError("Hom(E^r, E^1) is not computable from summand data", "/pieces");
    rep.top_hom = hom_split(top, bottom);
    rep.top_cohomology = cohomology(rep.top_hom->underlying());
    rep.minimal_energy = rep.top_cohomology.h1 == 0;
    if (!rep.minimal_energy) rep.reason = "H^1 of Hom(E^r, E^1) is nonzero";

    if (r > 2) {
        for (int k = 2; k <= r - 1; ++k) {
            auto it = m.adjoint().find(k);
            if (it == m.adjoint().end())
                throw InputError("missing ker/coker data for adjoint step k=" + kstr(k), "/adjoint_steps");
            long dim = hyper_h1_dim(it->second.ker, it->second.coker);
            rep.interior.push_back({k, dim});
            if (dim != 0 && rep.minimal_energy) {
                rep.minimal_energy = false;
                rep.reason = "hypercohomology of adjoint step k=" + kstr(k) + " is nonzero";
            }
        }
        if (auto v = m.adjoint_split(r - 1))
            rep.top_degree = make_bound("deg V^{r-1} = rank V^{r-1} (1 - d)", Rational(v->degree()), "==",
                                        Rational(long(v->rank()) * (1 - m.punctures())));
    }
    if (rep.minimal_energy) rep.reason = "Hodge length 1";
    return rep;
}

std::vector<BoundReport> coker_degree_bounds(const GradedHiggsModel& m) {
    std::vector<BoundReport> out;
    for (int k = 2; k <= m.r() - 1; ++k) {
        auto it = m.adjoint().find(k);
        if (it == m.adjoint().end())
            throw InputError("missing ker/coker data for adjoint step k=" + kstr(k), "/adjoint_steps");
        const auto& s = it->second;
        out.push_back(make_bound("deg coker θ_" + kstr(k) + " <= -rank coker", Rational(s.coker.degree()),
                                 "<=", Rational(-s.coker.rank())));
        out.push_back(make_bound("deg ker θ_" + kstr(k) + " >= -rank ker", Rational(s.ker.degree()), ">=",
                                 Rational(-s.ker.rank())));
    }
    return out;
}

BoundReport rank_defect_bound(long rank_prev, long rank_coker, int r, int k) {
    return make_bound("rank V^" + kstr(k - 1) + " - rank coker θ_" + kstr(k) + " >= r - k",
                      Rational(rank_prev - rank_coker), ">=", Rational(long(r - k)),
                      {{"rank V^{k-1}", Rational(rank_prev)}, {"rank coker", Rational(rank_coker)}});
}

std::vector<BoundReport> rank_defect_bound(const GradedHiggsModel& m) {
    if (m.r() < 3) throw InputError("rank defect bound needs at least three graded pieces");
    std::vector<BoundReport> out;
    for (int k = 2; k <= m.r() - 1; ++k) {
        long prev = m.adjoint_rank(k - 1);
        auto it = m.adjoint().find(k);
        long coker = it != m.adjoint().end() ? it->second.coker.rank()
                                             : prev - m.adjoint_higgs_rank_lower_bound(k);
        out.push_back(rank_defect_bound(prev, coker, m.r(), k));
    }
    return out;
}

BoundReport main_bound(const std::vector<long>& v, const std::vector<long>& coker, int r, long d) {
    if (r < 3) throw InputError("main bound needs r >= 3");
    if (static_cast<int>(v.size()) != r - 1 || static_cast<int>(coker.size()) != r - 2)
        throw InputError("main bound expects r-1 adjoint ranks and r-2 cokernel ranks");
    auto V = [&](int k) { return v[k - 1]; };
    long num = 2 * V(r - 1) - V(1);
    long den = 0;
    for (int k = 2; k <= r - 1; ++k) {
        num += 2 * V(k - 1) + (2 * k - 3) * V(k);
        den += V(k - 1) - coker[k - 2] + (k - 2) * V(k);
    }
    if (den <= 0) throw InputError("main bound denominator is not positive");
    Rational bound = Rational(num) / Rational(den);
    return make_bound("deg D <= main bound", Rational(d), "<=", bound,
                      {{"numerator", Rational(num)}, {"denominator", Rational(den)}, {"bound", bound}});
}

BoundReport main_bound_at_slack(const std::vector<long>& v, int r, long d) {
    if (static_cast<int>(v.size()) != r - 1) throw InputError("main bound expects r-1 adjoint ranks");
    std::vector<long> coker;
    for (int k = 2; k <= r - 1; ++k) coker.push_back(v[k - 2] - (r - k));
    return main_bound(v, coker, r, d);
}

TheoremChain theorem_bound(int n, int r) {
    if (r < 3 || n < r) throw InputError("theorem bound needs 3 <= r <= n");
    TheoremChain t;
    t.n = n;
    t.r = r;
    Rational R(long(n) * n - 2 * r - 1);
    Rational coef(long(r) * r - 5 * r + 7);
    Rational pairs = Rational(long(r - 1) * (r - 2)) / Rational(2);
    t.first_link = Rational(2) * coef * R / pairs;
    t.links.push_back(make_bound("r^2-5r+7 < (r-1)(r-2)", coef, "<", Rational(long(r - 1) * (r - 2))));
    t.links.push_back(make_bound("first link < 4(n^2-2r-1)", t.first_link, "<", Rational(4) * R));
    t.links.push_back(make_bound("4(n^2-2r-1) <= 4n^2-28", Rational(4) * R, "<=", Rational(4L * n * n - 28)));
    t.holds = std::all_of(t.links.begin(), t.links.end(), [](const BoundReport& b) { return b.holds; });
    return t;
}

V1Bound pardeg_V1_lower_bound(const std::vector<long>& ranks, int r, long d) {
    if (r < 3) throw InputError("V^1 bound needs r >= 3");
    if (static_cast<int>(ranks.size()) != r - 2) throw InputError("V^1 bound expects ranks of V^2..V^{r-1}");
    long a = 0, b = 0;
    for (int k = 2; k <= r - 1; ++k) {
        a += (k - 2) * ranks[k - 2];
        b += (k - 1) * ranks[k - 2];
    }
    return {Rational((d - 1) * a - b), ranks.back() * (1 - d)};
}

GenusVerdict positive_genus_obstruction(int g, const Rational& hom_par_deg, long hom_deg, long hom_rank) {
    if (g < 0) throw InputError("genus must be non-negative");
    if (hom_rank < 1) throw InputError("Hom rank must be positive");
    if (g == 0) return {false, "genus zero is exempt"};
    Rational lhs(1L - g);
    if (lhs < -hom_par_deg / Rational(hom_rank))
        return {true, "1 - g < -par_slope(Hom(E^r, E^1)): the Higgs field vanishes"};
    if (hom_par_deg == 0)
        return {true, "boundary case: par_deg 0 with distinct weights forces E^r = E^1"};
    if (lhs * Rational(hom_rank) + Rational(hom_deg) < 0)
        return {true, "Riemann-Roch: H^1(Hom(E^r, E^1)) cannot vanish"};
    return {false, "no numerical obstruction"};
}

long centralizer_dim(const std::vector<long>& mult) {
    long s = 0;
    for (long m : mult) {
        if (m < 1) throw InputError("multiplicities must be positive");
        s += m * m;
    }
    return s;
}

long katz_lhs(long n, const std::vector<long>& dims) {
    long s = (2 - long(dims.size())) * n * n;
    for (long x : dims) s += x;
    return s;
}

bool katz_rigidity(long n, const std::vector<long>& dims) {
    if (n < 1) throw InputError("rank must be positive");
    for (long x : dims)
        if (x < 1) throw InputError("centralizer dimensions must be positive");
    return katz_lhs(n, dims) == 2;
}

}  // namespace parhiggs
