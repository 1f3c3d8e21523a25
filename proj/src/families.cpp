#include "parhiggs/families.hpp"

#include "parhiggs/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

namespace parhiggs {

namespace {

Rational q_of(int n, long a) { return Rational(1 + a) / Rational(1 + n * a); }

Rational base_weight(int n, long a, const Rational& eps) {
    return (Rational(1) - q_of(n, a) + eps) / Rational(n - 1);
}

}  // namespace

bool lemma_6_1_check(int n, long a, const Rational& eps) {
    if (n < 2 || a < 0 || eps <= 0) throw InputError("weight inequality needs n >= 2, a >= 0, eps > 0");
    Rational q = q_of(n, a);
    return (Rational(1) - q - eps) / Rational(n - 1) < q - eps;
}

std::vector<Rational> default_eps_vec(int n) {
    std::vector<Rational> v;
    for (int i = 0; i < n - 1; ++i) v.push_back(Rational(2L * i - (n - 2), 1000000));
    return v;
}

void validate(const Example62Params& p) {
    if (p.n < 2) throw InputError("rank-n family needs n >= 2", "/n");
    if (p.a < 0) throw InputError("rank-n family needs a >= 0", "/a");
    if (p.eps <= 0) throw InputError("eps must be positive", "/eps");
    if (static_cast<int>(p.eps_vec.size()) != p.n - 1)
        throw InputError("eps_vec must have n-1 entries", "/eps_vec");
    Rational sum;
    for (size_t i = 0; i < p.eps_vec.size(); ++i) {
        sum += p.eps_vec[i];
        if (i > 0 && !(p.eps_vec[i - 1] < p.eps_vec[i]))
            throw InputError("eps_vec must be strictly increasing", "/eps_vec");
    }
    if (sum != 0) throw InputError("eps_vec must sum to zero", "/eps_vec");
    if (!lemma_6_1_check(p.n, p.a, p.eps)) throw InputError("weight inequality fails for these parameters", "/eps");
    Rational base = base_weight(p.n, p.a, p.eps);
    Rational top = q_of(p.n, p.a) - p.eps;
    if (!(base + p.eps_vec.front() > 0) || !(base + p.eps_vec.back() < top) || !(top < 1))
        throw InputError("weights at each puncture are not strictly increasing in (0,1)", "/eps");
}

Example62Params suggest_example62_params(int n, long a) {
    if (n < 2 || a < 0) throw InputError("rank-n family needs n >= 2, a >= 0");
    Example62Params p;
    p.n = n;
    p.a = a;
    p.eps_vec = default_eps_vec(n);
    Rational q = q_of(n, a);
    Rational slack = (Rational(n) * q - 1) / Rational(n - 1);
    // ordering: (1 - q + eps)/(n-1) + eps_max < q - eps
    Rational order = (slack - p.eps_vec.back()) * Rational(n - 1) / Rational(n);
    Rational cap = order;
    if (n > 2) cap = min(cap, (Rational(n) * q - 1) / Rational(n - 2));
    p.eps = min(Rational(1, 100), cap / Rational(2));
    validate(p);
    return p;
}

Example62 build_example_62(const Example62Params& p) {
    validate(p);
    const long d = 1 + p.n * p.a;
    if (d > 1000000) throw InputError("puncture count too large");
    const int di = static_cast<int>(d);
    Rational base = base_weight(p.n, p.a, p.eps);
    std::vector<LineSummand> s;
    for (const auto& e : p.eps_vec) s.push_back({-p.a, std::vector<Rational>(di, base + e)});
    SplitParabolicBundle S(di, s, FlagMode::generic);
    SplitParabolicBundle Q(di, {{-p.a - 1, std::vector<Rational>(di, q_of(p.n, p.a) - p.eps)}});
    GradedHiggsModel m({S, Q}, {1});
    WeightSystem w = m.total().weight_system();
    return {p, d, std::move(m), std::move(w)};
}

Rational max_subbundle_pardeg(const SplitParabolicBundle& e, int r) {
    if (r < 1 || r > e.rank()) throw InputError("subbundle rank out of range");
    std::vector<long> degs;
    for (const auto& s : e.summands()) degs.push_back(s.degree);
    std::sort(degs.begin(), degs.end(), std::greater<>());
    Rational b;
    for (int i = 0; i < r; ++i) b += Rational(degs[i]);
    for (int j = 0; j < e.punctures(); ++j) {
        std::vector<Rational> ws;
        for (const auto& s : e.summands()) ws.push_back(s.weights[j]);
        std::sort(ws.begin(), ws.end(), std::greater<>());
        for (int i = 0; i < r; ++i) b += ws[i];
    }
    return b;
}

Rational max_line_subbundle_pardeg_generic(const SplitParabolicBundle& e) {
    if (e.flag_mode() != FlagMode::generic) throw InputError("general-position bound needs generic flags");
    long top = e.summands()[0].degree;
    for (const auto& s : e.summands()) top = std::max(top, s.degree);
    const long n = e.rank();
    const int d = e.punctures();

    std::optional<Rational> result;
    // A line of degree top - delta is a section of E(delta - top); the
    // sections span a space of dimension `dim` whose values fill the fibers
    // of the k summands of degree >= top - delta. Lying in a flag member of
    // dimension f costs min(k, n - f) linear conditions; beyond delta = d the
    // weights cannot pay for the lost degree.
    for (long delta = 0; delta <= d; ++delta) {
        long dim = 0, k = 0;
        for (const auto& s : e.summands()) {
            long c = delta - (top - s.degree) + 1;
            if (c > 0) {
                dim += c;
                ++k;
            }
        }
        std::map<long, Rational> best{{0, Rational(0)}};
        for (int j = 0; j < d; ++j) {
            std::vector<Rational> ws;
            for (const auto& s : e.summands()) ws.push_back(s.weights[j]);
            std::sort(ws.begin(), ws.end());
            std::vector<std::pair<long, Rational>> options;
            for (size_t i = 0; i < ws.size(); ++i) {
                if (i > 0 && ws[i] == ws[i - 1]) continue;
                long f = static_cast<long>(ws.size() - i);  // dimension of the flag member with weight ws[i]
                if (f - (n - k) < 1) continue;
                options.push_back({std::min(k, n - f), ws[i]});
            }
            std::map<long, Rational> next;
            for (const auto& [c, v] : best)
                for (const auto& [oc, ov] : options) {
                    long nc = c + oc;
                    if (nc > dim - 1) continue;
                    auto it = next.find(nc);
                    if (it == next.end() || it->second < v + ov) next[nc] = v + ov;
                }
            best = std::move(next);
        }
        for (const auto& [c, v] : best) {
            Rational cand = Rational(top - delta) + v;
            if (!result || *result < cand) result = cand;
        }
    }
    return *result;
}

Rational general_line_pardeg(const SplitParabolicBundle& e) {
    long top = e.summands()[0].degree;
    for (const auto& s : e.summands()) top = std::max(top, s.degree);
    Rational v(top);
    for (int j = 0; j < e.punctures(); ++j) {
        Rational lo = e.summands()[0].weights[j];
        for (const auto& s : e.summands()) lo = min(lo, s.weights[j]);
        v += lo;
    }
    return v;
}

namespace {

void finish(StabilityCertificate& c, bool higgs_nonzero) {
    c.stable = higgs_nonzero;
    for (const auto& e : c.entries)
        if (!(e.value < 0)) c.stable = false;
}

}  // namespace

ExampleCertificate certify_example_62(const Example62& ex) {
    const auto& p = ex.params;
    const auto& S = ex.model.piece(2);
    const auto& Q = ex.model.piece(1);
    const Rational d(ex.d);
    const int n = p.n;
    ExampleCertificate out;
    out.total_par_deg = par_deg(ex.model.total());
    out.distinct = check_distinct(ex.weights);

    auto hom = hom_split(S, Q);
    out.hom_underlying = hom.underlying();
    out.higgs_field_nonzero = cohomology(twist_log(out.hom_underlying, static_cast<int>(ex.d))).h0 > 0;
    out.minimal_energy = minimal_energy_check(ex.model);

    Rational pS = par_deg(S), pQ = par_deg(Q);
    out.values = {{"d", d}, {"par_deg S", pS}, {"par_deg Q", pQ}, {"par_deg E", out.total_par_deg}};
    out.formulas_agree = pS == p.eps * d && pQ == -p.eps * d;

    auto& cert = out.stability;
    Rational slope_q = par_slope(Q);
    out.formulas_agree = out.formulas_agree && slope_q == -d * p.eps;
    cert.entries.push_back({"Q", slope_q, "exact", {{"closed form -(1+na) eps", -d * p.eps}}});

    if (!out.higgs_field_nonzero) {
        cert.notes.push_back("H^0(Hom(S,Q) ⊗ Ω(log D)) = 0: the Higgs field vanishes and S is invariant");
        cert.entries.push_back({"S (θ = 0)", pS, "exact", {}});
    } else if (n >= 3) {
        Rational k = pS - (pQ + d - 2);
        Rational closed = Rational(2) * p.eps * d - d + 2;
        out.formulas_agree = out.formulas_agree && k == closed;
        cert.entries.push_back({"ker θ", k, "exact", {{"closed form 2 eps d - d + 2", closed}}});
    } else {
        cert.notes.push_back("n = 2: θ is injective, ker θ = 0");
    }

    for (int rk = 0; rk < n - 1; ++rk) {
        Rational v = (rk == 0 ? Rational(0) : max_subbundle_pardeg(S, rk)) + pQ;
        Rational top;
        for (int i = 0; i < rk; ++i) top += p.eps_vec[n - 2 - i];
        Rational closed = Rational(rk) * d * p.eps / Rational(n - 1) + d * top - p.eps * d;
        out.formulas_agree = out.formulas_agree && v == closed;
        cert.entries.push_back({"V ⊕ Q, rank V = " + std::to_string(rk), v, "upper_bound",
                                {{"closed form", closed}}});
    }
    finish(cert, out.higgs_field_nonzero);
    return out;
}

GradedHiggsModel build_example_69(const Rational& eps) {
    if (!(Rational(1, 48) < eps && eps < Rational(1, 24)))
        throw InputError("rank-three example needs 1/48 < eps < 1/24", "/eps");
    const Rational h(1, 2), e8(1, 8), t(1, 3);
    SplitParabolicBundle S(3, {{-2, {Rational(1) - eps, Rational(3, 4) + eps, t - eps}}});
    SplitParabolicBundle Q(3, {{-1, {h, e8 - eps, t}}, {-1, {h + eps, e8, t + eps}}}, FlagMode::generic);
    return GradedHiggsModel({S, Q}, {1});
}

ExampleCertificate certify_example_69(const GradedHiggsModel& m, const Rational& eps) {
    if (m.r() != 2 || m.piece(2).rank() != 1)
        throw InputError("rank-three certificate expects a two-step model with rank-1 top piece");
    const auto& S = m.piece(2);
    const auto& Q = m.piece(1);
    const int d = m.punctures();
    ExampleCertificate out;
    out.total_par_deg = par_deg(m.total());
    out.distinct = check_distinct(m.total().weight_system());
    auto hom = hom_split(S, Q);
    out.hom_underlying = hom.underlying();
    SplitBundle twisted = twist_log(out.hom_underlying, d);
    out.higgs_field_nonzero = cohomology(twisted).h0 > 0;
    out.minimal_energy = minimal_energy_check(m);

    Rational muS = par_slope(S);
    Rational line_max = max_line_subbundle_pardeg_generic(Q);
    Rational line_general = general_line_pardeg(Q);
    Rational crude = max_subbundle_pardeg(Q, 1);
    out.values = {{"par_slope S", muS},
                  {"par_slope Q", par_slope(Q)},
                  {"max par_deg of a line in Q", line_max},
                  {"par_deg of a general line in Q", line_general},
                  {"crude rank-1 bound", crude},
                  {"-1/24 - eps", Rational(-1, 24) - eps}};
    out.formulas_agree = muS == Rational(1, 12) - eps && line_general == Rational(-1, 24) - eps;

    auto& cert = out.stability;
    cert.entries.push_back({"Q", par_slope(Q), "exact", {}});
    cert.entries.push_back({"line subbundles of Q", line_max, "exact", {}});
    // θ is a constant vector in H^0(O^m) exactly when the twisted Hom is trivial;
    // its image then spans a line of top degree in general position.
    bool constant_theta = std::all_of(twisted.degrees().begin(), twisted.degrees().end(),
                                      [](long x) { return x == 0; });
    if (!constant_theta)
        throw InputError("certificate expects Hom(S,Q) ⊗ Ω(log D) to be trivial");
    cert.entries.push_back({"S ⊕ (saturated image of θ)", par_deg(S) + line_general, "exact",
                            {{"closed form 1/24 - 2 eps", Rational(1, 24) - Rational(2) * eps}}});
    out.formulas_agree = out.formulas_agree && par_deg(S) + line_general == Rational(1, 24) - Rational(2) * eps;
    cert.notes.push_back("S is not θ-invariant; θ is injective on S so ker θ = 0");
    finish(cert, out.higgs_field_nonzero);
    return out;
}

}  // namespace parhiggs
