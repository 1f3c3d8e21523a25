#include "parhiggs/deligne_simpson.hpp"

#include "parhiggs/error.hpp"

#include <algorithm>

namespace parhiggs {

ExistenceVerdict su_existence(const std::vector<SUnClass>& classes, const ExistenceOptions& opt) {
    if (classes.empty()) throw InputError("need at least one conjugacy class");
    const int n = classes.front().n();
    for (const auto& c : classes)
        if (c.n() != n) throw InputError("conjugacy classes of different rank");
    const int d = static_cast<int>(classes.size());
    ExistenceVerdict v;
    for (int s = 1; s <= n - 1; ++s) {
        QuantumRing ring(s, n);
        const auto subsets = all_subsets(s, n);
        std::vector<Partition> parts;
        for (const auto& I : subsets) parts.push_back(subset_to_partition(I, s, n));
        const int max_deg = d * s * (n - s) / n;
        const Partition pt = point_class(s, n);

        std::vector<int> pick(d);
        auto rec = [&](auto&& self, int j, const QuantumClass& cur, Rational lam, int codim) -> void {
            if (j == d) {
                for (int delta = 0; delta <= max_deg; ++delta) {
                    if (codim != s * (n - s) + delta * n) continue;
                    auto it = cur.find({delta, pt});
                    long long c = it == cur.end() ? 0 : it->second;
                    if (c < 1 || (c > 1 && !opt.diagnostic)) continue;
                    if (c == 1) ++v.inequalities_checked;
                    Rational rhs(opt.rhs == InequalityRhs::curve_degree ? delta : d);
                    if (lam <= rhs) continue;
                    Violation w{s, {}, delta, c, lam, rhs};
                    for (int x : pick) w.subsets.push_back(subsets[x]);
                    (c == 1 ? v.violations : v.diagnostic).push_back(std::move(w));
                }
                return;
            }
            for (size_t x = 0; x < subsets.size(); ++x) {
                pick[j] = static_cast<int>(x);
                QuantumClass next = j == 0 ? QuantumClass{{{0, parts[x]}, 1}} : ring.multiply(cur, parts[x]);
                self(self, j + 1, next, lam + classes[j].lambda(subsets[x]), codim + size(parts[x]));
            }
        };
        rec(rec, 0, QuantumClass{}, Rational(0), 0);
    }
    v.exists = v.violations.empty();
    return v;
}

namespace {

using Labeled = std::vector<std::vector<LabeledWeight>>;

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

ModifiedBundle apply_rotation(const Labeled& original, const std::vector<long>& degrees,
                              const std::vector<long>& rotation) {
    ModifiedBundle out;
    out.rotation = rotation;
    out.ledger.assign(degrees.size(), std::vector<long>(original.size(), 0));
    for (size_t j = 0; j < original.size(); ++j) {
        auto ws = original[j];
        std::stable_sort(ws.begin(), ws.end(),
                         [](const LabeledWeight& a, const LabeledWeight& b) { return a.value < b.value; });
        const long N = static_cast<long>(ws.size());
        const long q = floor_div(rotation[j], N), rem = rotation[j] - q * N;
        if (rem > 0 && ws[N - rem].value == ws[N - rem - 1].value)
            throw InputError("infeasible window at puncture " + std::to_string(j) +
                             ": rotation splits equal weights");
        for (long i = 0; i < N; ++i) {
            long shift = q + (i >= N - rem ? 1 : 0);
            out.ledger[ws[i].label][j] += shift;
            out.par_deg_before += ws[i].value;
            ws[i].value -= Rational(shift);
            out.par_deg_after += ws[i].value;
        }
        std::stable_sort(ws.begin(), ws.end(), [](const LabeledWeight& a, const LabeledWeight& b) {
            return a.value > b.value || (a.value == b.value && a.label < b.label);
        });
        out.weights.push_back(std::move(ws));
    }
    out.degrees = degrees;
    for (size_t l = 0; l < degrees.size(); ++l) {
        out.par_deg_before += Rational(degrees[l]);
        for (long x : out.ledger[l]) out.degrees[l] += x;
        out.par_deg_after += Rational(out.degrees[l]);
    }
    return out;
}

}  // namespace

ModifiedBundle modified_bundle(const SplitParabolicBundle& e) {
    if (e.flag_mode() != FlagMode::adapted && e.rank() > 1)
        throw InputError("modified bundle needs adapted flags");
    const int d = e.punctures();
    const int N = e.rank();
    std::vector<long> deg;
    for (const auto& s : e.summands()) deg.push_back(s.degree);
    if (d == 0) {
        if (std::any_of(deg.begin(), deg.end(), [](long x) { return x != 0; }))
            throw InputError("no punctures to modify a nontrivial bundle");
        return apply_rotation({}, deg, {});
    }
    Labeled orig(d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < N; ++i) orig[j].push_back({i, e.summands()[i].weights[j]});

    // rank of each summand's weight among the sorted weights at each puncture
    std::vector<std::vector<int>> order(d, std::vector<int>(N));
    std::vector<std::vector<Rational>> sorted(d);
    for (int j = 0; j < d; ++j) {
        std::vector<int> idx(N);
        for (int i = 0; i < N; ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
            return e.summands()[a].weights[j] < e.summands()[b].weights[j];
        });
        for (int pos = 0; pos < N; ++pos) {
            order[j][idx[pos]] = pos;
            sorted[j].push_back(e.summands()[idx[pos]].weights[j]);
        }
    }

    std::vector<long> rem(d, 0), cur = deg;
    std::optional<std::vector<long>> found;
    auto rec = [&](auto&& self, int j) -> void {
        if (found) return;
        auto [lo, hi] = std::minmax_element(cur.begin(), cur.end());
        if (*hi - *lo > d - j) return;
        if (j == d) {
            if (*hi == *lo) found = rem;
            return;
        }
        for (int t = 0; t < N && !found; ++t) {
            if (t > 0 && sorted[j][N - t] == sorted[j][N - t - 1]) continue;
            rem[j] = t;
            for (int i = 0; i < N; ++i)
                if (order[j][i] >= N - t) ++cur[i];
            self(self, j + 1);
            for (int i = 0; i < N; ++i)
                if (order[j][i] >= N - t) --cur[i];
        }
    };
    rec(rec, 0);
    if (!found) throw InputError("no window-preserving modification makes the bundle trivial");
    std::vector<long> rotation = *found;
    long common = deg[0];
    for (int j = 0; j < d; ++j) common += order[j][0] >= N - rotation[j] ? 1 : 0;
    rotation[0] += -common * N;
    return apply_rotation(orig, deg, rotation);
}

ModifiedBundle modified_model(const GradedHiggsModel& m, std::optional<std::vector<long>> rotation) {
    const int d = m.punctures();
    Labeled orig(d);
    std::vector<long> deg;
    long total_deg = 0;
    for (int i = 0; i < m.r(); ++i) {
        const auto& piece = m.pieces()[i];
        deg.push_back(piece.degree());
        total_deg += piece.degree();
        for (const auto& s : piece.summands())
            for (int j = 0; j < d; ++j) orig[j].push_back({i, s.weights[j]});
    }
    if (rotation) {
        if (static_cast<int>(rotation->size()) != d) throw InputError("rotation needs one entry per puncture");
    } else {
        std::vector<Rational> sums(d);
        bool integral = true;
        for (int j = 0; j < d; ++j) {
            for (const auto& w : orig[j]) sums[j] += w.value;
            integral = integral && sums[j].is_integer();
        }
        rotation.emplace(d, 0);
        if (integral) {
            for (int j = 0; j < d; ++j) (*rotation)[j] = sums[j].to_long();
        } else if (d > 0) {
            long T = -total_deg;
            for (int j = 0; j < d; ++j) (*rotation)[j] = floor_div(T, d) + (j < T - floor_div(T, d) * d ? 1 : 0);
        }
    }
    return apply_rotation(orig, deg, *rotation);
}

GWCertificate gw_certificate(const GradedHiggsModel& m, std::optional<std::vector<long>> rotation) {
    if (m.r() != 2) throw InputError("GW certificate needs a two-step model");
    const auto& H = m.piece(2);
    if (!(par_slope(H) > 0 && par_slope(m.total()) <= 0))
        throw InputError("top piece is not destabilizing: need par_slope(H) > 0 >= par_slope(E)");
    GWCertificate c;
    c.modified = modified_model(m, rotation);
    const int d = m.punctures();
    for (int j = 0; j < d; ++j) {
        const auto& ws = c.modified.weights[j];
        std::vector<int> pos;
        for (size_t i = 0; i < ws.size(); ++i) {
            if (ws[i].label != 0) continue;
            pos.push_back(static_cast<int>(i) + 1);
            c.lambda_sum += ws[i].value;
            for (size_t o = 0; o < ws.size(); ++o)
                if (ws[o].label != 0 && ws[o].value == ws[i].value)
                    throw InputError("tied weights make the Schubert positions ambiguous");
        }
        c.subsets.push_back(pos);

        std::vector<std::pair<Rational, int>> orig;
        for (int i = 0; i < m.r(); ++i)
            for (const auto& s : m.pieces()[i].summands()) orig.push_back({s.weights[j], i});
        std::stable_sort(orig.begin(), orig.end(), [](const auto& a, const auto& b) {
            return a.first > b.first || (a.first == b.first && a.second < b.second);
        });
        std::vector<int> upos;
        for (size_t i = 0; i < orig.size(); ++i)
            if (orig[i].second == 0) upos.push_back(static_cast<int>(i) + 1);
        c.unmodified_subsets.push_back(upos);
    }
    long delta = -c.modified.degrees[0];
    if (delta < 0) throw InputError("modified top piece has positive degree; no curve degree");
    c.query.k = H.rank();
    c.query.n = static_cast<int>(m.total_rank());
    c.query.degree = static_cast<int>(delta);
    for (const auto& I : c.subsets) c.query.classes.push_back(subset_to_partition(I, c.query.k, c.query.n));
    if (c.query.classes.size() < 2) throw InputError("GW certificate needs at least two punctures");
    GWResult g = gw_invariant(c.query);
    c.invariant = g.value;
    c.dimension_ok = g.dimension_ok;
    c.inequality_violated = c.lambda_sum > Rational(delta);
    c.claim = "the Schubert intersection in degree " + std::to_string(delta) +
              " is nonempty, so no unitary local system has these local monodromies";
    return c;
}

}  // namespace parhiggs
