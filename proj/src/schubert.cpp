#include "parhiggs/schubert.hpp"

#include "parhiggs/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace parhiggs {

namespace {

Partition trimmed(Partition p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0) throw InputError("partition parts must be non-negative");
        if (i > 0 && p[i] > p[i - 1]) throw InputError("partition parts must be weakly decreasing");
    }
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

void check_grassmannian(int k, int n) {
    if (n < 2 || k < 1 || k > n - 1) throw InputError("Grassmannian needs 1 <= k <= n-1");
}

}  // namespace

bool fits_box(const Partition& p, int k, int n) {
    Partition t = trimmed(p);
    return static_cast<int>(t.size()) <= k && (t.empty() || t[0] <= n - k);
}

Partition boxed(const Partition& p, int k, int n) {
    check_grassmannian(k, n);
    Partition t = trimmed(p);
    if (static_cast<int>(t.size()) > k || (!t.empty() && t[0] > n - k))
        throw InputError("partition does not fit the " + std::to_string(k) + "x" + std::to_string(n - k) + " box");
    t.resize(k, 0);
    return t;
}

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition complement(const Partition& p, int k, int n) {
    Partition b = boxed(p, k, n), c(k);
    for (int i = 0; i < k; ++i) c[i] = (n - k) - b[k - 1 - i];
    return c;
}

Partition point_class(int k, int n) {
    check_grassmannian(k, n);
    return Partition(k, n - k);
}

std::vector<Partition> box_partitions(int k, int n) {
    check_grassmannian(k, n);
    std::vector<Partition> out;
    Partition cur(k, 0);
    auto rec = [&](auto&& self, int i, int cap) -> void {
        if (i == k) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= cap; ++v) {
            cur[i] = v;
            self(self, i + 1, v);
        }
    };
    rec(rec, 0, n - k);
    return out;
}

Partition subset_to_partition(const std::vector<int>& s, int k, int n) {
    check_grassmannian(k, n);
    if (static_cast<int>(s.size()) != k) throw InputError("Schubert subset must have k elements");
    Partition p(k);
    for (int a = 0; a < k; ++a) {
        if (s[a] < 1 || s[a] > n) throw InputError("Schubert subset element out of range");
        if (a > 0 && s[a] <= s[a - 1]) throw InputError("Schubert subset must be strictly increasing");
        p[a] = (n - k) + (a + 1) - s[a];
    }
    return p;
}

std::vector<int> partition_to_subset(const Partition& p, int k, int n) {
    Partition b = boxed(p, k, n);
    std::vector<int> s(k);
    for (int a = 0; a < k; ++a) s[a] = (n - k) + (a + 1) - b[a];
    return s;
}

std::vector<std::vector<int>> all_subsets(int k, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

long long lr_coefficient(const Partition& lambda_in, const Partition& mu_in, const Partition& nu_in) {
    Partition lam = trimmed(lambda_in), mu = trimmed(mu_in), nu = trimmed(nu_in);
    if (size(nu) != size(lam) + size(mu) || lam.size() > nu.size()) return 0;
    lam.resize(nu.size(), 0);
    for (size_t i = 0; i < nu.size(); ++i)
        if (lam[i] > nu[i]) return 0;
    if (mu.empty()) return 1;

    // Cells in reverse reading order: rows top to bottom, right to left.
    std::vector<std::pair<int, int>> cells;
    for (size_t i = 0; i < nu.size(); ++i)
        for (int j = nu[i] - 1; j >= lam[i]; --j) cells.push_back({static_cast<int>(i), j});
    std::vector<std::vector<int>> t(nu.size());
    for (size_t i = 0; i < nu.size(); ++i) t[i].assign(nu[i], 0);
    std::vector<int> count(mu.size() + 1, 0);
    const int labels = static_cast<int>(mu.size());

    long long total = 0;
    auto rec = [&](auto&& self, size_t c) -> void {
        if (c == cells.size()) {
            ++total;
            return;
        }
        auto [i, j] = cells[c];
        int hi = labels;
        if (j + 1 < nu[i]) hi = std::min(hi, t[i][j + 1]);  // row weakly increasing
        int lo = 1;
        if (i > 0 && j >= lam[i - 1] && j < nu[i - 1]) lo = t[i - 1][j] + 1;  // column strict
        for (int v = lo; v <= hi; ++v) {
            if (count[v] + 1 > mu[v - 1]) continue;
            if (v > 1 && count[v] + 1 > count[v - 1]) continue;  // lattice word
            t[i][j] = v;
            ++count[v];
            self(self, c + 1);
            --count[v];
        }
        t[i][j] = 0;
    };
    rec(rec, 0);
    return total;
}

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu, int k, int n) {
    return lr_coefficient(boxed(lambda, k, n), boxed(mu, k, n), boxed(nu, k, n));
}

QuantumRing::QuantumRing(int k, int n) : k_(k), n_(n) { check_grassmannian(k, n); }

std::optional<QuantumRing::Reduced> QuantumRing::reduce(const Partition& p_in) const {
    Partition p = trimmed(p_in);
    if (static_cast<int>(p.size()) > k_) return std::nullopt;
    p.resize(k_, 0);
    std::vector<int> beads(k_);
    for (int i = 0; i < k_; ++i) beads[i] = p[i] + k_ - 1 - i;
    std::set<int> occupied(beads.begin(), beads.end());
    Reduced r{1, 0, {}};
    for (;;) {
        int mover = -1;
        for (auto it = occupied.rbegin(); it != occupied.rend(); ++it)
            if (*it - n_ >= 0 && !occupied.count(*it - n_)) {
                mover = *it;
                break;
            }
        if (mover < 0) break;
        int between = 0;
        for (int b : occupied)
            if (b > mover - n_ && b < mover) ++between;
        int rows = between + 1;
        if ((k_ - rows) % 2 != 0) r.sign = -r.sign;
        ++r.degree;
        occupied.erase(mover);
        occupied.insert(mover - n_);
    }
    std::vector<int> b(occupied.rbegin(), occupied.rend());
    r.nu.resize(k_);
    for (int i = 0; i < k_; ++i) r.nu[i] = b[i] - (k_ - 1 - i);
    if (r.nu[0] > n_ - k_) return std::nullopt;
    return r;
}

QuantumClass QuantumRing::times_h(const QuantumClass& x, int m) const {
    QuantumClass out;
    for (const auto& [key, c] : x) {
        const auto& [d, nu] = key;
        Partition rho(nu);
        auto rec = [&](auto&& self, int i, int left) -> void {
            if (i == k_) {
                if (left != 0) return;
                if (auto red = reduce(rho)) out[{d + red->degree, red->nu}] += c * red->sign;
                return;
            }
            int cap = i == 0 ? left : std::min(left, nu[i - 1] - nu[i]);
            for (int add = 0; add <= cap; ++add) {
                rho[i] = nu[i] + add;
                self(self, i + 1, left - add);
            }
            rho[i] = nu[i];
        };
        rec(rec, 0, m);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

const QuantumClass& QuantumRing::multiply(const Partition& a_in, const Partition& b_in) {
    Partition a = boxed(a_in, k_, n_), b = boxed(b_in, k_, n_);
    auto key = std::make_pair(a, b);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    Partition bt = trimmed(b);
    const int len = static_cast<int>(bt.size());
    QuantumClass acc;
    std::vector<int> perm(len);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (int i = 0; i < len; ++i)
            for (int j = i + 1; j < len; ++j) inversions += perm[i] > perm[j];
        QuantumClass x{{{0, a}, 1}};
        bool zero = false;
        for (int i = 0; i < len && !zero; ++i) {
            int m = bt[i] - i + perm[i];
            if (m < 0) zero = true;
            else if (m > 0) x = times_h(x, m);
        }
        if (zero) continue;
        long long s = inversions % 2 ? -1 : 1;
        for (const auto& [kk, c] : x) acc[kk] += s * c;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto it = acc.begin(); it != acc.end();) it = it->second == 0 ? acc.erase(it) : std::next(it);
    return cache_.emplace(key, std::move(acc)).first->second;
}

QuantumClass QuantumRing::multiply(const QuantumClass& x, const Partition& b) {
    QuantumClass out;
    for (const auto& [key, c] : x) {
        const auto& prod = multiply(key.second, b);
        for (const auto& [k2, c2] : prod) out[{key.first + k2.first, k2.second}] += c * c2;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

GWResult gw_invariant(const GWQuery& q, QuantumRing& ring) {
    if (ring.k() != q.k || ring.n() != q.n) throw InputError("quantum ring does not match the query");
    if (q.classes.size() < 2) throw InputError("Gromov–Witten query needs at least two classes");
    if (q.degree < 0) throw InputError("curve degree must be non-negative");
    GWResult r;
    int codim = 0;
    std::vector<Partition> cls;
    for (const auto& c : q.classes) {
        cls.push_back(boxed(c, q.k, q.n));
        codim += size(cls.back());
    }
    r.dimension_ok = codim == q.k * (q.n - q.k) + q.degree * q.n;
    QuantumClass x{{{0, cls[0]}, 1}};
    for (size_t i = 1; i < cls.size(); ++i) x = ring.multiply(x, cls[i]);
    auto it = x.find({q.degree, point_class(q.k, q.n)});
    r.value = it == x.end() ? 0 : it->second;
    return r;
}

GWResult gw_invariant(const GWQuery& q) {
    QuantumRing ring(q.k, q.n);
    return gw_invariant(q, ring);
}

}  // namespace parhiggs
