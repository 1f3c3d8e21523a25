#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace parhiggs {

using Partition = std::vector<int>;  // weakly decreasing, length k inside Gr(k, n)

// Pads or trims trailing zeros to exactly k parts; throws if it does not fit.
Partition boxed(const Partition& p, int k, int n);
bool fits_box(const Partition& p, int k, int n);
int size(const Partition& p);
Partition complement(const Partition& p, int k, int n);
Partition point_class(int k, int n);
std::vector<Partition> box_partitions(int k, int n);

Partition subset_to_partition(const std::vector<int>& subset, int k, int n);
std::vector<int> partition_to_subset(const Partition& p, int k, int n);
std::vector<std::vector<int>> all_subsets(int k, int n);  // lexicographic

// Classical Littlewood–Richardson number by enumerating LR skew tableaux.
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu, int k, int n);

// Element of QH*(Gr(k,n)): coefficient of q^d σ_λ keyed by (d, λ).
using QuantumClass = std::map<std::pair<int, Partition>, long long>;

// Small quantum product by Jacobi–Trudi expansion into complete symmetric
// functions, Pieri steps in k rows and n-rim-hook reduction. Not thread-safe
// (memoizes products).
class QuantumRing {
public:
    QuantumRing(int k, int n);

    int k() const { return k_; }
    int n() const { return n_; }

    const QuantumClass& multiply(const Partition& a, const Partition& b);
    QuantumClass multiply(const QuantumClass& x, const Partition& b);

    // ±q^d σ_ν for a partition with at most k rows, or nothing if it vanishes.
    struct Reduced {
        int sign;
        int degree;
        Partition nu;
    };
    std::optional<Reduced> reduce(const Partition& p) const;

private:
    QuantumClass times_h(const QuantumClass& x, int m) const;

    int k_, n_;
    std::map<std::pair<Partition, Partition>, QuantumClass> cache_;
};

struct GWQuery {
    int k = 1;
    int n = 2;
    std::vector<Partition> classes;
    int degree = 0;
};

struct GWResult {
    long long value = 0;
    bool dimension_ok = false;  // Σ|λ_j| = k(n-k) + δ n
};

GWResult gw_invariant(const GWQuery& q);
GWResult gw_invariant(const GWQuery& q, QuantumRing& ring);

}  // namespace parhiggs
