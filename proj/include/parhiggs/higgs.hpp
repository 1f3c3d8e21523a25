#pragma once

#include "parhiggs/parabolic.hpp"
#include "parhiggs/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace parhiggs {

// Kernel and cokernel splitting types of one step of a Higgs field.
struct StepSplit {
    SplitBundle ker;
    SplitBundle coker;
    friend bool operator==(const StepSplit&, const StepSplit&) = default;
};

// E = E^r ⊕ ... ⊕ E^1 with θ^p : E^p -> E^{p-1} ⊗ Ω(log D).
// Step data indexed by the source degree p lives in `steps` (p = r..2);
// data for the adjoint maps θ_k : V^k -> V^{k-1} ⊗ Ω(log D) in `adjoint`.
class GradedHiggsModel {
public:
    GradedHiggsModel(std::vector<SplitParabolicBundle> pieces, std::vector<long> higgs_rank,
                     std::vector<std::optional<StepSplit>> steps = {},
                     std::map<int, StepSplit> adjoint = {});

    int r() const { return static_cast<int>(pieces_.size()); }
    int punctures() const { return pieces_.front().punctures(); }
    const std::vector<SplitParabolicBundle>& pieces() const { return pieces_; }  // E^r first
    const SplitParabolicBundle& piece(int p) const;                               // 1 <= p <= r
    long higgs_rank(int p) const;                                                 // 2 <= p <= r
    const std::vector<long>& higgs_ranks() const { return higgs_rank_; }
    const std::vector<std::optional<StepSplit>>& steps() const { return steps_; }
    const std::map<int, StepSplit>& adjoint() const { return adjoint_; }
    SplitParabolicBundle total() const;
    long total_rank() const;

    long adjoint_rank(int k) const;
    std::optional<SplitParabolicBundle> adjoint_split(int k) const;
    // Block-triangular lower bound for the generic rank of θ_k, k >= 1.
    long adjoint_higgs_rank_lower_bound(int k) const;

    friend bool operator==(const GradedHiggsModel&, const GradedHiggsModel&) = default;

private:
    void validate_adjoint() const;

    std::vector<SplitParabolicBundle> pieces_;
    std::vector<long> higgs_rank_;
    std::vector<std::optional<StepSplit>> steps_;
    std::map<int, StepSplit> adjoint_;
};

struct AdjointPiece {
    int k = 0;
    long rank = 0;
    Rational par_deg;
    std::optional<SplitParabolicBundle> split;
};

std::vector<AdjointPiece> adjoint_pieces(const GradedHiggsModel& m);

// Serre-dual data for step 1-k given step k.
StepSplit mirror_step(const StepSplit& s);

long hyper_h1_dim(const SplitBundle& ker, const SplitBundle& coker);

struct ChainEntry {
    std::string label;
    Rational value;
    friend bool operator==(const ChainEntry&, const ChainEntry&) = default;
};

struct BoundReport {
    std::string name;
    Rational lhs;
    Rational rhs;
    std::string relation = "<=";  // lhs relation rhs
    bool holds = false;
    std::vector<ChainEntry> chain;
};

BoundReport make_bound(std::string name, Rational lhs, std::string relation, Rational rhs,
                       std::vector<ChainEntry> chain = {});

struct StepDimension {
    int k = 0;
    long dim = 0;
};

struct MinimalEnergyReport {
    bool minimal_energy = false;
    std::string reason;
    std::optional<SplitParabolicBundle> top_hom;  // Hom(E^r, E^1)
    Cohomology top_cohomology;
    std::vector<StepDimension> interior;  // hyper_h1_dim for 2 <= k <= r-1
    std::optional<BoundReport> top_degree;  // deg V^{r-1} vs rank (1 - d)
};

MinimalEnergyReport minimal_energy_check(const GradedHiggsModel& m);

std::vector<BoundReport> coker_degree_bounds(const GradedHiggsModel& m);
std::vector<BoundReport> rank_defect_bound(const GradedHiggsModel& m);
BoundReport rank_defect_bound(long rank_prev, long rank_coker, int r, int k);

// rank_v[i] = rank V^{i+1} for i = 0..r-2; coker[i] = rank coker θ_{i+2}.
BoundReport main_bound(const std::vector<long>& rank_v, const std::vector<long>& coker, int r, long d);
// coker taken at the rank-defect slack, rank V^{k-1} - (r - k).
BoundReport main_bound_at_slack(const std::vector<long>& rank_v, int r, long d);

struct TheoremChain {
    int n = 0;
    int r = 0;
    Rational first_link;  // 2(r^2-5r+7)(n^2-2r-1)/((r-1)(r-2)/2)
    std::vector<BoundReport> links;
    bool holds = false;
};

TheoremChain theorem_bound(int n, int r);

struct V1Bound {
    Rational pardeg_v1_lower;
    long deg_top = 0;  // deg V^{r-1} = rank V^{r-1} (1 - d)
};

// ranks[i] = rank V^{i+2}, i = 0..r-3.
V1Bound pardeg_V1_lower_bound(const std::vector<long>& ranks, int r, long d);

struct GenusVerdict {
    bool obstructed = false;  // true: the model must be unitary
    std::string reason;
};

GenusVerdict positive_genus_obstruction(int g, const Rational& hom_par_deg, long hom_deg, long hom_rank);

long centralizer_dim(const std::vector<long>& multiplicities);
long katz_lhs(long n, const std::vector<long>& dims);
bool katz_rigidity(long n, const std::vector<long>& dims);

}  // namespace parhiggs
