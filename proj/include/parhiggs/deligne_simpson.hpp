#pragma once

#include "parhiggs/higgs.hpp"
#include "parhiggs/parabolic.hpp"
#include "parhiggs/schubert.hpp"
#include "parhiggs/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace parhiggs {

enum class InequalityRhs {
    curve_degree,    // Σ λ_{I_j}(C_j) <= δ
    puncture_count,  // literal reading: <= number of conjugacy classes
};

struct ExistenceOptions {
    InequalityRhs rhs = InequalityRhs::curve_degree;
    bool diagnostic = false;  // also report failing tuples with invariant > 1
};

struct Violation {
    int s = 0;
    std::vector<std::vector<int>> subsets;
    int degree = 0;
    long long invariant = 0;
    Rational lhs;
    Rational rhs;
};

struct ExistenceVerdict {
    bool exists = true;
    std::vector<Violation> violations;  // invariant exactly 1
    std::vector<Violation> diagnostic;  // invariant > 1, only in diagnostic mode
    long long inequalities_checked = 0;
};

ExistenceVerdict su_existence(const std::vector<SUnClass>& classes, const ExistenceOptions& opt = {});

struct LabeledWeight {
    int label = 0;
    Rational value;
};

// Window-preserving integer shifts of the weights. rotation[j] counts how
// many unit decrements were applied at puncture j (top weights first, full
// turns shift every weight).
struct ModifiedBundle {
    std::vector<long> rotation;
    std::vector<std::vector<LabeledWeight>> weights;  // per puncture, decreasing
    std::vector<long> degrees;                        // per label, after modification
    std::vector<std::vector<long>> ledger;            // [label][puncture] degree gained
    Rational par_deg_before;
    Rational par_deg_after;
};

// Labels are summands; chooses rotations that make every summand trivial.
ModifiedBundle modified_bundle(const SplitParabolicBundle& e);

// Labels are graded pieces (0 = E^r). Default rotation: the weight sum at
// each puncture when all are integers, otherwise an even split of -deg E.
ModifiedBundle modified_model(const GradedHiggsModel& m, std::optional<std::vector<long>> rotation = {});

struct GWCertificate {
    GWQuery query;
    std::vector<std::vector<int>> subsets;             // positions after modification
    std::vector<std::vector<int>> unmodified_subsets;  // positions among the original weights
    long long invariant = 0;
    bool dimension_ok = false;
    std::string claim;
    Rational lambda_sum;  // Σ_j λ_{I_j} over modified weights
    bool inequality_violated = false;
    ModifiedBundle modified;
};

GWCertificate gw_certificate(const GradedHiggsModel& m, std::optional<std::vector<long>> rotation = {});

}  // namespace parhiggs
