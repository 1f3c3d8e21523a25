#pragma once

#include "parhiggs/rational.hpp"
#include "parhiggs/weights.hpp"

#include <string>
#include <vector>

namespace parhiggs {

enum class FlagMode { adapted, generic };

std::string to_string(FlagMode m);
FlagMode flag_mode_from_string(const std::string& s);

struct LineSummand {
    long degree = 0;
    std::vector<Rational> weights;  // one per puncture, in [0,1)
    friend bool operator==(const LineSummand&, const LineSummand&) = default;
};

// Splitting type only, no parabolic data. May be empty (the zero sheaf).
class SplitBundle {
public:
    SplitBundle() = default;
    explicit SplitBundle(std::vector<long> degrees);

    const std::vector<long>& degrees() const { return degrees_; }
    long rank() const { return static_cast<long>(degrees_.size()); }
    long degree() const;

    friend bool operator==(const SplitBundle&, const SplitBundle&) = default;

private:
    std::vector<long> degrees_;  // sorted decreasing
};

class SplitParabolicBundle {
public:
    SplitParabolicBundle(int punctures, std::vector<LineSummand> summands,
                         FlagMode mode = FlagMode::adapted);

    int punctures() const { return punctures_; }
    int rank() const { return static_cast<int>(summands_.size()); }
    long degree() const;
    FlagMode flag_mode() const { return mode_; }
    const std::vector<LineSummand>& summands() const { return summands_; }

    WeightSystem weight_system() const;
    SplitBundle underlying() const;

    friend bool operator==(const SplitParabolicBundle&, const SplitParabolicBundle&) = default;

private:
    int punctures_;
    std::vector<LineSummand> summands_;
    FlagMode mode_;
};

// Parabolic direct sum; flags stay adapted only if both inputs are adapted.
SplitParabolicBundle direct_sum(const SplitParabolicBundle& a, const SplitParabolicBundle& b);

Rational par_deg(const SplitParabolicBundle& e);
Rational par_slope(const SplitParabolicBundle& e);
Rational par_deg_hom(const SplitParabolicBundle& e, const SplitParabolicBundle& f);

// Why pairwise summand computation of Hom(E,F) is exact for this pair, or
// an empty string if it is not.
std::string hom_split_regime(const SplitParabolicBundle& e, const SplitParabolicBundle& f);
SplitParabolicBundle hom_split(const SplitParabolicBundle& e, const SplitParabolicBundle& f);

SplitParabolicBundle twist_log(const SplitParabolicBundle& e, int d);
SplitBundle twist_log(const SplitBundle& b, int d);

struct Cohomology {
    long h0 = 0;
    long h1 = 0;
    friend bool operator==(const Cohomology&, const Cohomology&) = default;
};

Cohomology cohomology(const SplitBundle& b);

bool pardeg_bounds_check(const SplitParabolicBundle& e);

}  // namespace parhiggs
