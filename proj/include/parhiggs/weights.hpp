#pragma once

#include "parhiggs/rational.hpp"

#include <optional>
#include <vector>

namespace parhiggs {

struct WeightEntry {
    Rational value;
    int multiplicity = 1;
    friend bool operator==(const WeightEntry&, const WeightEntry&) = default;
};

// Parabolic weights of a rank-n bundle at d punctures; per puncture the
// values are strictly increasing in [0,1) with multiplicities summing to n.
class WeightSystem {
public:
    WeightSystem(int rank, std::vector<std::vector<WeightEntry>> punctures);

    // Collects raw per-puncture value lists (repeats become multiplicities).
    static WeightSystem from_values(int rank, const std::vector<std::vector<Rational>>& values);

    int rank() const { return rank_; }
    int puncture_count() const { return static_cast<int>(punctures_.size()); }
    const std::vector<WeightEntry>& at(int j) const { return punctures_.at(j); }
    const std::vector<std::vector<WeightEntry>>& punctures() const { return punctures_; }

    // Values with multiplicity expanded, increasing.
    std::vector<Rational> expanded(int j) const;

    friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

private:
    int rank_;
    std::vector<std::vector<WeightEntry>> punctures_;
};

struct WeightRef {
    int puncture;
    Rational value;
    friend bool operator==(const WeightRef&, const WeightRef&) = default;
};

struct SubsetSumResult {
    bool generic = true;
    std::vector<WeightRef> witness;  // empty when generic
    Rational witness_sum;
};

struct SelectionResult {
    bool generic = true;
    int witness_rank = 0;
    std::vector<std::vector<Rational>> witness;  // r values per puncture
    Rational witness_sum;
};

bool check_distinct(const WeightSystem& w);

SubsetSumResult check_generic_subset_sum(const WeightSystem& w);

// Throws InputError unless check_distinct(w).
SelectionResult check_generic_selection(const WeightSystem& w);

// Normalized log-eigenvalues of a special unitary conjugacy class.
class SUnClass {
public:
    explicit SUnClass(std::vector<Rational> theta);

    int n() const { return static_cast<int>(theta_.size()); }
    const std::vector<Rational>& theta() const { return theta_; }

    // Sum over a 1-based index set of the unreduced values.
    Rational lambda(const std::vector<int>& subset) const;

    friend bool operator==(const SUnClass&, const SUnClass&) = default;

private:
    std::vector<Rational> theta_;
};

std::vector<WeightEntry> class_to_weights(const SUnClass& c);

}  // namespace parhiggs
