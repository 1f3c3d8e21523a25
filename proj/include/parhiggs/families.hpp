#pragma once

#include "parhiggs/higgs.hpp"
#include "parhiggs/parabolic.hpp"
#include "parhiggs/weights.hpp"

#include <string>
#include <vector>

namespace parhiggs {

struct Example62Params {
    int n = 2;
    long a = 0;
    Rational eps;
    std::vector<Rational> eps_vec;  // n-1 values, strictly increasing, sum 0
};

bool lemma_6_1_check(int n, long a, const Rational& eps);

void validate(const Example62Params& p);

// Symmetric progression eps_vec and eps = min(1/100, half the admissible slack).
Example62Params suggest_example62_params(int n, long a);
std::vector<Rational> default_eps_vec(int n);

struct Example62 {
    Example62Params params;
    long d = 0;
    GradedHiggsModel model;
    WeightSystem weights;
};

Example62 build_example_62(const Example62Params& p);

struct CertificateEntry {
    std::string family;
    Rational value;
    std::string kind;  // "exact" or "upper_bound"
    std::vector<ChainEntry> detail;
};

struct StabilityCertificate {
    std::vector<CertificateEntry> entries;
    bool stable = false;  // every value < 0 and the Higgs field is nonzero
    std::vector<std::string> notes;
};

struct ExampleCertificate {
    StabilityCertificate stability;
    MinimalEnergyReport minimal_energy;
    bool higgs_field_nonzero = false;
    SplitBundle hom_underlying;  // Hom(S, Q)
    Rational total_par_deg;
    bool distinct = false;
    std::vector<ChainEntry> values;
    bool formulas_agree = true;  // closed forms match direct computation
};

ExampleCertificate certify_example_62(const Example62& ex);

GradedHiggsModel build_example_69(const Rational& eps);
ExampleCertificate certify_example_69(const GradedHiggsModel& m, const Rational& eps);

// Sum of the r largest summand degrees plus the r largest weights at each
// puncture; sound for any flags.
Rational max_subbundle_pardeg(const SplitParabolicBundle& e, int r);

// Maximum of par_deg over line subbundles when the flags are in general
// position with respect to the splitting (expected-dimension count of the
// incidence conditions on sections of each degree).
Rational max_line_subbundle_pardeg_generic(const SplitParabolicBundle& e);

// par_deg of a line of top degree in general position (meets no special flag member).
Rational general_line_pardeg(const SplitParabolicBundle& e);

}  // namespace parhiggs
