#pragma once

#include "parhiggs/deligne_simpson.hpp"
#include "parhiggs/families.hpp"
#include "parhiggs/higgs.hpp"
#include "parhiggs/parabolic.hpp"
#include "parhiggs/rational.hpp"
#include "parhiggs/schubert.hpp"
#include "parhiggs/weights.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace parhiggs::io {

using json = nlohmann::json;

inline constexpr int kSchema = 1;

// Parsers throw InputError carrying a JSON pointer to the offending value.
Rational rational_from(const json& j, const std::string& ptr = "");
WeightSystem weights_from(const json& j, const std::string& ptr = "");
SplitBundle split_bundle_from(const json& j, const std::string& ptr = "");
SplitParabolicBundle bundle_from(const json& j, const std::string& ptr = "");
GradedHiggsModel model_from(const json& j, const std::string& ptr = "");
std::vector<SUnClass> classes_from(const json& j, const std::string& ptr = "");
Partition partition_from(const json& j, const std::string& ptr = "");
void check_schema(const json& j, const std::string& ptr = "");

json to_json(const Rational& r);
json to_json(const WeightSystem& w);
json to_json(const SplitBundle& b);
json to_json(const SplitParabolicBundle& b);
json to_json(const GradedHiggsModel& m);
json to_json(const std::vector<SUnClass>& cs);
json to_json(const Partition& p);
json to_json(const Cohomology& c);
json to_json(const ChainEntry& c);
json to_json(const BoundReport& b);
json to_json(const TheoremChain& t);
json to_json(const MinimalEnergyReport& r);
json to_json(const AdjointPiece& a);
json to_json(const SubsetSumResult& r);
json to_json(const SelectionResult& r);
json to_json(const Example62Params& p);
json to_json(const StabilityCertificate& c);
json to_json(const ExampleCertificate& c);
json to_json(const Violation& v);
json to_json(const ExistenceVerdict& v);
json to_json(const ModifiedBundle& m);
json to_json(const GWQuery& q);
json to_json(const GWCertificate& c);

}  // namespace parhiggs::io
