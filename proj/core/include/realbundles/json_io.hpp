#pragma once

#include <json.hpp>

#include "realbundles/census.hpp"
#include "realbundles/curve.hpp"

namespace rbp {

using nlohmann::json;

// Matrices serialize as row-major arrays of [re, im] pairs.
json matrix_to_json(const CMat& m);
CMat matrix_from_json(const json& j);

void to_json(json& j, const GroupSpec& g);
void from_json(const json& j, GroupSpec& g);

void to_json(json& j, const CentralClass& c);
void from_json(const json& j, CentralClass& c);

void to_json(json& j, const ClassLabel& l);
void from_json(const json& j, ClassLabel& l);

void to_json(json& j, const CohomologyClass& c);
void from_json(const json& j, CohomologyClass& c);

void to_json(json& j, const RealFormDescriptor& d);
void from_json(const json& j, RealFormDescriptor& d);

void to_json(json& j, const RealCurve& c);
void from_json(const json& j, RealCurve& c);

void to_json(json& j, const QuotientData& q);
void from_json(const json& j, QuotientData& q);

void to_json(json& j, const BetaChoice& b);
void from_json(const json& j, BetaChoice& b);

void to_json(json& j, const TopologicalType& t);
void from_json(const json& j, TopologicalType& t);

void to_json(json& j, const CensusResult& r);
void from_json(const json& j, CensusResult& r);

void to_json(json& j, const DiscretenessReport& r);
void from_json(const json& j, DiscretenessReport& r);

void to_json(json& j, const SequenceReport& r);
void from_json(const json& j, SequenceReport& r);

}  // namespace rbp
