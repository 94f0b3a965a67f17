#pragma once

// JSON views of reports. Non-finite numbers are written as the strings
// "inf", "-inf" and "nan".

#include <nlohmann/json.hpp>

#include "mmslab/curvature.hpp"
#include "mmslab/doubling.hpp"
#include "mmslab/models.hpp"
#include "mmslab/pmgh.hpp"
#include "mmslab/splitting.hpp"
#include "mmslab/tangent.hpp"
#include "mmslab/transport.hpp"

namespace mms {

nlohmann::json number(double v);

nlohmann::json to_json(const W2Result& r);
nlohmann::json to_json(const CdReport& r);
nlohmann::json to_json(const ProlongReport& r);
nlohmann::json to_json(const DoublingProfile& p);
nlohmann::json to_json(const PmghEstimate& e);
nlohmann::json to_json(const ConvergenceTable& t);
nlohmann::json to_json(const BlowupSequence& s);
nlohmann::json to_json(const TangentMatch& m);
nlohmann::json to_json(const IteratedTangentReport& r);
nlohmann::json to_json(const LineCandidate& l);
/// Summary (defects, sizes, quotient); per-point data is omitted.
nlohmann::json to_json(const SplitResult& s);
nlohmann::json to_json(const DimensionResult& d);
nlohmann::json to_json(const ModelSpec& s);
nlohmann::json to_json(const GroundTruth& g);

/// Inverse of to_json(ModelSpec); missing keys keep their defaults.
ModelSpec model_spec_from_json(const nlohmann::json& j);

}  // namespace mms
