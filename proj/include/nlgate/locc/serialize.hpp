#pragma once

#include <nlohmann/json.hpp>

#include "nlgate/locc/runtime.hpp"

namespace nlgate::locc {

using Json = nlohmann::ordered_json;

/// Serializes one run as
///   {protocol, inputs, branches:[{probability, outcomes, transcript}],
///    ledger:{ebits, bits:[{from,to,count}]}}
/// Key order is fixed; equal inputs produce byte-identical dumps.
Json to_json(const RunResult& run, const Program& program,
             const std::vector<Eigen::Vector2cd>& inputs);

Json to_json(const ResourceLedger& ledger);

}  // namespace nlgate::locc
