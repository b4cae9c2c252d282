#include "nlgate/locc/serialize.hpp"

namespace nlgate::locc {

Json to_json(const ResourceLedger& ledger) {
  Json bits = Json::array();
  for (const auto& [direction, count] : ledger.bits_sent) {
    bits.push_back({{"from", direction.first.name},
                    {"to", direction.second.name},
                    {"count", count}});
  }
  return Json{{"ebits", ledger.ebits_consumed}, {"bits", std::move(bits)}};
}

Json to_json(const RunResult& run, const Program& program,
             const std::vector<Eigen::Vector2cd>& inputs) {
  Json doc;
  doc["protocol"] = program.name;

  Json in = Json::array();
  for (std::size_t i = 0; i < program.inputs.size(); ++i) {
    in.push_back({{"owner", program.inputs[i].node.name},
                  {"label", program.inputs[i].label},
                  {"amplitudes",
                   {{inputs[i](0).real(), inputs[i](0).imag()},
                    {inputs[i](1).real(), inputs[i](1).imag()}}}});
  }
  doc["inputs"] = std::move(in);

  Json branches = Json::array();
  for (const Branch& b : run.branches) {
    Json outcomes = Json::array();
    for (const auto& [q, bit] : b.outcomes) {
      outcomes.push_back({{"owner", q.owner.name}, {"label", q.label}, {"bit", bit}});
    }
    Json transcript = Json::array();
    for (const ClassicalRecord& r : b.transcript) {
      transcript.push_back(
          {{"from", r.from.name}, {"to", r.to.name}, {"bit", r.bit}, {"step", r.step}});
    }
    branches.push_back({{"probability", b.probability},
                        {"outcomes", std::move(outcomes)},
                        {"transcript", std::move(transcript)}});
  }
  doc["branches"] = std::move(branches);
  doc["ledger"] = to_json(run.ledger);
  return doc;
}

}  // namespace nlgate::locc
