#include "helpers.hpp"
#include "nlgate/locc/serialize.hpp"
#include "nlgate/protocols/protocols.hpp"

using namespace nlgate;
using namespace nlgate::locc;

TEST_CASE("run export carries the exact schema", "[serialize]") {
  const protocols::Protocol p = protocols::nonlocal_cnot();
  const std::vector<Eigen::Vector2cd> inputs{testutil::ket_plus(), testutil::ket0()};
  const RunResult run = run_protocol(p.program, inputs);
  const Json doc = to_json(run, p.program, inputs);

  const std::vector<std::string> top{"protocol", "inputs", "branches", "ledger"};
  std::size_t i = 0;
  for (const auto& [key, _] : doc.items()) {
    REQUIRE(i < top.size());
    CHECK(key == top[i++]);
  }

  CHECK(doc["protocol"] == "nonlocal_cnot");
  REQUIRE(doc["inputs"].size() == 2);
  CHECK(doc["inputs"][0]["owner"] == "Alice");
  CHECK(doc["inputs"][0]["label"] == "A");
  CHECK(doc["inputs"][0]["amplitudes"].size() == 2);

  REQUIRE(doc["branches"].size() == 4);
  for (const auto& branch : doc["branches"]) {
    CHECK(branch.contains("probability"));
    CHECK(branch.contains("outcomes"));
    CHECK(branch.contains("transcript"));
    for (const auto& record : branch["transcript"]) {
      CHECK(record.contains("from"));
      CHECK(record.contains("to"));
      CHECK(record.contains("bit"));
      CHECK(record.contains("step"));
    }
    for (const auto& outcome : branch["outcomes"]) {
      CHECK(outcome.contains("owner"));
      CHECK(outcome.contains("label"));
      CHECK(outcome.contains("bit"));
    }
  }

  CHECK(doc["ledger"]["ebits"] == 1);
  REQUIRE(doc["ledger"]["bits"].size() == 2);
  CHECK(doc["ledger"]["bits"][0]["from"] == "Alice");
  CHECK(doc["ledger"]["bits"][0]["to"] == "Bob");
  CHECK(doc["ledger"]["bits"][0]["count"] == 1);
}

TEST_CASE("serialization is byte-stable across repeated runs", "[serialize]") {
  const protocols::Protocol p = protocols::nonlocal_toffoli();
  std::vector<Eigen::Vector2cd> inputs;
  qstate::Rng rng(31);
  for (int i = 0; i < 3; ++i) inputs.push_back(qstate::random_qubit(rng));

  const std::string first = to_json(run_protocol(p.program, inputs), p.program, inputs).dump();
  const std::string second = to_json(run_protocol(p.program, inputs), p.program, inputs).dump();
  CHECK(first == second);
}

TEST_CASE("every conditional on a remote bit is preceded by a matching send", "[serialize]") {
  // transcript-level no-signalling audit over the protocol repertoire
  qstate::Rng rng(37);
  const std::vector<protocols::Protocol> repertoire{
      protocols::nonlocal_cnot(),
      protocols::nonlocal_control_u(qstate::random_unitary(2, rng)),
      protocols::teleport(),
      protocols::nonlocal_swap(),
      protocols::nonlocal_toffoli(),
      protocols::nonlocal_n_party_control_u(4, qstate::random_unitary(2, rng)),
  };
  for (const auto& p : repertoire) {
    std::map<int, NodeId> measured_at;   // slot -> origin node
    std::map<int, std::set<std::string>> delivered;  // slot -> nodes reached
    for (const Instruction& instr : p.program.instructions) {
      if (const auto* m = std::get_if<MeasureQubit>(&instr)) {
        measured_at.emplace(m->slot, m->node);
      } else if (const auto* s = std::get_if<SendBit>(&instr)) {
        delivered[s->slot].insert(s->to.name);
      } else if (const auto* c = std::get_if<ConditionalApply>(&instr)) {
        if (measured_at.at(c->slot) != c->node) {
          INFO(p.name);
          CHECK(delivered[c->slot].count(c->node.name) == 1);
        }
      }
    }
  }
}
