#pragma once

#include <string>
#include <vector>

#include "serialize.hpp"

namespace affschur {

struct VerifyParams {
  std::int64_t n = 2;
  int r = 2;
  std::int64_t window = 1;
  int samples = 0;  // 0 picks the suite default
  unsigned seed = 1;
};

struct VerifyReport {
  std::string suite;
  VerifyParams params;
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::vector<json> counterexamples;  // first few failures
  std::vector<std::string> notes;
  double seconds = 0;

  bool pass() const { return failed == 0 && checks > 0; }
  void check(bool ok, const std::string& what, const json& payload = {});
  json to_json() const;
};

const std::vector<std::string>& verify_suites();
/// Throws std::invalid_argument for an unknown suite.
VerifyReport run_verify(const std::string& suite, const VerifyParams& params);

VerifyReport verify_oracle_equivalence(const VerifyParams& p);
VerifyReport verify_ring_axioms(const VerifyParams& p);
VerifyReport verify_hom_laws(const VerifyParams& p);
VerifyReport verify_semigroup_laws(const VerifyParams& p);
VerifyReport verify_mackey(const VerifyParams& p);
VerifyReport verify_lie(const VerifyParams& p);
VerifyReport verify_generators(const VerifyParams& p);

}  // namespace affschur
