// Copyright 2026 The qinv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qinv {

/// Outcome of one seeded randomized suite.
struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool pass() const { return cases > 0 && failures == 0; }
};

/// Products of quasi-invariants and invariant multiples stay quasi-invariant.
SuiteResult suite_ring_closure(uint64_t seed, int cases);
/// (1 - s_H)p divisible by alpha^{m n} iff every idempotent image is, with the one-step strengthening.
SuiteResult suite_idempotent_equivalence(uint64_t seed, int cases);
/// The finite-difference chain agrees with the direct shift conditions.
SuiteResult suite_delta_chain(uint64_t seed, int cases);
/// Theta^{-1} Theta = id on Hom spaces and rho restricts to the identity on tuples.
SuiteResult suite_transport_round_trip(uint64_t seed, int cases);
/// The affine deconing example is free while its cone is not.
SuiteResult suite_deconing(uint64_t seed, int cases);

std::vector<std::string> suite_names();
/// Throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, uint64_t seed, int cases);

}  // namespace qinv
