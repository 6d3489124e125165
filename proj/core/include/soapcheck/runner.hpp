// Copyright 2026 The soapcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "soapcheck/generate.hpp"
#include "soapcheck/genspec.hpp"
#include "soapcheck/transport.hpp"

namespace soapcheck {

struct RunConfig {
  uint32_t num_tests = 100;
  std::optional<uint64_t> seed;  // drawn from entropy when absent; always reported
  uint32_t max_size = 42;
  bool check_output_type = false;
  std::optional<std::string> operation_filter;
};

/// Result of running the responds property for one operation.
struct TestReport {
  enum class Status { Passed, Failed, Aborted };

  Status status = Status::Passed;
  uint64_t seed = 0;              // the run seed actually used
  uint32_t count = 0;             // tests passed
  uint32_t failing_test_index = 0;  // 1-based; Failed only
  Value counterexample;
  Value shrunk;
  uint32_t shrink_steps = 0;      // successful shrink descents
  std::string counterexample_text;
  std::string shrunk_text;
  std::string reason;             // Aborted only

  bool passed() const { return status == Status::Passed; }
};

/// One evaluation of the responds property: encode `v`, post it, classify
/// the reply. Ok passes (and must additionally type-check when
/// check_output_type), Fault/Malformed/transport errors fail. Throws only
/// on generator/schema inconsistencies (ShapeMismatch).
bool evaluate_responds(const WsdlModel& model, const OperationDef& op, const NamedIR& ir,
                       Endpoint& ep, const Value& v, bool check_output_type = false);

/// Runs the auto-derived responds property for one operation: num_tests
/// generated requests at sizes min(i, max_size) with per-test seeds
/// mix64(run_seed ^ i*golden), then greedy shrinking on the first failure.
///
/// `gen_override` substitutes the generator (from a merged genspec) while
/// encoding still follows the WSDL-lowered `ir`; `hooks` are applied after
/// generation and after every shrink step.
///
/// Progress goes to `out`: a dot per passing test, then the summary lines.
TestReport run_property(const WsdlModel& model, const OperationDef& op, const NamedIR& ir,
                        Endpoint& ep, const RunConfig& cfg, std::ostream& out = std::cout,
                        const TypeIR* gen_override = nullptr, const Hooks* hooks = nullptr);

struct ResponseCheckOptions {
  std::optional<std::string> genspec_out;  // side-artifact path; unset = skip
  const GenSpec* overrides = nullptr;      // merged over the emitted spec
  const Hooks* hooks = nullptr;
};

/// The whole pipeline for one service: fetch + parse the WSDL, lower every
/// operation, emit the generator spec, then run the responds property per
/// operation (in declaration order, honoring cfg.operation_filter).
/// Operations whose lowering fails yield Aborted reports instead of
/// failing the run.
std::vector<std::pair<std::string, TestReport>> response_check(
    const std::string& wsdl_url, Endpoint& ep, const RunConfig& cfg,
    std::ostream& out = std::cout, const ResponseCheckOptions& options = {});

}  // namespace soapcheck
