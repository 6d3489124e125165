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

#include "soapcheck/runner.hpp"

#include <fstream>
#include <random>
#include <stdexcept>

#include "soapcheck/rng.hpp"
#include "soapcheck/soap_codec.hpp"

namespace soapcheck {

namespace {

uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<uint64_t>(rd()) << 32) ^ rd();
}

bool response_conforms(const OperationDef& op, const NamedIR& output,
                       const SoapResponseKind& r) {
  if (!r.ok()) return false;
  if (r.body_element.local != op.output_element.local ||
      r.body_element.ns != op.output_element.ns)
    return false;
  auto value = decode_element_value(output, r.body_element);
  return value && conforms(*output.ir, *value);
}

// The three-branch classification: Ok passes, Fault fails, anything else
// (malformed reply, transport trouble) fails too.
bool evaluate(const WsdlModel& model, const OperationDef& op, const NamedIR& ir,
              const NamedIR* output, Endpoint& ep, const Value& v) {
  std::string envelope = encode_request(op, model.schema, ir, v);
  HttpReply reply;
  try {
    reply = ep.post_soap(model.endpoint_url, op.soap_action, envelope);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Timeout || e.code() == ErrorCode::ConnectionFailed ||
        e.code() == ErrorCode::HttpError)
      return false;
    throw;
  }
  SoapResponseKind kind = decode_response(reply.body);
  if (kind.kind != SoapResponseKind::Kind::Ok) return false;
  if (output) return response_conforms(op, *output, kind);
  return true;
}

}  // namespace

bool evaluate_responds(const WsdlModel& model, const OperationDef& op, const NamedIR& ir,
                       Endpoint& ep, const Value& v, bool check_output_type) {
  std::optional<NamedIR> output;
  if (check_output_type) output = lower_element(model.schema, op.output_element, 1);
  return evaluate(model, op, ir, output ? &*output : nullptr, ep, v);
}

TestReport run_property(const WsdlModel& model, const OperationDef& op, const NamedIR& ir,
                        Endpoint& ep, const RunConfig& cfg, std::ostream& out,
                        const TypeIR* gen_override, const Hooks* hooks) {
  if (cfg.num_tests < 1) throw std::invalid_argument("num_tests must be at least 1");
  if (cfg.max_size < 1) throw std::invalid_argument("max_size must be at least 1");

  TestReport report;
  report.seed = cfg.seed ? *cfg.seed : entropy_seed();
  const TypeIR& gen_ir = gen_override ? *gen_override : *ir.ir;

  try {
    std::optional<NamedIR> output;
    if (cfg.check_output_type)
      output = lower_element(model.schema, op.output_element, 1);
    const NamedIR* output_ptr = output ? &*output : nullptr;

    auto with_hooks = [&](const Value& raw) {
      return hooks && !hooks->empty() ? apply_transforms(ir, raw, *hooks) : raw;
    };
    auto property_holds = [&](const Value& raw) {
      return evaluate(model, op, ir, output_ptr, ep, with_hooks(raw));
    };

    for (uint32_t i = 1; i <= cfg.num_tests; ++i) {
      GenContext ctx{derive_test_seed(report.seed, i), std::min(i, cfg.max_size)};
      // Hooks are applied inside named generation; with a genspec override
      // the tree is unnamed, so they run as a separate pass instead.
      Value raw = gen_override ? generate(gen_ir, ctx) : generate_named(ir, ctx, hooks);
      bool holds = gen_override ? property_holds(raw)
                                : evaluate(model, op, ir, output_ptr, ep, raw);

      if (holds) {
        out << "." << std::flush;
        ++report.count;
        continue;
      }

      out << "!\n";
      out << "Failed: After " << i << " test(s).\n";
      report.status = TestReport::Status::Failed;
      report.failing_test_index = i;
      report.counterexample = gen_override ? with_hooks(raw) : raw;
      report.counterexample_text = render_value(&gen_ir, report.counterexample);
      out << report.counterexample_text << "\n";

      // Greedy descent: take the first candidate that still fails, repeat.
      out << "\nShrinking ";
      Value current = raw;
      bool descended = true;
      while (descended) {
        descended = false;
        for (Value& candidate : shrink_candidates(gen_ir, current)) {
          if (!property_holds(candidate)) {
            current = std::move(candidate);
            ++report.shrink_steps;
            out << "." << std::flush;
            descended = true;
            break;
          }
        }
      }
      report.shrunk = with_hooks(current);
      report.shrunk_text = render_value(&gen_ir, report.shrunk);
      out << "(" << report.shrink_steps << " time(s))\n";
      out << report.shrunk_text << "\n";
      return report;
    }

    out << "\nOK: Passed " << report.count << " test(s).\n";
    report.status = TestReport::Status::Passed;
    return report;
  } catch (const Error& e) {
    report.status = TestReport::Status::Aborted;
    report.reason = e.what();
    out << "\nAborted: " << report.reason << "\n";
    return report;
  }
}

std::vector<std::pair<std::string, TestReport>> response_check(
    const std::string& wsdl_url, Endpoint& ep, const RunConfig& cfg, std::ostream& out,
    const ResponseCheckOptions& options) {
  std::string document = ep.fetch(wsdl_url);
  WsdlModel model = parse_wsdl(document, wsdl_url,
                               [&ep](const std::string& url) { return ep.fetch(url); });

  uint64_t run_seed = cfg.seed ? *cfg.seed : entropy_seed();
  out << "Seed: " << run_seed << "\n";

  // Lower everything up front; operations that cannot be lowered keep a
  // diagnostic and report Aborted below instead of stopping the run.
  std::vector<LoweredOperation> lowered;
  std::map<std::string, std::string> lowering_errors;
  for (const OperationDef& op : model.operations) {
    try {
      LoweredOperation one;
      one.op_name = op.name;
      one.input = lower_element(model.schema, op.input_element, 1);
      one.output = lower_element(model.schema, op.output_element, 1);
      lowered.push_back(std::move(one));
    } catch (const Error& e) {
      lowering_errors[op.name] = e.what();
    }
  }

  std::string autogen = emit(model, lowered);
  if (options.genspec_out && !options.genspec_out->empty()) {
    std::ofstream file(*options.genspec_out, std::ios::binary);
    if (!file) throw Error(ErrorCode::Internal, "cannot write " + *options.genspec_out);
    file << autogen;
  }

  std::optional<GenSpec> merged;
  if (options.overrides)
    merged = merge_overrides(parse_genspec(autogen), *options.overrides);

  std::vector<std::pair<std::string, TestReport>> reports;
  for (const OperationDef& op : model.operations) {
    if (cfg.operation_filter && op.name != *cfg.operation_filter) continue;
    out << "Testing property: prop_" << op.name << "_responds\n";

    auto failed = lowering_errors.find(op.name);
    if (failed != lowering_errors.end()) {
      TestReport report;
      report.status = TestReport::Status::Aborted;
      report.reason = failed->second;
      report.seed = run_seed;
      out << "Aborted: " << report.reason << "\n";
      reports.emplace_back(op.name, std::move(report));
      continue;
    }

    const LoweredOperation* one = nullptr;
    for (const LoweredOperation& candidate : lowered)
      if (candidate.op_name == op.name) { one = &candidate; break; }

    RunConfig op_cfg = cfg;
    op_cfg.seed = run_seed;

    std::optional<TypeIR> override_ir;
    if (merged) {
      std::string input_gen = path_id(one->input);
      for (const OperationStanza& stanza : merged->operations)
        if (stanza.op_name == op.name) { input_gen = stanza.input_gen; break; }
      try {
        override_ir = to_ir(*merged, input_gen);
      } catch (const Error& e) {
        TestReport report;
        report.status = TestReport::Status::Aborted;
        report.reason = e.what();
        report.seed = run_seed;
        out << "Aborted: " << report.reason << "\n";
        reports.emplace_back(op.name, std::move(report));
        continue;
      }
    }

    TestReport report = run_property(model, op, one->input, ep, op_cfg, out,
                                     override_ir ? &*override_ir : nullptr, options.hooks);
    reports.emplace_back(op.name, std::move(report));
  }
  return reports;
}

}  // namespace soapcheck
