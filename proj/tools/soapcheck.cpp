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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "soapcheck/genspec.hpp"
#include "soapcheck/mock_services.hpp"
#include "soapcheck/runner.hpp"
#include "soapcheck/transport.hpp"

namespace {

using namespace soapcheck;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitWsdlOrTransport = 3;

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::ConnectionFailed, "cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

/// Routes by scheme: mock:// to the bundled in-process services, http:// to
/// the network, anything without a scheme to the local filesystem.
class CliEndpoint : public Endpoint {
 public:
  std::string fetch(const std::string& url) override {
    if (url.rfind("mock://", 0) == 0) return mock_.fetch(url);
    if (url.find("://") == std::string::npos) return read_file(url);
    return http_.fetch(url);
  }

  HttpReply post_soap(const std::string& url, const std::string& soap_action,
                      const std::string& envelope) override {
    if (url.rfind("mock://", 0) == 0) return mock_.post_soap(url, soap_action, envelope);
    return http_.post_soap(url, soap_action, envelope);
  }

 private:
  InProcessEndpoint mock_;
  HttpEndpoint http_;
};

int run_generate(const std::string& wsdl, const std::string& out_path) {
  CliEndpoint ep;
  std::string document = ep.fetch(wsdl);
  WsdlModel model = parse_wsdl(document, wsdl,
                               [&ep](const std::string& url) { return ep.fetch(url); });

  std::vector<LoweredOperation> lowered;
  for (const OperationDef& op : model.operations) {
    try {
      LoweredOperation one;
      one.op_name = op.name;
      one.input = lower_element(model.schema, op.input_element, 1);
      one.output = lower_element(model.schema, op.output_element, 1);
      lowered.push_back(std::move(one));
    } catch (const Error& e) {
      std::cerr << "warning: skipping operation '" << op.name << "': " << e.what() << "\n";
    }
  }

  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return kExitWsdlOrTransport;
  }
  file << emit(model, lowered);
  std::cout << "wrote " << out_path << " (" << lowered.size() << " operation(s))\n";
  return kExitOk;
}

nlohmann::json report_to_json(const std::string& operation, const TestReport& report) {
  nlohmann::json object;
  object["operation"] = operation;
  object["seed"] = report.seed;
  switch (report.status) {
    case TestReport::Status::Passed:
      object["status"] = "passed";
      object["tests"] = report.count;
      break;
    case TestReport::Status::Failed:
      object["status"] = "failed";
      object["failing_test_index"] = report.failing_test_index;
      object["counterexample"] = report.counterexample_text;
      object["shrunk"] = report.shrunk_text;
      object["shrink_steps"] = report.shrink_steps;
      break;
    case TestReport::Status::Aborted:
      object["status"] = "aborted";
      object["reason"] = report.reason;
      break;
  }
  return object;
}

struct CheckArgs {
  std::string wsdl;
  std::string genspec_path;
  std::string op;
  uint32_t tests = 100;
  int64_t seed = 0;
  bool seed_set = false;
  bool check_output_type = false;
  bool json = false;
};

int run_check(const CheckArgs& args) {
  CliEndpoint ep;

  RunConfig cfg;
  cfg.num_tests = args.tests;
  if (args.seed_set) cfg.seed = static_cast<uint64_t>(args.seed);
  cfg.check_output_type = args.check_output_type;
  if (!args.op.empty()) cfg.operation_filter = args.op;

  GenSpec overrides;
  ResponseCheckOptions options;
  if (!args.genspec_path.empty()) {
    overrides = parse_genspec(read_file(args.genspec_path), RefValidation::Deferred);
    options.overrides = &overrides;
  } else {
    options.genspec_out = kDefaultGenSpecFilename;
  }

  std::ostream& progress = args.json ? std::cerr : std::cout;
  auto reports = response_check(args.wsdl, ep, cfg, progress, options);

  if (args.json) {
    nlohmann::json array = nlohmann::json::array();
    for (const auto& [operation, report] : reports)
      array.push_back(report_to_json(operation, report));
    std::cout << array.dump(2) << "\n";
  }

  for (const auto& [operation, report] : reports)
    if (!report.passed()) return kExitPropertyFailure;
  return kExitOk;
}

int run_serve_mock(const std::string& service_name, int port) {
  MockService service;
  if (service_name == "convertcooking") service = convert_cooking_service();
  else if (service_name == "placeorder") service = place_order_service();
  else if (service_name == "delete") service = delete_service();
  else {
    std::cerr << "error: unknown mock service '" << service_name << "'\n";
    return kExitUsage;
  }

  MockHttpServer server(std::move(service), port);
  std::cout << "serving " << service_name << " at " << server.url() << "\n"
            << "WSDL: " << server.url() << "?WSDL\n"
            << "press Ctrl-C to stop\n";
  server.wait();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"WSDL-driven property-based testing for SOAP web services"};
  app.require_subcommand(1);

  std::string wsdl;
  std::string out_path = kDefaultGenSpecFilename;
  CLI::App* generate_cmd =
      app.add_subcommand("generate", "Emit the editable generator spec for a service");
  generate_cmd->add_option("wsdl", wsdl, "WSDL URL or file path")->required();
  generate_cmd->add_option("-o,--out", out_path, "Output file")
      ->capture_default_str();

  CheckArgs check_args;
  CLI::App* check_cmd =
      app.add_subcommand("check", "Run the responds property against a live service");
  check_cmd->add_option("wsdl", check_args.wsdl, "WSDL URL or file path")->required();
  check_cmd->add_option("--genspec", check_args.genspec_path,
                        "Generator overrides (merged over the derived spec)");
  check_cmd->add_option("--op", check_args.op, "Test only this operation");
  check_cmd->add_option("--tests", check_args.tests, "Number of random tests per operation")
      ->capture_default_str();
  CLI::Option* seed_option =
      check_cmd->add_option("--seed", check_args.seed, "Run seed (default: entropy)");
  check_cmd->add_flag("--check-output-type", check_args.check_output_type,
                      "Also require responses to match the declared output type");
  check_cmd->add_flag("--json", check_args.json, "Machine-readable report on stdout");

  std::string service_name;
  int port = 8080;
  CLI::App* serve_cmd = app.add_subcommand("serve-mock", "Serve a bundled mock service over HTTP");
  serve_cmd->add_option("service", service_name, "convertcooking | placeorder | delete")
      ->required();
  serve_cmd->add_option("--port", port, "Listening port")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate_cmd) return run_generate(wsdl, out_path);
    if (*check_cmd) {
      check_args.seed_set = seed_option->count() > 0;
      return run_check(check_args);
    }
    return run_serve_mock(service_name, port);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::SyntaxError:
      case ErrorCode::UnknownName:
      case ErrorCode::CycleError:
        return kExitUsage;  // a bad genspec is a usage problem
      default:
        return kExitWsdlOrTransport;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitWsdlOrTransport;
  }
}
