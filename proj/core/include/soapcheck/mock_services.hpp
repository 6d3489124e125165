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

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "soapcheck/genspec.hpp"
#include "soapcheck/soap_codec.hpp"
#include "soapcheck/transport.hpp"

namespace soapcheck {

/// What a mock handler returns: a serialized response body element, or a
/// fault that rides on HTTP 500.
struct MockReply {
  bool is_fault = false;
  std::string body_xml;
  SoapFault fault;

  static MockReply ok(std::string body_xml);
  static MockReply server_fault(std::string message);
  static MockReply client_fault(std::string message);
};

/// An in-process SOAP service: a WSDL document plus a total handler over
/// decoded input values. The same handler backs both the direct in-process
/// dispatch and the optional HTTP listener.
struct MockService {
  std::string name;  // URL host part, e.g. "delete" for mock://delete
  std::string wsdl_template;  // @ENDPOINT@ placeholder for the address
  std::function<MockReply(const std::string& op_name, const Value& input)> handler;

  WsdlModel model;  // parsed against the mock:// endpoint
  std::vector<LoweredOperation> lowered;

  std::string mock_url() const { return "mock://" + name; }
  std::string wsdl_with_endpoint(const std::string& endpoint_url) const;
};

/// The cooking-unit conversion service: one operation over a double and two
/// enumeration fields; always responds.
MockService convert_cooking_service();

/// The order service over the nested product/shipping schema; validates
/// structure and faults on out-of-schema requests.
MockService place_order_service();

/// The buggy string-delete service: removes the first occurrence of c's
/// first character from `in`, and faults when c is empty.
MockService delete_service();

/// Runs a request envelope through a mock's handler: 200 + response
/// envelope, or 500 + fault envelope (also for undecodable requests).
HttpReply dispatch_soap(const MockService& service, const std::string& envelope);

/// Endpoint over the bundled mocks, addressed as mock://<name>; fetch
/// serves the WSDL for any path ending in ?WSDL.
class InProcessEndpoint : public Endpoint {
 public:
  InProcessEndpoint();  // registers the three bundled services

  void add(MockService service);

  std::string fetch(const std::string& url) override;
  HttpReply post_soap(const std::string& url, const std::string& soap_action,
                      const std::string& envelope) override;

 private:
  const MockService& service_for(const std::string& url) const;
  std::map<std::string, MockService> services_;
};

/// Serves one mock over real HTTP; WSDL at GET <path>?WSDL, SOAP at POST.
class MockHttpServer {
 public:
  /// port 0 binds an ephemeral port.
  explicit MockHttpServer(MockService service, int port = 0);
  ~MockHttpServer();

  MockHttpServer(const MockHttpServer&) = delete;
  MockHttpServer& operator=(const MockHttpServer&) = delete;

  /// Endpoint URL, e.g. http://127.0.0.1:8080/delete
  const std::string& url() const { return url_; }
  int port() const { return port_; }

  /// Blocks until stop() is called (or the process is interrupted).
  void wait();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::string url_;
  int port_ = 0;
};

}  // namespace soapcheck
