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

#include <chrono>
#include <string>

#include "soapcheck/error.hpp"

namespace soapcheck {

struct HttpReply {
  int status = 0;  // 100..599
  std::string body;
};

/// Where envelopes go and WSDL documents come from. One endpoint serves one
/// logical thread at a time; implementations may be handed between threads.
class Endpoint {
 public:
  virtual ~Endpoint() = default;

  /// GET (with redirects); returns the body on 2xx. Throws HttpError,
  /// ConnectionFailed or Timeout.
  virtual std::string fetch(const std::string& url) = 0;

  /// POSTs an envelope with Content-Type text/xml and the quoted SOAPAction
  /// header. HTTP 500 replies are returned normally (SOAP 1.1 Faults ride on
  /// 500); only transport-level problems throw.
  virtual HttpReply post_soap(const std::string& url, const std::string& soap_action,
                              const std::string& envelope) = 0;
};

struct HttpOptions {
  std::chrono::seconds timeout{30};
};

/// Real HTTP/1.1 client endpoint. No retries: a flaky service failing a test
/// is signal in this tool's model, not noise.
class HttpEndpoint : public Endpoint {
 public:
  explicit HttpEndpoint(HttpOptions options = {});

  std::string fetch(const std::string& url) override;
  HttpReply post_soap(const std::string& url, const std::string& soap_action,
                      const std::string& envelope) override;

 private:
  HttpOptions options_;
};

/// Splits a URL into scheme://host:port and path?query parts.
struct UrlParts {
  std::string scheme;
  std::string host;
  int port = 0;  // 0 = scheme default
  std::string target;  // path + query, at least "/"
};
UrlParts parse_url(const std::string& url);

}  // namespace soapcheck
