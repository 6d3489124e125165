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

#include "soapcheck/transport.hpp"

#include <httplib.h>

namespace soapcheck {

UrlParts parse_url(const std::string& url) {
  size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos)
    throw Error(ErrorCode::ConnectionFailed, "URL '" + url + "' has no scheme");
  UrlParts parts;
  parts.scheme = url.substr(0, scheme_end);
  size_t host_begin = scheme_end + 3;
  size_t path_begin = url.find('/', host_begin);
  std::string authority = url.substr(
      host_begin, path_begin == std::string::npos ? std::string::npos : path_begin - host_begin);
  parts.target = path_begin == std::string::npos ? "/" : url.substr(path_begin);
  size_t colon = authority.rfind(':');
  if (colon != std::string::npos) {
    parts.host = authority.substr(0, colon);
    try {
      parts.port = std::stoi(authority.substr(colon + 1));
    } catch (...) {
      throw Error(ErrorCode::ConnectionFailed, "bad port in URL '" + url + "'");
    }
  } else {
    parts.host = authority;
  }
  if (parts.host.empty())
    throw Error(ErrorCode::ConnectionFailed, "URL '" + url + "' has no host");
  return parts;
}

namespace {

[[noreturn]] void raise_transport(httplib::Error err, const std::string& url) {
  switch (err) {
    case httplib::Error::ConnectionTimeout:
    case httplib::Error::Read:
    case httplib::Error::Write:
      throw Error(ErrorCode::Timeout, "request to '" + url + "' timed out (" +
                                          httplib::to_string(err) + ")");
    default:
      throw Error(ErrorCode::ConnectionFailed,
                  "request to '" + url + "' failed (" + httplib::to_string(err) + ")");
  }
}

httplib::Client make_client(const UrlParts& parts, const HttpOptions& options) {
  if (parts.scheme != "http")
    throw Error(ErrorCode::ConnectionFailed,
                "unsupported URL scheme '" + parts.scheme + "' (plain http only)");
  int port = parts.port ? parts.port : 80;
  httplib::Client client(parts.host, port);
  client.set_connection_timeout(options.timeout);
  client.set_read_timeout(options.timeout);
  client.set_write_timeout(options.timeout);
  return client;
}

}  // namespace

HttpEndpoint::HttpEndpoint(HttpOptions options) : options_(options) {}

std::string HttpEndpoint::fetch(const std::string& url) {
  UrlParts parts = parse_url(url);
  httplib::Client client = make_client(parts, options_);
  client.set_follow_location(true);
  httplib::Result result = client.Get(parts.target);
  if (!result) raise_transport(result.error(), url);
  if (result->status < 200 || result->status >= 300)
    throw Error(ErrorCode::HttpError,
                "GET " + url + " returned status " + std::to_string(result->status),
                result->status);
  return result->body;
}

HttpReply HttpEndpoint::post_soap(const std::string& url, const std::string& soap_action,
                                  const std::string& envelope) {
  UrlParts parts = parse_url(url);
  httplib::Client client = make_client(parts, options_);
  // Redirects are never followed for POSTs; a redirected endpoint is a
  // service misconfiguration the report should surface.
  httplib::Headers headers{{"SOAPAction", "\"" + soap_action + "\""}};
  httplib::Result result =
      client.Post(parts.target, headers, envelope, "text/xml; charset=utf-8");
  if (!result) raise_transport(result.error(), url);
  return {result->status, result->body};
}

}  // namespace soapcheck
