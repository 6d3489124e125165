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

#include <compare>
#include <string>

namespace soapcheck {

/// Expanded XML name. Prefixes are resolved away at parse time; two names are
/// equal iff (namespace URI, local name) are equal.
struct QName {
  std::string ns;
  std::string local;

  auto operator<=>(const QName&) const = default;
  bool operator==(const QName&) const = default;

  bool empty() const { return local.empty(); }

  std::string to_string() const {
    return ns.empty() ? local : "{" + ns + "}" + local;
  }
};

inline constexpr const char* kXsdNs = "http://www.w3.org/2001/XMLSchema";
inline constexpr const char* kWsdlNs = "http://schemas.xmlsoap.org/wsdl/";
inline constexpr const char* kWsdlSoapNs = "http://schemas.xmlsoap.org/wsdl/soap/";
inline constexpr const char* kSoapEnvelopeNs = "http://schemas.xmlsoap.org/soap/envelope/";
inline constexpr const char* kXmlnsNs = "http://www.w3.org/2000/xmlns/";

}  // namespace soapcheck
