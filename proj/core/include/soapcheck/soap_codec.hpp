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

#include <optional>
#include <string>
#include <string_view>

#include "soapcheck/generate.hpp"
#include "soapcheck/schema_model.hpp"
#include "soapcheck/type_ir.hpp"
#include "soapcheck/xml.hpp"

namespace soapcheck {

struct SoapFault {
  std::string fault_code;
  std::string fault_string;
  std::optional<std::string> detail;
};

/// Classification of a service response: a decoded body element, a SOAP 1.1
/// Fault, or something that is not a SOAP message at all.
struct SoapResponseKind {
  enum class Kind { Ok, Fault, Malformed };

  Kind kind = Kind::Malformed;
  XmlElement body_element;  // Ok: first child of the Body
  SoapFault fault;          // Fault
  std::string reason;       // Malformed

  bool ok() const { return kind == Kind::Ok; }

  static SoapResponseKind make_ok(XmlElement body);
  static SoapResponseKind make_fault(SoapFault fault);
  static SoapResponseKind make_malformed(std::string reason);
};

/// Serializes a conforming Value as a SOAP 1.1 request envelope.
///
/// Document-literal requests wrap the payload under the operation's input
/// element; rpc-literal under the operation name. As-text scalars render as
/// decimal text (shortest round-trip form for floats), character-string
/// lists as their text with XML escaping, occurrence lists as repeated
/// elements, and a choice emits only the chosen alternative. Values that do
/// not fit the tree structurally raise ShapeMismatch.
std::string encode_request(const OperationDef& op, const XsdSchema& schema,
                           const NamedIR& ir, const Value& v);

/// Total response classifier; never throws. Anything that is not
/// well-formed XML with a SOAP envelope and body is Malformed; a body whose
/// first child is a SOAP 1.1 Fault becomes Fault; everything else is Ok.
SoapResponseKind decode_response(std::string_view body);

/// Checks that an Ok response's body is the operation's declared output
/// element and decodes into a value conforming to its lowered type.
/// Fault/Malformed responses are false. Never throws.
bool validate_response_type(const OperationDef& op, const XsdSchema& schema,
                            const SoapResponseKind& r);

/// Decodes one XML element against a lowered tree. Returns nullopt when the
/// content does not fit.
std::optional<Value> decode_element_value(const NamedIR& ir, const XmlElement& elem);

/// Extracts the input Value from a request envelope; the codec-level inverse
/// of encode_request. Used by the mock services and round-trip checks.
std::optional<Value> decode_request_value(const OperationDef& op, const XsdSchema& schema,
                                          const NamedIR& ir, std::string_view envelope);

/// Builds a response/fault envelope around pre-serialized body content.
std::string envelope_around(std::string_view body_content);
std::string fault_envelope(const SoapFault& fault);

}  // namespace soapcheck
