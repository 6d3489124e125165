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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "soapcheck/qname.hpp"

namespace soapcheck {

/// Constraining facets collected from a simple-type restriction. Numeric
/// bounds keep their lexical form; the lowering stage parses them once the
/// base kind (integer vs float) is known, so exact 64-bit+ integer bounds
/// survive untouched.
struct FacetSet {
  std::optional<std::string> min_inclusive;
  std::optional<std::string> max_inclusive;
  std::optional<std::string> min_exclusive;
  std::optional<std::string> max_exclusive;
  std::optional<std::vector<std::string>> enumeration;
  std::optional<uint64_t> min_length;
  std::optional<uint64_t> max_length;
  std::optional<std::string> pattern;      // recorded only so lowering can reject it
  std::optional<std::string> unsupported;  // first unhandled facet name, rejected likewise

  bool empty() const {
    return !min_inclusive && !max_inclusive && !min_exclusive && !max_exclusive &&
           !enumeration && !min_length && !max_length && !pattern && !unsupported;
  }
};

struct ElementDecl {
  std::string name;
  std::string ns;            // namespace the element was declared in
  QName type;                // resolved type reference (synthetic for inline types)
  uint64_t min_occurs = 1;
  std::optional<uint64_t> max_occurs = 1;  // nullopt = unbounded
  bool global = false;       // top-level declarations are always qualified

  bool single_occurrence() const { return min_occurs == 1 && max_occurs && *max_occurs == 1; }
};

struct SimpleTypeDef {
  QName base;
  FacetSet facets;
};

struct ComplexTypeDef {
  enum class Combinator { All, Sequence, Choice };
  Combinator combinator = Combinator::Sequence;
  std::vector<ElementDecl> children;
  bool synthetic = false;  // anonymous inline type with a generated name
};

struct XsdSchema {
  std::string target_namespace;  // of the first schema section
  std::map<QName, ElementDecl> elements;
  std::map<QName, SimpleTypeDef> simple_types;
  std::map<QName, ComplexTypeDef> complex_types;
  std::set<std::string> qualified_namespaces;  // elementFormDefault="qualified"

  bool element_form_qualified(const std::string& ns) const {
    return qualified_namespaces.count(ns) != 0;
  }
  const ElementDecl* find_element(const QName& name) const;
  const SimpleTypeDef* find_simple_type(const QName& name) const;
  const ComplexTypeDef* find_complex_type(const QName& name) const;
};

enum class SoapStyle { DocumentLiteral, RpcLiteral };

struct OperationDef {
  std::string name;
  std::string soap_action;  // may be empty
  QName input_element;
  QName output_element;
  SoapStyle style = SoapStyle::DocumentLiteral;
};

/// Parsed service description: the first SOAP port of the first service,
/// its operations, and the merged schema of every inlined or imported XSD.
/// Immutable after construction; safe to share across threads.
struct WsdlModel {
  std::string service_name;
  std::string endpoint_url;
  std::vector<OperationDef> operations;
  XsdSchema schema;

  const OperationDef* find_operation(std::string_view name) const;
};

/// Resolver for xsd:import / xsd:include locations. Receives an absolute or
/// base-relative URL and returns the document text.
using FetchFn = std::function<std::string(const std::string& url)>;

/// Parses a WSDL 1.1 document.
///
/// Non-SOAP bindings are ignored; inline schema sections are merged;
/// imports/includes with a resolvable location are fetched through `fetch`
/// at most once each. Total: any input yields a model or a typed Error
/// (MalformedXml, UnsupportedWsdl, UnresolvedReference, ImportCycle).
WsdlModel parse_wsdl(std::string_view document, const std::string& base_url,
                     const FetchFn& fetch = {});

/// Resolves `relative` against a base document URL (http(s)://, mock://, or
/// a filesystem path). Absolute references pass through unchanged.
std::string resolve_reference(const std::string& base_url, const std::string& relative);

}  // namespace soapcheck
