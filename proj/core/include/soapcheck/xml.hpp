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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "soapcheck/error.hpp"
#include "soapcheck/qname.hpp"

namespace soapcheck {

struct XmlAttr {
  std::string name;   // raw, possibly prefixed ("xsd:type")
  std::string value;  // entity-decoded
};

/// One element of a parsed document. Namespace prefixes are resolved during
/// parsing; `ns`/`local` carry the expanded name. `scope` keeps the in-scope
/// prefix bindings so that QNames inside attribute values (schema `type=`,
/// `base=`, ...) can be resolved at their point of use.
struct XmlElement {
  std::string ns;
  std::string local;
  std::vector<XmlAttr> attrs;
  std::vector<XmlElement> children;
  std::string text;  // concatenated character data directly under this element
  std::map<std::string, std::string> scope;  // prefix -> namespace URI ("" = default)

  bool is(std::string_view nspace, std::string_view name) const {
    return ns == nspace && local == name;
  }

  const XmlElement* child(std::string_view nspace, std::string_view name) const;
  std::vector<const XmlElement*> children_of(std::string_view nspace,
                                             std::string_view name) const;

  std::optional<std::string> attr(std::string_view name) const;
  std::string attr_or(std::string_view name, std::string_view fallback) const;

  /// Resolves a prefixed or unprefixed name against this element's in-scope
  /// bindings. Unprefixed names take the default namespace, following the
  /// schema QName rules. Throws UnresolvedReference for unbound prefixes.
  QName resolve_qname(std::string_view raw) const;
};

/// Parses a complete document into an element tree.
///
/// Accepts UTF-8 (with or without BOM) and UTF-16 (BOM or declaration);
/// any other declared encoding is rejected. Throws Error(MalformedXml) on
/// anything that is not a well-formed element tree; never crashes on
/// arbitrary bytes.
XmlElement parse_xml(std::string_view bytes);

/// Escapes '&', '<', '>' (and '"' when for_attribute) for serialization.
std::string xml_escape(std::string_view text, bool for_attribute = false);

/// Appends one Unicode code point as UTF-8.
void utf8_append(std::string& out, uint32_t code_point);

}  // namespace soapcheck
