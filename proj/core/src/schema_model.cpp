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

#include "soapcheck/schema_model.hpp"

#include <charconv>
#include <functional>

#include "soapcheck/xml.hpp"

namespace soapcheck {

namespace {

constexpr const char* kWsdl20Ns = "http://www.w3.org/ns/wsdl";

uint64_t parse_occurs(const std::string& text, const char* attr) {
  uint64_t value = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || p != text.data() + text.size())
    throw Error(ErrorCode::UnsupportedWsdl,
                std::string("bad ") + attr + " value '" + text + "'");
  return value;
}

struct MessagePart {
  std::string name;
  QName element;  // empty when the part is type-based
  QName type;
};

struct PortTypeOp {
  std::string name;
  QName input_message;
  QName output_message;
};

struct BindingOp {
  std::string name;
  std::string soap_action;
  SoapStyle style;
};

struct SoapBinding {
  QName port_type;
  SoapStyle default_style = SoapStyle::DocumentLiteral;
  std::vector<BindingOp> operations;
};

class WsdlParser {
 public:
  WsdlParser(const std::string& base_url, const FetchFn& fetch)
      : base_url_(base_url), fetch_(fetch) {}

  WsdlModel parse(std::string_view document) {
    XmlElement root = parse_xml(document);
    if (root.is(kWsdl20Ns, "description"))
      throw Error(ErrorCode::UnsupportedWsdl, "WSDL 2.0 is not supported");
    if (!root.is(kWsdlNs, "definitions"))
      throw Error(ErrorCode::UnsupportedWsdl,
                  "root element is not wsdl:definitions (found '" + root.local + "')");

    if (const XmlElement* types = root.child(kWsdlNs, "types")) {
      for (const XmlElement& schema : types->children)
        if (schema.is(kXsdNs, "schema")) parse_schema(schema, base_url_);
    }
    for (const XmlElement& child : root.children) {
      if (child.is(kWsdlNs, "message")) parse_message(child, root);
      else if (child.is(kWsdlNs, "portType")) parse_port_type(child, root);
      else if (child.is(kWsdlNs, "binding")) parse_binding(child, root);
    }

    WsdlModel model;
    select_service(root, model);  // may synthesize rpc wrapper elements
    model.schema = std::move(schema_);
    validate(model);
    return model;
  }

 private:
  std::string base_url_;
  FetchFn fetch_;
  XsdSchema schema_;
  std::map<QName, std::vector<MessagePart>> messages_;
  std::map<QName, std::vector<PortTypeOp>> port_types_;
  std::map<QName, SoapBinding> bindings_;
  std::set<std::string> imports_done_;
  std::set<std::string> imports_in_flight_;

  // ---- schema ----

  void parse_schema(const XmlElement& schema, const std::string& doc_url) {
    std::string tns = schema.attr_or("targetNamespace", "");
    if (schema_.target_namespace.empty()) schema_.target_namespace = tns;
    if (schema.attr_or("elementFormDefault", "unqualified") == "qualified")
      schema_.qualified_namespaces.insert(tns);

    for (const XmlElement& child : schema.children) {
      if (child.ns != kXsdNs) continue;
      if (child.local == "element") {
        ElementDecl decl = parse_element_decl(child, tns, /*path=*/"", /*global=*/true);
        add_element(decl);
      } else if (child.local == "simpleType") {
        std::string name = require_name(child);
        add_simple_type({tns, name}, parse_simple_type(child));
      } else if (child.local == "complexType") {
        std::string name = require_name(child);
        add_complex_type({tns, name}, parse_complex_type(child, tns, name), false);
      } else if (child.local == "import" || child.local == "include") {
        follow_import(child, doc_url);
      }
      // annotation, attribute declarations etc. are ignored
    }
  }

  void follow_import(const XmlElement& node, const std::string& doc_url) {
    auto location = node.attr("schemaLocation");
    if (!location || !fetch_) return;  // namespace-only imports carry no document
    std::string url = resolve_reference(doc_url, *location);
    if (imports_done_.count(url)) return;
    if (imports_in_flight_.count(url))
      throw Error(ErrorCode::ImportCycle, "schema import cycle through '" + url + "'");
    imports_in_flight_.insert(url);
    std::string text = fetch_(url);
    XmlElement imported = parse_xml(text);
    if (!imported.is(kXsdNs, "schema"))
      throw Error(ErrorCode::UnsupportedWsdl,
                  "imported document '" + url + "' is not an XSD schema");
    parse_schema(imported, url);
    imports_in_flight_.erase(url);
    imports_done_.insert(url);
  }

  static std::string require_name(const XmlElement& node) {
    auto name = node.attr("name");
    if (!name || name->empty())
      throw Error(ErrorCode::UnsupportedWsdl, "anonymous top-level " + node.local);
    return *name;
  }

  ElementDecl parse_element_decl(const XmlElement& node, const std::string& tns,
                                 const std::string& path, bool global) {
    if (auto ref = node.attr("ref")) {
      // Reference to a global element: resolved later, after all schema
      // sections are in; occurrence attributes belong to the reference site.
      ElementDecl decl;
      decl.name = "\xFF" + node.resolve_qname(*ref).to_string();  // placeholder, patched in validate()
      decl.ns = node.resolve_qname(*ref).ns;
      decl.type = node.resolve_qname(*ref);
      decl.min_occurs = occurs_of(node, "minOccurs", 1);
      decl.max_occurs = max_occurs_of(node);
      decl.global = false;
      return decl;
    }

    ElementDecl decl;
    auto name = node.attr("name");
    if (!name || name->empty())
      throw Error(ErrorCode::UnsupportedWsdl, "element without a name");
    decl.name = *name;
    decl.ns = tns;
    decl.global = global;
    decl.min_occurs = occurs_of(node, "minOccurs", 1);
    decl.max_occurs = max_occurs_of(node);
    if (decl.max_occurs && decl.min_occurs > *decl.max_occurs)
      throw Error(ErrorCode::UnsupportedWsdl,
                  "minOccurs > maxOccurs on element '" + decl.name + "'");

    std::string child_path = path.empty() ? decl.name : path + "$" + decl.name;
    if (auto type = node.attr("type")) {
      decl.type = node.resolve_qname(*type);
    } else if (const XmlElement* anon = node.child(kXsdNs, "complexType")) {
      QName synthetic{tns, "$" + child_path};
      add_complex_type(synthetic, parse_complex_type(*anon, tns, child_path), true);
      decl.type = synthetic;
    } else if (const XmlElement* anon_simple = node.child(kXsdNs, "simpleType")) {
      QName synthetic{tns, "$" + child_path};
      add_simple_type(synthetic, parse_simple_type(*anon_simple));
      decl.type = synthetic;
    } else {
      throw Error(ErrorCode::UnsupportedWsdl,
                  "element '" + decl.name + "' has neither a type nor an inline definition");
    }
    return decl;
  }

  static uint64_t occurs_of(const XmlElement& node, const char* attr, uint64_t fallback) {
    auto v = node.attr(attr);
    return v ? parse_occurs(*v, attr) : fallback;
  }

  static std::optional<uint64_t> max_occurs_of(const XmlElement& node) {
    auto v = node.attr("maxOccurs");
    if (!v) return 1;
    if (*v == "unbounded") return std::nullopt;
    return parse_occurs(*v, "maxOccurs");
  }

  ComplexTypeDef parse_complex_type(const XmlElement& node, const std::string& tns,
                                    const std::string& path) {
    ComplexTypeDef def;
    const XmlElement* group = nullptr;
    for (const XmlElement& child : node.children) {
      if (child.ns != kXsdNs || child.local == "annotation") continue;
      if (child.local == "sequence" || child.local == "all" || child.local == "choice") {
        if (group)
          throw Error(ErrorCode::UnsupportedWsdl, "multiple model groups in one complex type");
        group = &child;
        def.combinator = child.local == "choice"  ? ComplexTypeDef::Combinator::Choice
                         : child.local == "all"   ? ComplexTypeDef::Combinator::All
                                                  : ComplexTypeDef::Combinator::Sequence;
      } else if (child.local == "complexContent" || child.local == "simpleContent") {
        throw Error(ErrorCode::UnsupportedWsdl,
                    "complex type derivation (" + child.local + ") is not supported");
      } else if (child.local == "attribute" || child.local == "anyAttribute") {
        throw Error(ErrorCode::UnsupportedWsdl, "XSD attributes are not supported");
      } else {
        throw Error(ErrorCode::UnsupportedWsdl,
                    "unsupported construct '" + child.local + "' in complex type");
      }
    }
    if (!group) return def;  // empty content model

    for (const XmlElement& child : group->children) {
      if (child.ns != kXsdNs || child.local == "annotation") continue;
      if (child.local != "element")
        throw Error(ErrorCode::UnsupportedWsdl,
                    "unsupported particle '" + child.local + "' (nested model groups "
                    "and wildcards are not handled)");
      ElementDecl decl = parse_element_decl(child, tns, path, /*global=*/false);
      if (decl.max_occurs && *decl.max_occurs == 0) continue;  // prohibited particle
      def.children.push_back(std::move(decl));
    }
    return def;
  }

  SimpleTypeDef parse_simple_type(const XmlElement& node) {
    const XmlElement* restriction = node.child(kXsdNs, "restriction");
    if (!restriction) {
      if (node.child(kXsdNs, "list") || node.child(kXsdNs, "union"))
        throw Error(ErrorCode::UnsupportedWsdl, "xsd:list / xsd:union simple types are not supported");
      throw Error(ErrorCode::UnsupportedWsdl, "simple type without a restriction");
    }
    SimpleTypeDef def;
    auto base = restriction->attr("base");
    if (!base)
      throw Error(ErrorCode::UnsupportedWsdl, "restriction without a base type");
    def.base = restriction->resolve_qname(*base);

    auto set_once = [](std::optional<std::string>& slot, const std::string& value,
                       const char* facet) {
      if (slot)
        throw Error(ErrorCode::UnsupportedWsdl, std::string("duplicate facet ") + facet);
      slot = value;
    };

    for (const XmlElement& facet : restriction->children) {
      if (facet.ns != kXsdNs || facet.local == "annotation") continue;
      std::string value = facet.attr_or("value", "");
      if (facet.local == "minInclusive") set_once(def.facets.min_inclusive, value, "minInclusive");
      else if (facet.local == "maxInclusive") set_once(def.facets.max_inclusive, value, "maxInclusive");
      else if (facet.local == "minExclusive") set_once(def.facets.min_exclusive, value, "minExclusive");
      else if (facet.local == "maxExclusive") set_once(def.facets.max_exclusive, value, "maxExclusive");
      else if (facet.local == "enumeration") {
        if (!def.facets.enumeration) def.facets.enumeration.emplace();
        def.facets.enumeration->push_back(value);
      } else if (facet.local == "minLength") {
        def.facets.min_length = parse_occurs(value, "minLength");
      } else if (facet.local == "maxLength") {
        def.facets.max_length = parse_occurs(value, "maxLength");
      } else if (facet.local == "pattern") {
        def.facets.pattern = value;
      } else if (facet.local == "whiteSpace") {
        // normalization hint only; harmless to drop
      } else if (!def.facets.unsupported) {
        // Recorded rather than rejected: lowering raises UnsupportedFacet so
        // that only operations actually using this type abort.
        def.facets.unsupported = facet.local;
      }
    }
    if (def.facets.min_inclusive && def.facets.min_exclusive)
      throw Error(ErrorCode::UnsupportedWsdl, "both minInclusive and minExclusive present");
    if (def.facets.max_inclusive && def.facets.max_exclusive)
      throw Error(ErrorCode::UnsupportedWsdl, "both maxInclusive and maxExclusive present");
    return def;
  }

  void add_element(const ElementDecl& decl) {
    QName key{decl.ns, decl.name};
    if (!schema_.elements.emplace(key, decl).second)
      throw Error(ErrorCode::UnsupportedWsdl, "duplicate element " + key.to_string());
  }

  void add_simple_type(const QName& name, SimpleTypeDef def) {
    if (schema_.complex_types.count(name) || !schema_.simple_types.emplace(name, std::move(def)).second)
      throw Error(ErrorCode::UnsupportedWsdl, "duplicate type " + name.to_string());
  }

  void add_complex_type(const QName& name, ComplexTypeDef def, bool synthetic) {
    def.synthetic = synthetic;
    if (schema_.simple_types.count(name) || !schema_.complex_types.emplace(name, std::move(def)).second)
      throw Error(ErrorCode::UnsupportedWsdl, "duplicate type " + name.to_string());
  }

  // ---- wsdl sections ----

  void parse_message(const XmlElement& node, const XmlElement& root) {
    QName key{root.attr_or("targetNamespace", ""), require_name(node)};
    std::vector<MessagePart> parts;
    for (const XmlElement* part : node.children_of(kWsdlNs, "part")) {
      MessagePart p;
      p.name = part->attr_or("name", "");
      if (auto element = part->attr("element")) p.element = part->resolve_qname(*element);
      else if (auto type = part->attr("type")) p.type = part->resolve_qname(*type);
      else
        throw Error(ErrorCode::UnsupportedWsdl,
                    "message part '" + p.name + "' has neither element nor type");
      parts.push_back(std::move(p));
    }
    messages_[key] = std::move(parts);
  }

  void parse_port_type(const XmlElement& node, const XmlElement& root) {
    QName key{root.attr_or("targetNamespace", ""), require_name(node)};
    std::vector<PortTypeOp> ops;
    for (const XmlElement* op : node.children_of(kWsdlNs, "operation")) {
      const XmlElement* input = op->child(kWsdlNs, "input");
      const XmlElement* output = op->child(kWsdlNs, "output");
      if (!input || !output) continue;  // one-way and notification operations are skipped
      PortTypeOp pto;
      pto.name = op->attr_or("name", "");
      auto in_msg = input->attr("message");
      auto out_msg = output->attr("message");
      if (!in_msg || !out_msg)
        throw Error(ErrorCode::UnsupportedWsdl, "operation '" + pto.name + "' lacks a message reference");
      pto.input_message = input->resolve_qname(*in_msg);
      pto.output_message = output->resolve_qname(*out_msg);
      ops.push_back(std::move(pto));
    }
    port_types_[key] = std::move(ops);
  }

  void parse_binding(const XmlElement& node, const XmlElement& root) {
    const XmlElement* soap = node.child(kWsdlSoapNs, "binding");
    if (!soap) return;  // HTTP/MIME bindings are ignored
    SoapBinding binding;
    auto type = node.attr("type");
    if (!type) throw Error(ErrorCode::UnsupportedWsdl, "binding without a portType reference");
    binding.port_type = node.resolve_qname(*type);
    binding.default_style = style_of(soap->attr_or("style", "document"));

    for (const XmlElement* op : node.children_of(kWsdlNs, "operation")) {
      BindingOp bop;
      bop.name = op->attr_or("name", "");
      bop.style = binding.default_style;
      if (const XmlElement* soap_op = op->child(kWsdlSoapNs, "operation")) {
        bop.soap_action = soap_op->attr_or("soapAction", "");
        if (auto style = soap_op->attr("style")) bop.style = style_of(*style);
      }
      if (const XmlElement* input = op->child(kWsdlNs, "input")) {
        if (const XmlElement* body = input->child(kWsdlSoapNs, "body")) {
          if (body->attr_or("use", "literal") != "literal")
            throw Error(ErrorCode::UnsupportedWsdl, "only literal use is supported");
        }
      }
      binding.operations.push_back(std::move(bop));
    }
    QName key{root.attr_or("targetNamespace", ""), require_name(node)};
    bindings_[key] = std::move(binding);
  }

  static SoapStyle style_of(const std::string& text) {
    if (text == "document") return SoapStyle::DocumentLiteral;
    if (text == "rpc") return SoapStyle::RpcLiteral;
    throw Error(ErrorCode::UnsupportedWsdl, "unknown SOAP style '" + text + "'");
  }

  // Picks the first SOAP port of the first service and assembles operations.
  void select_service(const XmlElement& root, WsdlModel& model) {
    const XmlElement* service = root.child(kWsdlNs, "service");
    if (!service)
      throw Error(ErrorCode::UnsupportedWsdl, "document declares no service");
    model.service_name = service->attr_or("name", "");

    const SoapBinding* binding = nullptr;
    for (const XmlElement* port : service->children_of(kWsdlNs, "port")) {
      auto binding_ref = port->attr("binding");
      if (!binding_ref) continue;
      auto it = bindings_.find(port->resolve_qname(*binding_ref));
      if (it == bindings_.end()) continue;  // non-SOAP binding
      const XmlElement* address = port->child(kWsdlSoapNs, "address");
      if (!address) continue;
      model.endpoint_url = address->attr_or("location", "");
      binding = &it->second;
      break;
    }
    if (!binding)
      throw Error(ErrorCode::UnsupportedWsdl, "no SOAP binding found");
    if (model.endpoint_url.find("://") == std::string::npos)
      throw Error(ErrorCode::UnsupportedWsdl,
                  "soap:address location '" + model.endpoint_url + "' is not absolute");

    auto port_type = port_types_.find(binding->port_type);
    if (port_type == port_types_.end())
      throw Error(ErrorCode::UnresolvedReference,
                  "portType " + binding->port_type.to_string() + " not found");

    for (const BindingOp& bop : binding->operations) {
      const PortTypeOp* pto = nullptr;
      for (const PortTypeOp& candidate : port_type->second)
        if (candidate.name == bop.name) { pto = &candidate; break; }
      if (!pto) continue;  // binding entry for a one-way operation we skipped

      OperationDef op;
      op.name = bop.name;
      op.soap_action = bop.soap_action;
      op.style = bop.style;
      op.input_element = message_element(pto->input_message, op, /*is_input=*/true);
      op.output_element = message_element(pto->output_message, op, /*is_input=*/false);
      for (const OperationDef& existing : model.operations)
        if (existing.name == op.name)
          throw Error(ErrorCode::UnsupportedWsdl, "duplicate operation '" + op.name + "'");
      model.operations.push_back(std::move(op));
    }
  }

  /// Returns the schema element a message resolves to. Document style
  /// requires a single element part. RPC style gets a synthesized wrapper
  /// element, named after the operation, whose children are the parts.
  QName message_element(const QName& message, const OperationDef& op, bool is_input) {
    auto it = messages_.find(message);
    if (it == messages_.end())
      throw Error(ErrorCode::UnresolvedReference, "message " + message.to_string() + " not found");
    const std::vector<MessagePart>& parts = it->second;

    if (op.style == SoapStyle::DocumentLiteral) {
      if (parts.size() != 1 || parts[0].element.empty())
        throw Error(ErrorCode::UnsupportedWsdl,
                    "document-literal message " + message.to_string() +
                    " must have exactly one element part");
      return parts[0].element;
    }

    // rpc-literal: wrapper <opName> (input) / <opNameResponse> (output).
    std::string wrapper_name = is_input ? op.name : op.name + "Response";
    QName wrapper{schema_.target_namespace, wrapper_name};
    while (schema_.elements.count(wrapper) || schema_.complex_types.count(wrapper))
      wrapper.local += "_";
    ComplexTypeDef body;
    for (const MessagePart& part : parts) {
      ElementDecl child;
      if (!part.element.empty()) {
        auto target = schema_.elements.find(part.element);
        if (target == schema_.elements.end())
          throw Error(ErrorCode::UnresolvedReference,
                      "part element " + part.element.to_string() + " not found");
        child = target->second;
        child.global = false;
      } else {
        child.name = part.name;
        child.ns = "";  // rpc part accessors are unqualified
        child.type = part.type;
      }
      child.min_occurs = 1;
      child.max_occurs = 1;
      body.children.push_back(std::move(child));
    }
    QName type_name{wrapper.ns, "$" + wrapper.local};
    add_complex_type(type_name, std::move(body), true);
    ElementDecl decl;
    decl.name = wrapper.local;
    decl.ns = wrapper.ns;
    decl.type = type_name;
    decl.global = true;
    add_element(decl);
    return wrapper;
  }

  // ---- validation ----

  void validate(WsdlModel& model) {
    // Patch up element references now that every schema section is merged.
    for (auto& [name, type] : model.schema.complex_types) {
      for (ElementDecl& child : type.children) {
        if (child.name.empty() || child.name[0] != '\xFF') continue;
        auto target = model.schema.elements.find(child.type);
        if (target == model.schema.elements.end())
          throw Error(ErrorCode::UnresolvedReference,
                      "element reference " + child.type.to_string() + " not found");
        uint64_t min = child.min_occurs;
        std::optional<uint64_t> max = child.max_occurs;
        child = target->second;
        child.global = true;  // referenced global elements stay qualified
        child.min_occurs = min;
        child.max_occurs = max;
      }
    }

    for (const auto& [name, type] : model.schema.complex_types)
      for (const ElementDecl& child : type.children) check_type_ref(model.schema, child.type);
    for (const auto& [name, decl] : model.schema.elements) check_type_ref(model.schema, decl.type);
    for (const auto& [name, def] : model.schema.simple_types) check_type_ref(model.schema, def.base);

    for (const OperationDef& op : model.operations) {
      if (!model.schema.elements.count(op.input_element))
        throw Error(ErrorCode::UnresolvedReference,
                    "input element " + op.input_element.to_string() + " of operation '" +
                    op.name + "' not declared in schema");
      if (!model.schema.elements.count(op.output_element))
        throw Error(ErrorCode::UnresolvedReference,
                    "output element " + op.output_element.to_string() + " of operation '" +
                    op.name + "' not declared in schema");
    }

    reject_recursive_types(model.schema);
  }

  static void check_type_ref(const XsdSchema& schema, const QName& type) {
    if (type.ns == kXsdNs) return;  // builtins are vetted at lowering time
    if (!schema.simple_types.count(type) && !schema.complex_types.count(type))
      throw Error(ErrorCode::UnresolvedReference,
                  "type " + type.to_string() + " is not defined");
  }

  /// Depth-first lowering requires a finite declaration tree, so any complex
  /// type reachable from itself (or simple-type base cycle) is rejected here.
  static void reject_recursive_types(const XsdSchema& schema) {
    enum class Mark { None, InProgress, Done };
    std::map<QName, Mark> marks;

    std::function<void(const QName&)> visit = [&](const QName& type) {
      if (type.ns == kXsdNs) return;
      Mark& mark = marks[type];
      if (mark == Mark::Done) return;
      if (mark == Mark::InProgress)
        throw Error(ErrorCode::UnresolvedReference,
                    "recursive type definition through " + type.to_string() +
                    " (finite trees only)");
      mark = Mark::InProgress;
      if (const ComplexTypeDef* complex = schema.find_complex_type(type)) {
        for (const ElementDecl& child : complex->children) visit(child.type);
      } else if (const SimpleTypeDef* simple = schema.find_simple_type(type)) {
        visit(simple->base);
      }
      mark = Mark::Done;
    };

    for (const auto& [name, def] : schema.complex_types) visit(name);
    for (const auto& [name, def] : schema.simple_types) visit(name);
  }
};

}  // namespace

const ElementDecl* XsdSchema::find_element(const QName& name) const {
  auto it = elements.find(name);
  return it == elements.end() ? nullptr : &it->second;
}

const SimpleTypeDef* XsdSchema::find_simple_type(const QName& name) const {
  auto it = simple_types.find(name);
  return it == simple_types.end() ? nullptr : &it->second;
}

const ComplexTypeDef* XsdSchema::find_complex_type(const QName& name) const {
  auto it = complex_types.find(name);
  return it == complex_types.end() ? nullptr : &it->second;
}

const OperationDef* WsdlModel::find_operation(std::string_view name) const {
  for (const auto& op : operations)
    if (op.name == name) return &op;
  return nullptr;
}

WsdlModel parse_wsdl(std::string_view document, const std::string& base_url,
                     const FetchFn& fetch) {
  try {
    WsdlParser parser(base_url, fetch);
    return parser.parse(document);
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::Internal, e.what());
  }
}

std::string resolve_reference(const std::string& base_url, const std::string& relative) {
  if (relative.find("://") != std::string::npos) return relative;
  size_t query = base_url.find('?');
  std::string base = query == std::string::npos ? base_url : base_url.substr(0, query);
  size_t slash = base.rfind('/');
  if (slash == std::string::npos) return relative;
  return base.substr(0, slash + 1) + relative;
}

}  // namespace soapcheck
