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

#include "soapcheck/soap_codec.hpp"

#include <charconv>
#include <cstdlib>

namespace soapcheck {

SoapResponseKind SoapResponseKind::make_ok(XmlElement body) {
  SoapResponseKind r;
  r.kind = Kind::Ok;
  r.body_element = std::move(body);
  return r;
}

SoapResponseKind SoapResponseKind::make_fault(SoapFault fault) {
  SoapResponseKind r;
  r.kind = Kind::Fault;
  r.fault = std::move(fault);
  return r;
}

SoapResponseKind SoapResponseKind::make_malformed(std::string reason) {
  SoapResponseKind r;
  r.kind = Kind::Malformed;
  r.reason = std::move(reason);
  return r;
}

// ---- encoding ----

namespace {

[[noreturn]] void shape_error(const std::string& message) {
  throw Error(ErrorCode::ShapeMismatch, message);
}

std::string float_text(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

// Namespace prefix assignment for the request body. The wrapper usually
// declares one prefix that every qualified descendant reuses.
class BodyWriter {
 public:
  std::string take() { return std::move(out_); }

  void element(const std::string& local, const std::string& ns,
               const std::function<void()>& content) {
    std::string tag = local;
    std::string declaration;
    if (!ns.empty()) {
      auto it = prefixes_.find(ns);
      std::string prefix;
      if (it != prefixes_.end()) {
        prefix = it->second;
      } else {
        prefix = counter_ == 0 ? "m" : "m" + std::to_string(counter_);
        ++counter_;
        prefixes_.emplace(ns, prefix);
        declaration = " xmlns:" + prefix + "=\"" + xml_escape(ns, true) + "\"";
      }
      tag = prefix + ":" + local;
    }
    out_ += "<" + tag + declaration + ">";
    content();
    out_ += "</" + tag + ">";
    if (!declaration.empty()) prefixes_.erase(ns);  // scope ends with the element
  }

  void text(std::string_view value) { out_ += xml_escape(value); }

 private:
  std::string out_;
  std::map<std::string, std::string> prefixes_;
  int counter_ = 0;
};

class Encoder {
 public:
  explicit Encoder(const XsdSchema& schema) : schema_(schema) {}

  std::string encode(const OperationDef& op, const NamedIR& ir, const Value& v) {
    BodyWriter writer;
    if (op.style == SoapStyle::DocumentLiteral) {
      writer.element(op.input_element.local, op.input_element.ns,
                     [&] { content(writer, *ir.ir, v); });
    } else {
      writer.element(op.name, op.input_element.ns,
                     [&] { content(writer, *ir.ir, v); });
    }
    return envelope_around(writer.take());
  }

 private:
  const XsdSchema& schema_;

  void field(BodyWriter& w, const NamedIR& n, const Value& v) {
    std::string ns = n.qualified ? n.ns : "";
    if (n.occurs_list) {
      if (v.kind != Value::Kind::List)
        shape_error("element '" + n.local_name + "' expects a list of occurrences");
      const ListIR* list = n.ir->list();
      for (const Value& item : v.items)
        w.element(n.local_name, ns, [&] { content(w, *list->inner, item); });
      return;
    }
    w.element(n.local_name, ns, [&] { content(w, *n.ir, v); });
  }

  void content(BodyWriter& w, const TypeIR& ir, const Value& v) {
    if (const ScalarIR* s = ir.scalar()) {
      switch (s->kind) {
        case ScalarKind::Integer:
          if (v.kind != Value::Kind::Int) shape_error("integer value expected");
          w.text(to_string(v.int_v));
          return;
        case ScalarKind::Float:
          if (v.kind != Value::Kind::Float) shape_error("float value expected");
          w.text(float_text(v.float_v));
          return;
        case ScalarKind::Boolean:
          if (v.kind != Value::Kind::Bool) shape_error("boolean value expected");
          w.text(v.bool_v ? "true" : "false");
          return;
      }
    }
    if (ir.enumeration()) {
      if (v.kind != Value::Kind::List) shape_error("enumeration value expected");
      w.text(v.to_text());
      return;
    }
    if (const ListIR* l = ir.list()) {
      if (v.kind != Value::Kind::List) shape_error("list value expected");
      if (!l->text)
        shape_error("a plain list cannot be element content (only occurrence lists repeat)");
      w.text(v.to_text());
      return;
    }
    if (const TupleIR* t = ir.tuple()) {
      if (v.kind != Value::Kind::Tuple || v.fields.size() != t->fields.size())
        shape_error("tuple value with " + std::to_string(t->fields.size()) + " fields expected");
      for (size_t i = 0; i < t->fields.size(); ++i) {
        if (v.fields[i].first != t->fields[i].local_name)
          shape_error("tuple field '" + v.fields[i].first + "' does not match element '" +
                      t->fields[i].local_name + "'");
        field(w, t->fields[i], v.fields[i].second);
      }
      return;
    }
    const ChoiceIR* c = ir.choice();
    if (v.kind != Value::Kind::Choice || v.alt_index >= c->alternatives.size() ||
        v.items.size() != 1)
      shape_error("choice value expected");
    field(w, c->alternatives[v.alt_index], v.items[0]);
  }
};

}  // namespace

std::string envelope_around(std::string_view body_content) {
  std::string out =
      "<?xml version=\"1.0\" encoding=\"utf-8\"?>"
      "<soap:Envelope xmlns:soap=\"http://schemas.xmlsoap.org/soap/envelope/\">"
      "<soap:Body>";
  out += body_content;
  out += "</soap:Body></soap:Envelope>";
  return out;
}

std::string fault_envelope(const SoapFault& fault) {
  std::string body = "<soap:Fault><faultcode>soap:" + xml_escape(fault.fault_code) +
                     "</faultcode><faultstring>" + xml_escape(fault.fault_string) +
                     "</faultstring>";
  if (fault.detail) body += "<detail>" + xml_escape(*fault.detail) + "</detail>";
  body += "</soap:Fault>";
  return envelope_around(body);
}

std::string encode_request(const OperationDef& op, const XsdSchema& schema,
                           const NamedIR& ir, const Value& v) {
  return Encoder(schema).encode(op, ir, v);
}

// ---- decoding ----

SoapResponseKind decode_response(std::string_view body) {
  try {
    XmlElement root = parse_xml(body);
    if (!root.is(kSoapEnvelopeNs, "Envelope"))
      return SoapResponseKind::make_malformed("root element is not a SOAP 1.1 Envelope");
    const XmlElement* soap_body = root.child(kSoapEnvelopeNs, "Body");
    if (!soap_body)
      return SoapResponseKind::make_malformed("envelope has no Body");
    if (soap_body->children.empty())
      return SoapResponseKind::make_malformed("Body has no element content");
    const XmlElement& first = soap_body->children.front();
    if (first.is(kSoapEnvelopeNs, "Fault")) {
      SoapFault fault;
      // SOAP 1.1 fault children are unqualified.
      if (const XmlElement* code = first.child("", "faultcode")) fault.fault_code = code->text;
      if (const XmlElement* text = first.child("", "faultstring")) fault.fault_string = text->text;
      if (const XmlElement* detail = first.child("", "detail")) fault.detail = detail->text;
      return SoapResponseKind::make_fault(std::move(fault));
    }
    return SoapResponseKind::make_ok(first);
  } catch (const Error& e) {
    return SoapResponseKind::make_malformed(e.what());
  } catch (const std::exception& e) {
    return SoapResponseKind::make_malformed(e.what());
  }
}

// ---- element decoding ----

namespace {

std::string trimmed(const std::string& text) {
  size_t begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  size_t end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

std::optional<Value> decode_content(const TypeIR& ir, const XmlElement& elem);

bool field_matches(const NamedIR& n, const XmlElement& elem) {
  std::string expected_ns = n.qualified ? n.ns : "";
  return elem.local == n.local_name && elem.ns == expected_ns;
}

std::optional<Value> decode_field_sequence(const std::vector<NamedIR>& fields,
                                           const XmlElement& elem, bool is_choice) {
  if (is_choice) {
    if (elem.children.size() != 1) return std::nullopt;
    const XmlElement& child = elem.children.front();
    for (size_t j = 0; j < fields.size(); ++j) {
      if (!field_matches(fields[j], child)) continue;
      const NamedIR& alt = fields[j];
      std::optional<Value> inner;
      if (alt.occurs_list) return std::nullopt;  // occurrence lists inside choice unsupported
      inner = decode_content(*alt.ir, child);
      if (!inner) return std::nullopt;
      return Value::choice(j, std::move(*inner));
    }
    return std::nullopt;
  }

  std::vector<std::pair<std::string, Value>> out;
  size_t cursor = 0;
  for (const NamedIR& field : fields) {
    if (field.occurs_list) {
      const ListIR* list = field.ir->list();
      std::vector<Value> items;
      while (cursor < elem.children.size() && field_matches(field, elem.children[cursor])) {
        auto item = decode_content(*list->inner, elem.children[cursor]);
        if (!item) return std::nullopt;
        items.push_back(std::move(*item));
        ++cursor;
      }
      out.emplace_back(field.local_name, Value::list(std::move(items)));
      continue;
    }
    if (cursor >= elem.children.size() || !field_matches(field, elem.children[cursor]))
      return std::nullopt;
    auto value = decode_content(*field.ir, elem.children[cursor]);
    if (!value) return std::nullopt;
    out.emplace_back(field.local_name, std::move(*value));
    ++cursor;
  }
  if (cursor != elem.children.size()) return std::nullopt;  // trailing unknown content
  return Value::tuple(std::move(out));
}

std::optional<Value> decode_content(const TypeIR& ir, const XmlElement& elem) {
  if (const ScalarIR* s = ir.scalar()) {
    std::string text = trimmed(elem.text);
    switch (s->kind) {
      case ScalarKind::Integer: {
        auto v = parse_bigint(text);
        if (!v) return std::nullopt;
        return Value::of_int(*v);
      }
      case ScalarKind::Float: {
        if (text.empty()) return std::nullopt;
        char* end = nullptr;
        double v = std::strtod(text.c_str(), &end);
        if (end != text.c_str() + text.size()) return std::nullopt;
        return Value::of_float(v);
      }
      case ScalarKind::Boolean: {
        if (text == "true" || text == "1") return Value::of_bool(true);
        if (text == "false" || text == "0") return Value::of_bool(false);
        return std::nullopt;
      }
    }
  }
  if (ir.enumeration()) return Value::text(elem.text);
  if (const ListIR* l = ir.list()) {
    if (!l->text) return std::nullopt;  // occurrence lists decode at the field level
    return Value::text(elem.text);
  }
  if (const TupleIR* t = ir.tuple())
    return decode_field_sequence(t->fields, elem, /*is_choice=*/false);
  return decode_field_sequence(ir.choice()->alternatives, elem, /*is_choice=*/true);
}

}  // namespace

std::optional<Value> decode_element_value(const NamedIR& ir, const XmlElement& elem) {
  try {
    return decode_content(*ir.ir, elem);
  } catch (...) {
    return std::nullopt;
  }
}

bool validate_response_type(const OperationDef& op, const XsdSchema& schema,
                            const SoapResponseKind& r) {
  if (!r.ok()) return false;
  try {
    NamedIR output = lower_element(schema, op.output_element, 1);
    if (r.body_element.local != op.output_element.local ||
        r.body_element.ns != op.output_element.ns)
      return false;
    auto value = decode_element_value(output, r.body_element);
    return value && conforms(*output.ir, *value);
  } catch (...) {
    return false;
  }
}

std::optional<Value> decode_request_value(const OperationDef& op, const XsdSchema& schema,
                                          const NamedIR& ir, std::string_view envelope) {
  (void)schema;
  try {
    XmlElement root = parse_xml(envelope);
    if (!root.is(kSoapEnvelopeNs, "Envelope")) return std::nullopt;
    const XmlElement* body = root.child(kSoapEnvelopeNs, "Body");
    if (!body || body->children.empty()) return std::nullopt;
    const XmlElement& wrapper = body->children.front();
    if (op.style == SoapStyle::DocumentLiteral) {
      if (wrapper.local != op.input_element.local || wrapper.ns != op.input_element.ns)
        return std::nullopt;
    } else {
      if (wrapper.local != op.name) return std::nullopt;
    }
    return decode_element_value(ir, wrapper);
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace soapcheck
