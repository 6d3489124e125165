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

#include "soapcheck/mock_services.hpp"

#include <charconv>
#include <thread>

#include <httplib.h>

namespace soapcheck {

MockReply MockReply::ok(std::string body_xml) {
  MockReply r;
  r.body_xml = std::move(body_xml);
  return r;
}

MockReply MockReply::server_fault(std::string message) {
  MockReply r;
  r.is_fault = true;
  r.fault = {"Server", std::move(message), std::nullopt};
  return r;
}

MockReply MockReply::client_fault(std::string message) {
  MockReply r;
  r.is_fault = true;
  r.fault = {"Client", std::move(message), std::nullopt};
  return r;
}

std::string MockService::wsdl_with_endpoint(const std::string& endpoint_url) const {
  std::string out = wsdl_template;
  const std::string placeholder = "@ENDPOINT@";
  size_t at = out.find(placeholder);
  if (at != std::string::npos) out.replace(at, placeholder.size(), endpoint_url);
  return out;
}

namespace {

std::string float_text(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

MockService finish(MockService service) {
  service.model = parse_wsdl(service.wsdl_with_endpoint(service.mock_url()),
                             service.mock_url());
  service.lowered = lower_operations(service.model);
  return service;
}

const Value* field_of(const Value& tuple, std::string_view name) {
  if (tuple.kind != Value::Kind::Tuple) return nullptr;
  for (const auto& [field_name, value] : tuple.fields)
    if (field_name == name) return &value;
  return nullptr;
}

// ---- ConvertCooking ----

constexpr const char* kCookingNs = "http://www.webservicex.net/";

// The first three units are the documented ones; the rest fill out the
// enumeration to a plausible kitchen-measure list.
const char* const kCookingUnits[] = {"drop",  "dash", "pinch",    "teaspoon", "tablespoon",
                                     "cup",   "pint", "quart",    "gallon",   "TenCan"};
const double kCookingDrops[] = {1.0,      8.0,      16.0,     98.6,      295.7,
                                4731.6,   9463.2,   18926.4,  75705.6,   56781.0};

const char* kConvertCookingWsdl = R"(<?xml version="1.0" encoding="utf-8"?>
<wsdl:definitions xmlns:wsdl="http://schemas.xmlsoap.org/wsdl/"
                  xmlns:soap="http://schemas.xmlsoap.org/wsdl/soap/"
                  xmlns:s="http://www.w3.org/2001/XMLSchema"
                  xmlns:tns="http://www.webservicex.net/"
                  targetNamespace="http://www.webservicex.net/">
  <wsdl:types>
    <s:schema elementFormDefault="qualified" targetNamespace="http://www.webservicex.net/">
      <s:element name="ChangeCookingUnit">
        <s:complexType>
          <s:sequence>
            <s:element minOccurs="1" maxOccurs="1" name="CookingValue" type="s:double" />
            <s:element minOccurs="1" maxOccurs="1" name="fromCookingUnit" type="tns:Cookings" />
            <s:element minOccurs="1" maxOccurs="1" name="toCookingUnit" type="tns:Cookings" />
          </s:sequence>
        </s:complexType>
      </s:element>
      <s:simpleType name="Cookings">
        <s:restriction base="s:string">
          <s:enumeration value="drop" />
          <s:enumeration value="dash" />
          <s:enumeration value="pinch" />
          <s:enumeration value="teaspoon" />
          <s:enumeration value="tablespoon" />
          <s:enumeration value="cup" />
          <s:enumeration value="pint" />
          <s:enumeration value="quart" />
          <s:enumeration value="gallon" />
          <s:enumeration value="TenCan" />
        </s:restriction>
      </s:simpleType>
      <s:element name="ChangeCookingUnitResponse">
        <s:complexType>
          <s:sequence>
            <s:element minOccurs="1" maxOccurs="1" name="ChangeCookingUnitResult" type="s:double" />
          </s:sequence>
        </s:complexType>
      </s:element>
      <s:element name="double" type="s:double" />
    </s:schema>
  </wsdl:types>
  <wsdl:message name="ChangeCookingUnitSoapIn">
    <wsdl:part name="parameters" element="tns:ChangeCookingUnit" />
  </wsdl:message>
  <wsdl:message name="ChangeCookingUnitSoapOut">
    <wsdl:part name="parameters" element="tns:ChangeCookingUnitResponse" />
  </wsdl:message>
  <wsdl:portType name="ConvertCookingsSoap">
    <wsdl:operation name="ChangeCookingUnit">
      <wsdl:input message="tns:ChangeCookingUnitSoapIn" />
      <wsdl:output message="tns:ChangeCookingUnitSoapOut" />
    </wsdl:operation>
  </wsdl:portType>
  <wsdl:binding name="ConvertCookingsSoap" type="tns:ConvertCookingsSoap">
    <soap:binding transport="http://schemas.xmlsoap.org/soap/http" style="document" />
    <wsdl:operation name="ChangeCookingUnit">
      <soap:operation soapAction="http://www.webservicex.net/ChangeCookingUnit" style="document" />
      <wsdl:input><soap:body use="literal" /></wsdl:input>
      <wsdl:output><soap:body use="literal" /></wsdl:output>
    </wsdl:operation>
  </wsdl:binding>
  <wsdl:service name="ConvertCookings">
    <wsdl:port name="ConvertCookingsSoap" binding="tns:ConvertCookingsSoap">
      <soap:address location="@ENDPOINT@" />
    </wsdl:port>
  </wsdl:service>
</wsdl:definitions>
)";

MockReply handle_convert_cooking(const std::string& op, const Value& input) {
  if (op != "ChangeCookingUnit") return MockReply::client_fault("unknown operation " + op);
  const Value* value = field_of(input, "CookingValue");
  const Value* from = field_of(input, "fromCookingUnit");
  const Value* to = field_of(input, "toCookingUnit");
  if (!value || value->kind != Value::Kind::Float || !from || !to)
    return MockReply::client_fault("malformed ChangeCookingUnit request");

  auto unit_index = [](const Value& v) -> int {
    if (v.kind != Value::Kind::List) return -1;
    std::string name = v.to_text();
    for (size_t i = 0; i < std::size(kCookingUnits); ++i)
      if (name == kCookingUnits[i]) return static_cast<int>(i);
    return -1;
  };
  int from_index = unit_index(*from);
  int to_index = unit_index(*to);
  if (from_index < 0 || to_index < 0)
    return MockReply::client_fault("unknown cooking unit");

  double result = from_index == to_index
                      ? value->float_v
                      : value->float_v * kCookingDrops[from_index] / kCookingDrops[to_index];
  std::string body = "<m:ChangeCookingUnitResponse xmlns:m=\"" + std::string(kCookingNs) +
                     "\"><m:ChangeCookingUnitResult>" + float_text(result) +
                     "</m:ChangeCookingUnitResult></m:ChangeCookingUnitResponse>";
  return MockReply::ok(std::move(body));
}

// ---- placeOrder ----

constexpr const char* kOrderNs = "http://bar";

const char* kPlaceOrderWsdl = R"(<?xml version="1.0" encoding="utf-8"?>
<wsdl:definitions xmlns:wsdl="http://schemas.xmlsoap.org/wsdl/"
                  xmlns:soap="http://schemas.xmlsoap.org/wsdl/soap/"
                  xmlns:xsd="http://www.w3.org/2001/XMLSchema"
                  xmlns:impl="http://bar"
                  targetNamespace="http://bar">
  <wsdl:types>
    <xsd:schema elementFormDefault="qualified" targetNamespace="http://bar">
      <xsd:complexType name="ProductType">
        <xsd:sequence>
          <xsd:element maxOccurs="1" minOccurs="1" name="name" type="xsd:string"/>
          <xsd:element maxOccurs="1" minOccurs="1" name="price" type="xsd:positiveInteger"/>
          <xsd:element maxOccurs="1" minOccurs="1" name="shipInfo" type="impl:ShipInfo"/>
        </xsd:sequence>
      </xsd:complexType>
      <xsd:simpleType name="PaymentType">
        <xsd:restriction base="xsd:string">
          <xsd:enumeration value="visa"/>
          <xsd:enumeration value="paypal"/>
          <xsd:enumeration value="deposit"/>
        </xsd:restriction>
      </xsd:simpleType>
      <xsd:complexType name="ShipInfo">
        <xsd:sequence>
          <xsd:element maxOccurs="1" minOccurs="1" name="paymentInfo" type="impl:PaymentType"/>
          <xsd:element maxOccurs="1" minOccurs="1" name="address" type="xsd:string"/>
        </xsd:sequence>
      </xsd:complexType>
      <xsd:element name="Order">
        <xsd:complexType>
          <xsd:sequence>
            <xsd:element maxOccurs="unbounded" minOccurs="1" name="products" type="impl:ProductType"/>
          </xsd:sequence>
        </xsd:complexType>
      </xsd:element>
      <xsd:element name="Product" type="impl:ProductType"/>
      <xsd:element name="placeOrderResponse">
        <xsd:complexType>
          <xsd:sequence>
            <xsd:element maxOccurs="1" minOccurs="1" name="confirmation" type="xsd:string"/>
          </xsd:sequence>
        </xsd:complexType>
      </xsd:element>
    </xsd:schema>
  </wsdl:types>
  <wsdl:message name="placeOrderRequest">
    <wsdl:part name="parameters" element="impl:Order"/>
  </wsdl:message>
  <wsdl:message name="placeOrderReply">
    <wsdl:part name="parameters" element="impl:placeOrderResponse"/>
  </wsdl:message>
  <wsdl:portType name="OrderPortType">
    <wsdl:operation name="placeOrder">
      <wsdl:input message="impl:placeOrderRequest"/>
      <wsdl:output message="impl:placeOrderReply"/>
    </wsdl:operation>
  </wsdl:portType>
  <wsdl:binding name="OrderBinding" type="impl:OrderPortType">
    <soap:binding transport="http://schemas.xmlsoap.org/soap/http" style="document"/>
    <wsdl:operation name="placeOrder">
      <soap:operation soapAction=""/>
      <wsdl:input><soap:body use="literal"/></wsdl:input>
      <wsdl:output><soap:body use="literal"/></wsdl:output>
    </wsdl:operation>
  </wsdl:binding>
  <wsdl:service name="OrderService">
    <wsdl:port name="OrderPort" binding="impl:OrderBinding">
      <soap:address location="@ENDPOINT@"/>
    </wsdl:port>
  </wsdl:service>
</wsdl:definitions>
)";

MockReply handle_place_order(const std::string& op, const Value& input) {
  if (op != "placeOrder") return MockReply::client_fault("unknown operation " + op);
  const Value* products = field_of(input, "products");
  if (!products || products->kind != Value::Kind::List)
    return MockReply::client_fault("malformed Order request");
  if (products->items.empty())
    return MockReply::client_fault("an order must contain at least one product");

  for (const Value& product : products->items) {
    const Value* price = field_of(product, "price");
    if (!price || price->kind != Value::Kind::Int || price->int_v < 1)
      return MockReply::client_fault("product price must be a positive integer");
    const Value* ship = field_of(product, "shipInfo");
    const Value* payment = ship ? field_of(*ship, "paymentInfo") : nullptr;
    if (!payment || payment->kind != Value::Kind::List)
      return MockReply::client_fault("missing payment information");
    std::string method = payment->to_text();
    if (method != "visa" && method != "paypal" && method != "deposit")
      return MockReply::client_fault("unsupported payment method '" + method + "'");
    if (!field_of(*ship, "address"))
      return MockReply::client_fault("missing shipping address");
  }

  std::string body = "<m:placeOrderResponse xmlns:m=\"" + std::string(kOrderNs) +
                     "\"><m:confirmation>accepted " +
                     std::to_string(products->items.size()) +
                     " product(s)</m:confirmation></m:placeOrderResponse>";
  return MockReply::ok(std::move(body));
}

// ---- delete ----

constexpr const char* kDeleteNs = "http://delete.example.org/";

const char* kDeleteWsdl = R"(<?xml version="1.0" encoding="utf-8"?>
<wsdl:definitions xmlns:wsdl="http://schemas.xmlsoap.org/wsdl/"
                  xmlns:soap="http://schemas.xmlsoap.org/wsdl/soap/"
                  xmlns:xsd="http://www.w3.org/2001/XMLSchema"
                  xmlns:tns="http://delete.example.org/"
                  targetNamespace="http://delete.example.org/">
  <wsdl:types>
    <xsd:schema elementFormDefault="qualified" targetNamespace="http://delete.example.org/">
      <xsd:element name="delete">
        <xsd:complexType>
          <xsd:sequence>
            <xsd:element maxOccurs="1" minOccurs="1" name="in" type="xsd:string"/>
            <xsd:element maxOccurs="1" minOccurs="1" name="c" type="xsd:string"/>
          </xsd:sequence>
        </xsd:complexType>
      </xsd:element>
      <xsd:element name="deleteResponse">
        <xsd:complexType>
          <xsd:sequence>
            <xsd:element maxOccurs="1" minOccurs="1" name="deleteReturn" type="xsd:string"/>
          </xsd:sequence>
        </xsd:complexType>
      </xsd:element>
    </xsd:schema>
  </wsdl:types>
  <wsdl:message name="deleteRequest">
    <wsdl:part name="parameters" element="tns:delete"/>
  </wsdl:message>
  <wsdl:message name="deleteReply">
    <wsdl:part name="parameters" element="tns:deleteResponse"/>
  </wsdl:message>
  <wsdl:portType name="DeletePortType">
    <wsdl:operation name="delete">
      <wsdl:input message="tns:deleteRequest"/>
      <wsdl:output message="tns:deleteReply"/>
    </wsdl:operation>
  </wsdl:portType>
  <wsdl:binding name="DeleteBinding" type="tns:DeletePortType">
    <soap:binding transport="http://schemas.xmlsoap.org/soap/http" style="document"/>
    <wsdl:operation name="delete">
      <soap:operation soapAction=""/>
      <wsdl:input><soap:body use="literal"/></wsdl:input>
      <wsdl:output><soap:body use="literal"/></wsdl:output>
    </wsdl:operation>
  </wsdl:binding>
  <wsdl:service name="DeleteService">
    <wsdl:port name="DeletePort" binding="tns:DeleteBinding">
      <soap:address location="@ENDPOINT@"/>
    </wsdl:port>
  </wsdl:service>
</wsdl:definitions>
)";

MockReply handle_delete(const std::string& op, const Value& input) {
  if (op != "delete") return MockReply::client_fault("unknown operation " + op);
  const Value* in = field_of(input, "in");
  const Value* c = field_of(input, "c");
  if (!in || in->kind != Value::Kind::List || !c || c->kind != Value::Kind::List)
    return MockReply::client_fault("malformed delete request");

  // Mirrors the faulty reference implementation: c.charAt(0) on an empty
  // string throws, which surfaces as a server fault.
  if (c->items.empty())
    return MockReply::server_fault("String index out of range: 0");

  std::vector<Value> result = in->items;
  for (auto it = result.begin(); it != result.end(); ++it) {
    if (it->int_v == c->items.front().int_v) {
      result.erase(it);
      break;
    }
  }
  Value out = Value::list(std::move(result));
  std::string body = "<m:deleteResponse xmlns:m=\"" + std::string(kDeleteNs) +
                     "\"><m:deleteReturn>" + xml_escape(out.to_text()) +
                     "</m:deleteReturn></m:deleteResponse>";
  return MockReply::ok(std::move(body));
}

}  // namespace

MockService convert_cooking_service() {
  MockService s;
  s.name = "convertcooking";
  s.wsdl_template = kConvertCookingWsdl;
  s.handler = handle_convert_cooking;
  return finish(std::move(s));
}

MockService place_order_service() {
  MockService s;
  s.name = "placeorder";
  s.wsdl_template = kPlaceOrderWsdl;
  s.handler = handle_place_order;
  return finish(std::move(s));
}

MockService delete_service() {
  MockService s;
  s.name = "delete";
  s.wsdl_template = kDeleteWsdl;
  s.handler = handle_delete;
  return finish(std::move(s));
}

HttpReply dispatch_soap(const MockService& service, const std::string& envelope) {
  const OperationDef* op = nullptr;
  const LoweredOperation* lowered = nullptr;
  try {
    XmlElement root = parse_xml(envelope);
    const XmlElement* body = root.child(kSoapEnvelopeNs, "Body");
    if (!body || body->children.empty())
      return {500, fault_envelope({"Client", "request has no SOAP body", std::nullopt})};
    const XmlElement& wrapper = body->children.front();
    for (size_t i = 0; i < service.model.operations.size(); ++i) {
      const OperationDef& candidate = service.model.operations[i];
      bool matches = candidate.style == SoapStyle::DocumentLiteral
                         ? wrapper.local == candidate.input_element.local &&
                               wrapper.ns == candidate.input_element.ns
                         : wrapper.local == candidate.name;
      if (matches) {
        op = &candidate;
        lowered = &service.lowered[i];
        break;
      }
    }
  } catch (const std::exception& e) {
    return {500, fault_envelope({"Client", e.what(), std::nullopt})};
  }
  if (!op)
    return {500, fault_envelope({"Client", "no operation accepts this request", std::nullopt})};

  auto input = decode_request_value(*op, service.model.schema, lowered->input, envelope);
  if (!input)
    return {500, fault_envelope({"Client", "request does not match the input schema",
                                 std::nullopt})};
  MockReply reply = service.handler(op->name, *input);
  if (reply.is_fault) return {500, fault_envelope(reply.fault)};
  return {200, envelope_around(reply.body_xml)};
}

// ---- in-process endpoint ----

namespace {

std::string mock_host(const std::string& url) {
  const std::string prefix = "mock://";
  if (url.rfind(prefix, 0) != 0)
    throw Error(ErrorCode::ConnectionFailed, "'" + url + "' is not a mock:// URL");
  std::string rest = url.substr(prefix.size());
  size_t end = rest.find_first_of("/?");
  return rest.substr(0, end);
}

}  // namespace

InProcessEndpoint::InProcessEndpoint() {
  add(convert_cooking_service());
  add(place_order_service());
  add(delete_service());
}

void InProcessEndpoint::add(MockService service) {
  std::string name = service.name;
  services_.emplace(std::move(name), std::move(service));
}

const MockService& InProcessEndpoint::service_for(const std::string& url) const {
  std::string host = mock_host(url);
  auto it = services_.find(host);
  if (it == services_.end())
    throw Error(ErrorCode::ConnectionFailed, "no mock service named '" + host + "'");
  return it->second;
}

std::string InProcessEndpoint::fetch(const std::string& url) {
  const MockService& service = service_for(url);
  return service.wsdl_with_endpoint(service.mock_url());
}

HttpReply InProcessEndpoint::post_soap(const std::string& url, const std::string& soap_action,
                                       const std::string& envelope) {
  (void)soap_action;
  return dispatch_soap(service_for(url), envelope);
}

// ---- HTTP listener ----

struct MockHttpServer::Impl {
  MockService service;
  httplib::Server server;
  std::thread thread;
};

MockHttpServer::MockHttpServer(MockService service, int port)
    : impl_(std::make_unique<Impl>()) {
  impl_->service = std::move(service);
  const std::string path = "/" + impl_->service.name;

  impl_->server.Get(path, [this](const httplib::Request& req, httplib::Response& res) {
    if (req.params.count("WSDL") || req.params.count("wsdl")) {
      res.set_content(impl_->service.wsdl_with_endpoint(url_), "text/xml; charset=utf-8");
    } else {
      res.status = 400;
      res.set_content("append ?WSDL for the service description", "text/plain");
    }
  });
  impl_->server.Post(path, [this](const httplib::Request& req, httplib::Response& res) {
    HttpReply reply = dispatch_soap(impl_->service, req.body);
    res.status = reply.status;
    res.set_content(reply.body, "text/xml; charset=utf-8");
  });

  if (port == 0) {
    port_ = impl_->server.bind_to_any_port("127.0.0.1");
  } else {
    if (!impl_->server.bind_to_port("127.0.0.1", port))
      throw Error(ErrorCode::ConnectionFailed,
                  "could not bind 127.0.0.1:" + std::to_string(port));
    port_ = port;
  }
  url_ = "http://127.0.0.1:" + std::to_string(port_) + path;
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

MockHttpServer::~MockHttpServer() { stop(); }

void MockHttpServer::wait() {
  if (impl_ && impl_->thread.joinable()) impl_->thread.join();
}

void MockHttpServer::stop() {
  if (!impl_) return;
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace soapcheck
