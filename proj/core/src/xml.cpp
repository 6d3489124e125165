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

#include "soapcheck/xml.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

namespace soapcheck {

namespace {

constexpr int kMaxDepth = 512;

[[noreturn]] void fail(const std::string& message) {
  throw Error(ErrorCode::MalformedXml, message);
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

bool is_name_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == ':' || c >= 0x80;
}

bool is_name_char(unsigned char c) {
  return is_name_start(c) || std::isdigit(c) || c == '-' || c == '.';
}

void append_utf8(std::string& out, uint32_t cp) { utf8_append(out, cp); }

// Transcodes UTF-16 (known endianness) to UTF-8, including surrogate pairs.
std::string utf16_to_utf8(std::string_view bytes, bool big_endian) {
  if (bytes.size() % 2 != 0) fail("odd byte count in UTF-16 input");
  std::string out;
  out.reserve(bytes.size() / 2);
  auto unit = [&](size_t i) -> uint32_t {
    auto a = static_cast<unsigned char>(bytes[i]);
    auto b = static_cast<unsigned char>(bytes[i + 1]);
    return big_endian ? (static_cast<uint32_t>(a) << 8 | b)
                      : (static_cast<uint32_t>(b) << 8 | a);
  };
  for (size_t i = 0; i < bytes.size(); i += 2) {
    uint32_t w = unit(i);
    if (w >= 0xD800 && w <= 0xDBFF) {
      if (i + 3 >= bytes.size()) fail("truncated surrogate pair");
      uint32_t lo = unit(i + 2);
      if (lo < 0xDC00 || lo > 0xDFFF) fail("invalid surrogate pair");
      append_utf8(out, 0x10000 + ((w - 0xD800) << 10) + (lo - 0xDC00));
      i += 2;
    } else if (w >= 0xDC00 && w <= 0xDFFF) {
      fail("stray low surrogate");
    } else {
      append_utf8(out, w);
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  XmlElement parse_document() {
    skip_prolog();
    if (at_end() || peek() != '<') fail("expected root element");
    XmlElement root = parse_element({{ "xml", "http://www.w3.org/XML/1998/namespace" }}, 0);
    skip_misc();
    if (!at_end()) fail("content after root element");
    return root;
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  bool starts_with(std::string_view s) const {
    return text_.compare(pos_, s.size(), s) == 0;
  }

  void skip_ws() {
    while (!at_end() && is_space(peek())) ++pos_;
  }

  void expect(char c, const char* what) {
    if (at_end() || peek() != c) fail(std::string("expected ") + what);
    ++pos_;
  }

  std::string read_name() {
    if (at_end() || !is_name_start(static_cast<unsigned char>(peek())))
      fail("expected a name");
    size_t start = pos_;
    while (!at_end() && is_name_char(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // Decodes the five predefined entities plus numeric character references.
  void append_decoded(std::string& out, std::string_view raw) {
    for (size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] != '&') {
        out.push_back(raw[i]);
        continue;
      }
      size_t semi = raw.find(';', i + 1);
      if (semi == std::string_view::npos) fail("unterminated entity reference");
      std::string_view ent = raw.substr(i + 1, semi - i - 1);
      if (ent == "lt") out.push_back('<');
      else if (ent == "gt") out.push_back('>');
      else if (ent == "amp") out.push_back('&');
      else if (ent == "quot") out.push_back('"');
      else if (ent == "apos") out.push_back('\'');
      else if (!ent.empty() && ent[0] == '#') {
        uint32_t cp = 0;
        bool hex = ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X');
        std::string_view digits = ent.substr(hex ? 2 : 1);
        if (digits.empty()) fail("empty character reference");
        for (char d : digits) {
          uint32_t v;
          if (d >= '0' && d <= '9') v = static_cast<uint32_t>(d - '0');
          else if (hex && d >= 'a' && d <= 'f') v = static_cast<uint32_t>(d - 'a' + 10);
          else if (hex && d >= 'A' && d <= 'F') v = static_cast<uint32_t>(d - 'A' + 10);
          else fail("bad character reference");
          cp = cp * (hex ? 16 : 10) + v;
          if (cp > 0x10FFFF) fail("character reference out of range");
        }
        append_utf8(out, cp);
      } else {
        fail("unknown entity '" + std::string(ent) + "'");
      }
      i = semi;
    }
  }

  void skip_comment() {
    pos_ += 4;  // "<!--"
    size_t end = text_.find("-->", pos_);
    if (end == std::string_view::npos) fail("unterminated comment");
    pos_ = end + 3;
  }

  void skip_pi() {
    pos_ += 2;  // "<?"
    size_t end = text_.find("?>", pos_);
    if (end == std::string_view::npos) fail("unterminated processing instruction");
    pos_ = end + 2;
  }

  void skip_misc() {
    for (;;) {
      skip_ws();
      if (starts_with("<!--")) skip_comment();
      else if (starts_with("<?")) skip_pi();
      else break;
    }
  }

  void skip_prolog() {
    skip_misc();
    if (starts_with("<!DOCTYPE"))
      fail("DOCTYPE declarations are not supported");
  }

  std::string read_attr_value() {
    if (at_end() || (peek() != '"' && peek() != '\'')) fail("expected quoted attribute value");
    char quote = peek();
    ++pos_;
    size_t start = pos_;
    while (!at_end() && peek() != quote) {
      if (peek() == '<') fail("'<' in attribute value");
      ++pos_;
    }
    if (at_end()) fail("unterminated attribute value");
    std::string out;
    append_decoded(out, text_.substr(start, pos_ - start));
    ++pos_;
    return out;
  }

  XmlElement parse_element(std::map<std::string, std::string> scope, int depth) {
    if (depth > kMaxDepth) fail("element nesting too deep");
    expect('<', "'<'");
    std::string raw_name = read_name();

    XmlElement elem;
    bool self_closing = false;
    for (;;) {
      bool had_space = !at_end() && is_space(peek());
      skip_ws();
      if (at_end()) fail("unterminated start tag");
      if (peek() == '>') { ++pos_; break; }
      if (peek() == '/') {
        ++pos_;
        expect('>', "'>' after '/'");
        self_closing = true;
        break;
      }
      if (!had_space) fail("expected whitespace before attribute");
      std::string attr_name = read_name();
      skip_ws();
      expect('=', "'=' after attribute name");
      skip_ws();
      std::string value = read_attr_value();
      if (attr_name == "xmlns") {
        scope[""] = value;
      } else if (attr_name.rfind("xmlns:", 0) == 0) {
        std::string prefix = attr_name.substr(6);
        if (prefix.empty()) fail("empty namespace prefix");
        scope[prefix] = value;
      }
      for (const auto& existing : elem.attrs)
        if (existing.name == attr_name) fail("duplicate attribute '" + attr_name + "'");
      elem.attrs.push_back({std::move(attr_name), std::move(value)});
    }

    elem.scope = scope;
    split_element_name(elem, raw_name);
    if (self_closing) return elem;

    // Content loop: children, character data, CDATA.
    for (;;) {
      if (at_end()) fail("unterminated element '" + raw_name + "'");
      if (peek() == '<') {
        if (starts_with("</")) {
          pos_ += 2;
          std::string close = read_name();
          if (close != raw_name)
            fail("mismatched close tag '" + close + "' for '" + raw_name + "'");
          skip_ws();
          expect('>', "'>' in close tag");
          return elem;
        }
        if (starts_with("<!--")) { skip_comment(); continue; }
        if (starts_with("<![CDATA[")) {
          pos_ += 9;
          size_t end = text_.find("]]>", pos_);
          if (end == std::string_view::npos) fail("unterminated CDATA section");
          elem.text.append(text_.substr(pos_, end - pos_));
          pos_ = end + 3;
          continue;
        }
        if (starts_with("<?")) { skip_pi(); continue; }
        if (starts_with("<!")) fail("unsupported markup declaration in content");
        elem.children.push_back(parse_element(scope, depth + 1));
        continue;
      }
      size_t start = pos_;
      while (!at_end() && peek() != '<') ++pos_;
      append_decoded(elem.text, text_.substr(start, pos_ - start));
    }
  }

  void split_element_name(XmlElement& elem, const std::string& raw) {
    size_t colon = raw.find(':');
    std::string prefix = colon == std::string::npos ? "" : raw.substr(0, colon);
    elem.local = colon == std::string::npos ? raw : raw.substr(colon + 1);
    if (elem.local.empty() || elem.local.find(':') != std::string::npos)
      fail("bad element name '" + raw + "'");
    auto it = elem.scope.find(prefix);
    if (it != elem.scope.end()) {
      elem.ns = it->second;
    } else if (prefix.empty()) {
      elem.ns = "";
    } else {
      fail("unbound namespace prefix '" + prefix + "'");
    }
  }
};

// Sniffs the encoding from BOM / declaration bytes and hands back UTF-8.
std::string to_utf8(std::string_view bytes) {
  if (bytes.size() >= 2) {
    auto b0 = static_cast<unsigned char>(bytes[0]);
    auto b1 = static_cast<unsigned char>(bytes[1]);
    if (b0 == 0xFF && b1 == 0xFE) return utf16_to_utf8(bytes.substr(2), false);
    if (b0 == 0xFE && b1 == 0xFF) return utf16_to_utf8(bytes.substr(2), true);
    // UTF-16 without BOM: "<?" encoded as alternating NUL bytes.
    if (b0 == '<' && b1 == 0x00) return utf16_to_utf8(bytes, false);
    if (b0 == 0x00 && b1 == '<') return utf16_to_utf8(bytes, true);
  }
  if (bytes.size() >= 3 && static_cast<unsigned char>(bytes[0]) == 0xEF &&
      static_cast<unsigned char>(bytes[1]) == 0xBB &&
      static_cast<unsigned char>(bytes[2]) == 0xBF) {
    bytes = bytes.substr(3);
  }
  return std::string(bytes);
}

// The declaration's encoding pseudo-attribute; only UTF-8/UTF-16 are accepted.
void check_declared_encoding(std::string_view doc) {
  if (doc.compare(0, 5, "<?xml") != 0) return;
  size_t end = doc.find("?>");
  if (end == std::string_view::npos) return;  // parser reports this later
  std::string decl(doc.substr(0, end));
  std::transform(decl.begin(), decl.end(), decl.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  size_t enc = decl.find("encoding");
  if (enc == std::string::npos) return;
  size_t q1 = decl.find_first_of("\"'", enc);
  if (q1 == std::string::npos) return;
  size_t q2 = decl.find(decl[q1], q1 + 1);
  if (q2 == std::string::npos) return;
  std::string name = decl.substr(q1 + 1, q2 - q1 - 1);
  if (name != "utf-8" && name != "utf8" && name != "utf-16" &&
      name != "utf-16le" && name != "utf-16be") {
    fail("unsupported document encoding '" + name + "'");
  }
}

}  // namespace

const XmlElement* XmlElement::child(std::string_view nspace, std::string_view name) const {
  for (const auto& c : children)
    if (c.is(nspace, name)) return &c;
  return nullptr;
}

std::vector<const XmlElement*> XmlElement::children_of(std::string_view nspace,
                                                       std::string_view name) const {
  std::vector<const XmlElement*> out;
  for (const auto& c : children)
    if (c.is(nspace, name)) out.push_back(&c);
  return out;
}

std::optional<std::string> XmlElement::attr(std::string_view name) const {
  for (const auto& a : attrs)
    if (a.name == name) return a.value;
  return std::nullopt;
}

std::string XmlElement::attr_or(std::string_view name, std::string_view fallback) const {
  auto v = attr(name);
  return v ? *v : std::string(fallback);
}

QName XmlElement::resolve_qname(std::string_view raw) const {
  size_t colon = raw.find(':');
  std::string prefix = colon == std::string_view::npos ? "" : std::string(raw.substr(0, colon));
  std::string local(colon == std::string_view::npos ? raw : raw.substr(colon + 1));
  if (local.empty())
    throw Error(ErrorCode::UnresolvedReference, "empty QName '" + std::string(raw) + "'");
  auto it = scope.find(prefix);
  if (it == scope.end()) {
    if (prefix.empty()) return {"", local};
    throw Error(ErrorCode::UnresolvedReference,
                "unbound prefix '" + prefix + "' in '" + std::string(raw) + "'");
  }
  return {it->second, local};
}

XmlElement parse_xml(std::string_view bytes) {
  std::string doc = to_utf8(bytes);
  check_declared_encoding(doc);
  Parser parser(doc);
  return parser.parse_document();
}

void utf8_append(std::string& out, uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string xml_escape(std::string_view text, bool for_attribute) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"':
        if (for_attribute) { out += "&quot;"; break; }
        [[fallthrough]];
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace soapcheck
