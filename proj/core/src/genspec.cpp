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

#include "soapcheck/genspec.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <set>

namespace soapcheck {

bool GenExpr::operator==(const GenExpr&) const = default;

const GenExpr* GenSpec::find(std::string_view name) const {
  for (const auto& [def_name, expr] : definitions)
    if (def_name == name) return &expr;
  return nullptr;
}

std::vector<LoweredOperation> lower_operations(const WsdlModel& model) {
  std::vector<LoweredOperation> out;
  out.reserve(model.operations.size());
  for (const OperationDef& op : model.operations) {
    LoweredOperation lowered;
    lowered.op_name = op.name;
    lowered.input = lower_element(model.schema, op.input_element, 1);
    lowered.output = lower_element(model.schema, op.output_element, 1);
    out.push_back(std::move(lowered));
  }
  return out;
}

// ---- emit ----

namespace {

std::string float_repr(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

std::string quote(const std::string& text) {
  std::string out = "\"";
  for (char ch : text) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(ch);
    }
  }
  out += '"';
  return out;
}

std::string int_bound(const Bound& b) {
  switch (b.kind) {
    case Bound::Kind::NegInf: return "-inf";
    case Bound::Kind::PosInf: return "inf";
    default: return to_string(b.int_value);
  }
}

std::string float_bound(const Bound& b, bool open) {
  switch (b.kind) {
    case Bound::Kind::NegInf: return "-inf";
    case Bound::Kind::PosInf: return "inf";
    default: return float_repr(b.float_value) + (open ? "~" : "");
  }
}

class Emitter {
 public:
  explicit Emitter(std::string default_ns) : default_ns_(std::move(default_ns)) {}

  void add_operation(const LoweredOperation& op) {
    std::string input = field_def(op.input);
    std::string output = field_def(op.output);
    operations_.push_back("operation " + op.op_name + " input=" + input +
                          " output=" + output);
  }

  std::string result(const std::string& service_name) const {
    std::string out;
    out += "# Generator spec";
    if (!service_name.empty()) out += " for service " + service_name;
    out += "\n# Edit definitions to refine generation; see README for the grammar.\n";
    if (!default_ns_.empty()) out += "namespace " + quote(default_ns_) + "\n";
    if (!lines_.empty()) out += "\n";
    for (const std::string& line : lines_) out += line + "\n";
    if (!operations_.empty()) out += "\n";
    for (const std::string& line : operations_) out += line + "\n";
    return out;
  }

 private:
  std::string default_ns_;
  std::vector<std::string> lines_;
  std::vector<std::string> operations_;
  std::set<std::string> defined_;

  std::string define(const std::string& name, const std::string& body) {
    if (defined_.insert(name).second)
      lines_.push_back("gen " + name + " = " + body);
    return name;
  }

  // One definition per IR node; occurrence lists keep the element's own name
  // and put the item type under its type-token name.
  std::string field_def(const NamedIR& n) {
    if (n.occurs_list) {
      const ListIR& list = *n.ir->list();
      std::string inner;
      if (auto item = list_item_name(n))
        inner = "ref(" + define(*item, compound_expr(*list.inner)) + ")";
      else
        inner = compound_expr(*list.inner);
      return define(path_id(n), "list(" + std::to_string(list.min_len) + ", " +
                                    int_bound(list.max_len) + ", " + inner + ")");
    }
    return define(path_id(n), compound_expr(*n.ir));
  }

  std::string field_site(const NamedIR& n) {
    std::string site = n.local_name;
    std::string ns = n.qualified ? n.ns : "";
    if (ns != default_ns_) site += " @ " + quote(ns);
    return site + ": ref(" + field_def(n) + ")";
  }

  std::string compound_expr(const TypeIR& ir) {
    if (const TupleIR* t = ir.tuple()) {
      std::string out = "tuple(";
      for (size_t i = 0; i < t->fields.size(); ++i) {
        if (i) out += ", ";
        out += field_site(t->fields[i]);
      }
      return out + ")";
    }
    if (const ChoiceIR* c = ir.choice()) {
      std::string out = "choice(";
      for (size_t i = 0; i < c->alternatives.size(); ++i) {
        if (i) out += ", ";
        out += field_site(c->alternatives[i]);
      }
      return out + ")";
    }
    return leaf_expr(ir);
  }

  std::string leaf_expr(const TypeIR& ir) {
    if (const ScalarIR* s = ir.scalar()) {
      std::string body;
      switch (s->kind) {
        case ScalarKind::Integer:
          body = "int(" + int_bound(s->min) + ", " + int_bound(s->max) + ")";
          break;
        case ScalarKind::Float:
          body = "float(" + float_bound(s->min, s->min_open) + ", " +
                 float_bound(s->max, s->max_open) + ")";
          break;
        case ScalarKind::Boolean:
          return "bool";
      }
      return s->wire == Wire::AsText ? "text_of(" + body + ")" : body;
    }
    if (const EnumIR* e = ir.enumeration()) {
      std::string out = "enum(";
      for (size_t i = 0; i < e->values.size(); ++i) {
        if (i) out += ", ";
        out += quote(e->values[i]);
      }
      return out + ")";
    }
    const ListIR* l = ir.list();
    std::string body = "list(" + std::to_string(l->min_len) + ", " +
                       int_bound(l->max_len) + ", " + compound_expr(*l->inner) + ")";
    return l->text ? "text_of(" + body + ")" : body;
  }
};

}  // namespace

std::string emit(const WsdlModel& model, const std::vector<LoweredOperation>& lowered) {
  Emitter emitter(model.schema.target_namespace);
  for (const LoweredOperation& op : lowered) emitter.add_operation(op);
  return emitter.result(model.service_name);
}

// ---- parse ----

namespace {

struct Token {
  enum class Kind { Name, Number, String, Symbol, Newline, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 0;
};

[[noreturn]] void syntax_error(int line, const std::string& message) {
  throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + message);
}

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::vector<Token> scan() {
    std::vector<Token> tokens;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        tokens.push_back({Token::Kind::Newline, "\n", line_});
        ++line_;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == '"') {
        tokens.push_back(scan_string());
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '-' && pos_ + 1 < text_.size() &&
                  std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
        tokens.push_back(scan_number());
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        tokens.push_back(scan_name());
      } else if (std::string_view("(),:=@~-").find(c) != std::string_view::npos) {
        tokens.push_back({Token::Kind::Symbol, std::string(1, c), line_});
        ++pos_;
      } else {
        syntax_error(line_, std::string("unexpected character '") + c + "'");
      }
    }
    tokens.push_back({Token::Kind::End, "", line_});
    return tokens;
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;

  Token scan_string() {
    int line = line_;
    ++pos_;
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      char c = text_[pos_];
      if (c == '\n') syntax_error(line, "unterminated string literal");
      if (c == '\\') {
        if (pos_ + 1 >= text_.size()) syntax_error(line, "dangling escape");
        char esc = text_[pos_ + 1];
        switch (esc) {
          case '"': out.push_back('"'); break;
          case '\\': out.push_back('\\'); break;
          case 'n': out.push_back('\n'); break;
          case 't': out.push_back('\t'); break;
          case 'r': out.push_back('\r'); break;
          default: syntax_error(line, std::string("unknown escape '\\") + esc + "'");
        }
        pos_ += 2;
      } else {
        out.push_back(c);
        ++pos_;
      }
    }
    if (pos_ >= text_.size()) syntax_error(line, "unterminated string literal");
    ++pos_;
    return {Token::Kind::String, std::move(out), line};
  }

  Token scan_number() {
    int line = line_;
    size_t start = pos_;
    if (text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E' ||
            ((text_[pos_] == '+' || text_[pos_] == '-') &&
             (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E')))) {
      ++pos_;
    }
    return {Token::Kind::Number, std::string(text_.substr(start, pos_ - start)), line};
  }

  Token scan_name() {
    int line = line_;
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_' || text_[pos_] == '.' || text_[pos_] == '-')) {
      ++pos_;
    }
    return {Token::Kind::Name, std::string(text_.substr(start, pos_ - start)), line};
  }
};

class SpecParser {
 public:
  explicit SpecParser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  GenSpec parse() {
    GenSpec spec;
    for (;;) {
      skip_newlines();
      if (peek().kind == Token::Kind::End) break;
      Token keyword = expect(Token::Kind::Name, "statement keyword");
      if (keyword.text == "namespace") {
        spec.default_ns = expect(Token::Kind::String, "namespace URI").text;
      } else if (keyword.text == "gen") {
        std::string name = expect(Token::Kind::Name, "definition name").text;
        expect_symbol("=");
        GenExpr expr = parse_expr();
        for (const auto& [existing, unused] : spec.definitions)
          if (existing == name)
            syntax_error(keyword.line, "redefinition of '" + name + "'");
        spec.definitions.emplace_back(std::move(name), std::move(expr));
      } else if (keyword.text == "operation") {
        OperationStanza op;
        op.op_name = expect(Token::Kind::Name, "operation name").text;
        expect_keyword("input");
        expect_symbol("=");
        op.input_gen = expect(Token::Kind::Name, "input generator name").text;
        expect_keyword("output");
        expect_symbol("=");
        op.output_type = expect(Token::Kind::Name, "output type name").text;
        spec.operations.push_back(std::move(op));
      } else {
        syntax_error(keyword.line, "unknown statement '" + keyword.text + "'");
      }
      end_statement();
    }
    return spec;
  }

 private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;

  const Token& peek(size_t ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  Token next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

  void skip_newlines() {
    while (peek().kind == Token::Kind::Newline) ++pos_;
  }

  // Newlines are statement terminators at depth 0 and whitespace inside
  // parentheses, so multi-line definitions just need open parens.
  const Token& peek_expr(size_t ahead = 0) {
    while (peek().kind == Token::Kind::Newline && depth_ > 0) ++pos_;
    (void)ahead;
    return peek(ahead);
  }

  int depth_ = 0;

  Token expect(Token::Kind kind, const char* what) {
    if (depth_ > 0) skip_inner_newlines();
    Token t = next();
    if (t.kind != kind)
      syntax_error(t.line, std::string("expected ") + what + ", found '" + t.text + "'");
    return t;
  }

  void skip_inner_newlines() {
    while (peek().kind == Token::Kind::Newline) ++pos_;
  }

  void expect_symbol(const std::string& symbol) {
    if (depth_ > 0) skip_inner_newlines();
    Token t = next();
    if (t.kind != Token::Kind::Symbol || t.text != symbol)
      syntax_error(t.line, "expected '" + symbol + "', found '" + t.text + "'");
  }

  void expect_keyword(const std::string& keyword) {
    Token t = expect(Token::Kind::Name, keyword.c_str());
    if (t.text != keyword)
      syntax_error(t.line, "expected '" + keyword + "', found '" + t.text + "'");
  }

  bool at_symbol(const std::string& symbol) {
    if (depth_ > 0) skip_inner_newlines();
    const Token& t = peek();
    return t.kind == Token::Kind::Symbol && t.text == symbol;
  }

  void end_statement() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Newline) { ++pos_; return; }
    if (t.kind == Token::Kind::End) return;
    syntax_error(t.line, "unexpected trailing '" + t.text + "'");
  }

  GenExpr parse_expr() {
    Token head = expect(Token::Kind::Name, "generator expression");
    GenExpr e;
    if (head.text == "bool") {
      e.kind = GenExpr::Kind::Bool;
      return e;
    }
    if (head.text == "int") return parse_int(head.line);
    if (head.text == "float") return parse_float(head.line);
    if (head.text == "enum") return parse_enum(head.line);
    if (head.text == "list") return parse_list(head.line);
    if (head.text == "tuple") return parse_fields(GenExpr::Kind::Tuple, /*allow_empty=*/true);
    if (head.text == "choice") return parse_fields(GenExpr::Kind::Choice, /*allow_empty=*/false);
    if (head.text == "text_of") {
      open();
      e.kind = GenExpr::Kind::TextOf;
      e.children.push_back(parse_expr());
      close();
      return e;
    }
    if (head.text == "ref") {
      open();
      e.kind = GenExpr::Kind::Ref;
      e.ref_name = expect(Token::Kind::Name, "referenced name").text;
      close();
      return e;
    }
    syntax_error(head.line, "unknown generator '" + head.text + "'");
  }

  void open() { expect_symbol("("); ++depth_; }
  void close() { expect_symbol(")"); --depth_; }

  struct ParsedBound {
    Bound bound;
    bool open = false;
  };

  ParsedBound parse_bound(bool as_float) {
    if (depth_ > 0) skip_inner_newlines();
    ParsedBound out;
    bool negative = false;
    if (at_symbol("-")) { next(); negative = true; }
    Token t = next();
    if (t.kind == Token::Kind::Name && t.text == "inf") {
      out.bound = negative ? Bound::neg_inf() : Bound::pos_inf();
      return out;
    }
    if (t.kind != Token::Kind::Number)
      syntax_error(t.line, "expected a bound, found '" + t.text + "'");
    std::string lexical = (negative ? "-" : "") + t.text;
    if (as_float) {
      char* end = nullptr;
      double v = std::strtod(lexical.c_str(), &end);
      if (end != lexical.c_str() + lexical.size())
        syntax_error(t.line, "bad float literal '" + lexical + "'");
      out.bound = Bound::of_float(v);
      if (at_symbol("~")) { next(); out.open = true; }
    } else {
      auto v = parse_bigint(lexical);
      if (!v) syntax_error(t.line, "bad integer literal '" + lexical + "'");
      out.bound = Bound::of_int(*v);
    }
    return out;
  }

  GenExpr parse_int(int line) {
    open();
    GenExpr e;
    e.kind = GenExpr::Kind::Int;
    e.lo = parse_bound(false).bound;
    expect_symbol(",");
    e.hi = parse_bound(false).bound;
    close();
    if (e.lo.kind == Bound::Kind::PosInf || e.hi.kind == Bound::Kind::NegInf ||
        (e.lo.finite() && e.hi.finite() && e.lo.int_value > e.hi.int_value))
      syntax_error(line, "empty integer range");
    return e;
  }

  GenExpr parse_float(int line) {
    open();
    GenExpr e;
    e.kind = GenExpr::Kind::Float;
    ParsedBound lo = parse_bound(true);
    expect_symbol(",");
    ParsedBound hi = parse_bound(true);
    close();
    e.lo = lo.bound;
    e.hi = hi.bound;
    e.lo_open = lo.open;
    e.hi_open = hi.open;
    if (e.lo.kind == Bound::Kind::PosInf || e.hi.kind == Bound::Kind::NegInf ||
        (e.lo.finite() && e.hi.finite() && e.lo.float_value > e.hi.float_value))
      syntax_error(line, "empty float range");
    return e;
  }

  GenExpr parse_enum(int line) {
    open();
    GenExpr e;
    e.kind = GenExpr::Kind::Enum;
    for (;;) {
      e.enum_values.push_back(expect(Token::Kind::String, "enumeration value").text);
      if (!at_symbol(",")) break;
      next();
    }
    close();
    for (size_t i = 0; i < e.enum_values.size(); ++i)
      for (size_t j = i + 1; j < e.enum_values.size(); ++j)
        if (e.enum_values[i] == e.enum_values[j])
          syntax_error(line, "duplicate enumeration value \"" + e.enum_values[i] + "\"");
    return e;
  }

  GenExpr parse_list(int line) {
    open();
    GenExpr e;
    e.kind = GenExpr::Kind::List;
    ParsedBound min = parse_bound(false);
    if (!min.bound.finite() || min.bound.int_value < 0)
      syntax_error(line, "list minimum must be a natural number");
    e.list_min = static_cast<uint64_t>(min.bound.int_value);
    expect_symbol(",");
    e.list_max = parse_bound(false).bound;
    if (e.list_max.kind == Bound::Kind::NegInf ||
        (e.list_max.finite() &&
         e.list_max.int_value < static_cast<BigInt>(e.list_min)))
      syntax_error(line, "list maximum below minimum");
    expect_symbol(",");
    e.children.push_back(parse_expr());
    close();
    return e;
  }

  GenExpr parse_fields(GenExpr::Kind kind, bool allow_empty) {
    open();
    GenExpr e;
    e.kind = kind;
    if (depth_ > 0) skip_inner_newlines();
    if (allow_empty && at_symbol(")")) {
      close();
      return e;
    }
    for (;;) {
      GenExpr::Field field;
      field.name = expect(Token::Kind::Name, "field name").text;
      if (at_symbol("@")) {
        next();
        field.ns = expect(Token::Kind::String, "field namespace").text;
      }
      expect_symbol(":");
      field.expr = parse_expr();
      e.fields.push_back(std::move(field));
      if (!at_symbol(",")) break;
      next();
    }
    close();
    return e;
  }
};

void collect_refs(const GenExpr& e, std::vector<std::string>& out) {
  if (e.kind == GenExpr::Kind::Ref) out.push_back(e.ref_name);
  for (const GenExpr& child : e.children) collect_refs(child, out);
  for (const GenExpr::Field& field : e.fields) collect_refs(field.expr, out);
}

/// Refs must name an earlier definition. Anything else is either dangling
/// (UnknownName) or would allow a cycle (CycleError).
void validate_spec(const GenSpec& spec) {
  std::set<std::string> all;
  for (const auto& [name, expr] : spec.definitions) all.insert(name);

  std::set<std::string> seen;
  for (const auto& [name, expr] : spec.definitions) {
    std::vector<std::string> refs;
    collect_refs(expr, refs);
    for (const std::string& ref : refs) {
      if (!all.count(ref))
        throw Error(ErrorCode::UnknownName, "ref(" + ref + ") does not name a definition");
      if (!seen.count(ref))
        throw Error(ErrorCode::CycleError,
                    "ref(" + ref + ") in '" + name + "' points forward; definitions may "
                    "only reference earlier ones");
    }
    seen.insert(name);
  }
  for (const OperationStanza& op : spec.operations) {
    if (!all.count(op.input_gen))
      throw Error(ErrorCode::UnknownName,
                  "operation " + op.op_name + " input '" + op.input_gen + "' is undefined");
    if (!all.count(op.output_type))
      throw Error(ErrorCode::UnknownName,
                  "operation " + op.op_name + " output '" + op.output_type + "' is undefined");
  }
}

}  // namespace

GenSpec parse_genspec(std::string_view text, RefValidation validation) {
  Scanner scanner(text);
  SpecParser parser(scanner.scan());
  GenSpec spec = parser.parse();
  if (validation == RefValidation::Strict) validate_spec(spec);
  return spec;
}

GenSpec merge_overrides(const GenSpec& base, const GenSpec& overrides) {
  GenSpec merged = base;
  for (const auto& [name, expr] : overrides.definitions) {
    bool found = false;
    for (auto& [base_name, base_expr] : merged.definitions) {
      if (base_name == name) {
        base_expr = expr;
        found = true;
        break;
      }
    }
    if (!found)
      throw Error(ErrorCode::UnknownName, "override '" + name + "' does not match any definition");
  }
  for (const OperationStanza& op : overrides.operations) {
    bool found = false;
    for (OperationStanza& existing : merged.operations) {
      if (existing.op_name == op.op_name) {
        existing = op;
        found = true;
        break;
      }
    }
    if (!found)
      throw Error(ErrorCode::UnknownName,
                  "override for unknown operation '" + op.op_name + "'");
  }
  validate_spec(merged);
  return merged;
}

// ---- to_ir ----

namespace {

struct IrBuilder {
  const GenSpec& spec;

  TypeIR build(const GenExpr& e, bool as_text) const {
    switch (e.kind) {
      case GenExpr::Kind::Int:
        return TypeIR{ScalarIR{ScalarKind::Integer, e.lo, e.hi, false, false,
                               as_text ? Wire::AsText : Wire::Native}};
      case GenExpr::Kind::Float:
        return TypeIR{ScalarIR{ScalarKind::Float, e.lo, e.hi, e.lo_open, e.hi_open,
                               as_text ? Wire::AsText : Wire::Native}};
      case GenExpr::Kind::Bool:
        return TypeIR{ScalarIR{ScalarKind::Boolean, Bound::neg_inf(), Bound::pos_inf(),
                               false, false, as_text ? Wire::AsText : Wire::Native}};
      case GenExpr::Kind::Enum:
        return TypeIR{EnumIR{e.enum_values}};
      case GenExpr::Kind::List: {
        ListIR list;
        list.min_len = e.list_min;
        list.max_len = e.list_max;
        list.inner = make_ir(build(e.children[0], false));
        list.text = as_text;
        return TypeIR{std::move(list)};
      }
      case GenExpr::Kind::Tuple: {
        TupleIR tuple;
        for (const GenExpr::Field& field : e.fields) tuple.fields.push_back(named(field));
        return TypeIR{std::move(tuple)};
      }
      case GenExpr::Kind::Choice: {
        ChoiceIR choice;
        for (const GenExpr::Field& field : e.fields)
          choice.alternatives.push_back(named(field));
        return TypeIR{std::move(choice)};
      }
      case GenExpr::Kind::TextOf: {
        const GenExpr& inner = e.children[0];
        if (inner.kind == GenExpr::Kind::Tuple || inner.kind == GenExpr::Kind::Choice ||
            inner.kind == GenExpr::Kind::Enum)
          throw Error(ErrorCode::SyntaxError, "text_of applies to scalars and lists only");
        return build(inner, true);
      }
      case GenExpr::Kind::Ref: {
        const GenExpr* target = spec.find(e.ref_name);
        if (!target)
          throw Error(ErrorCode::UnknownName, "ref(" + e.ref_name + ") is undefined");
        return build(*target, as_text);
      }
    }
    throw Error(ErrorCode::Internal, "unhandled generator expression");
  }

  NamedIR named(const GenExpr::Field& field) const {
    NamedIR n;
    n.local_name = field.name;
    n.ns = field.ns ? *field.ns : spec.default_ns;
    n.qualified = !n.ns.empty();
    n.ir = make_ir(build(field.expr, false));
    return n;
  }
};

}  // namespace

TypeIR to_ir(const GenSpec& spec, const std::string& name) {
  const GenExpr* def = spec.find(name);
  if (!def)
    throw Error(ErrorCode::UnknownName, "'" + name + "' is not defined in the generator spec");
  return IrBuilder{spec}.build(*def, false);
}

}  // namespace soapcheck
