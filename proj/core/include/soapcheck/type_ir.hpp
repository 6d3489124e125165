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

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "soapcheck/error.hpp"
#include "soapcheck/int128.hpp"
#include "soapcheck/qname.hpp"
#include "soapcheck/schema_model.hpp"

namespace soapcheck {

/// One endpoint of a scalar or list-length range. Integer payloads are kept
/// exact (no rounding through double); both payloads are filled so equality
/// is field-wise regardless of which interpretation a consumer uses.
struct Bound {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  BigInt int_value = 0;
  double float_value = 0.0;

  static Bound neg_inf() { return {Kind::NegInf, 0, 0.0}; }
  static Bound pos_inf() { return {Kind::PosInf, 0, 0.0}; }
  static Bound of_int(BigInt v) { return {Kind::Finite, v, static_cast<double>(v)}; }
  static Bound of_float(double v) { return {Kind::Finite, static_cast<BigInt>(v), v}; }

  bool finite() const { return kind == Kind::Finite; }
  bool operator==(const Bound&) const = default;

  /// Three-way comparison under the bound order
  /// (negative-infinity < any finite < positive-infinity).
  static int cmp_int(const Bound& a, const Bound& b);
  static int cmp_float(const Bound& a, const Bound& b);
};

enum class ScalarKind { Integer, Float, Boolean };

/// Wire form of a scalar: AsText values are rendered as strings inside the
/// SOAP body (the default for most XSD numerics), Native values keep their
/// host representation until encoding.
enum class Wire { AsText, Native };

struct TypeIR;
using TypeIRPtr = std::shared_ptr<const TypeIR>;

struct ScalarIR {
  ScalarKind kind = ScalarKind::Integer;
  Bound min = Bound::neg_inf();
  Bound max = Bound::pos_inf();
  // Open endpoints arise only from exclusive facets on float types.
  bool min_open = false;
  bool max_open = false;
  Wire wire = Wire::Native;
};

struct EnumIR {
  std::vector<std::string> values;  // distinct, in declaration order
};

struct ListIR {
  uint64_t min_len = 0;
  Bound max_len = Bound::pos_inf();
  TypeIRPtr inner;
  // True when the list is a character string (element content is the joined
  // characters) rather than a repeated-element collection.
  bool text = false;
};

struct NamedIR;

struct TupleIR {
  std::vector<NamedIR> fields;
};

struct ChoiceIR {
  std::vector<NamedIR> alternatives;  // non-empty
};

struct TypeIR {
  std::variant<ScalarIR, EnumIR, ListIR, TupleIR, ChoiceIR> node;

  const ScalarIR* scalar() const { return std::get_if<ScalarIR>(&node); }
  const EnumIR* enumeration() const { return std::get_if<EnumIR>(&node); }
  const ListIR* list() const { return std::get_if<ListIR>(&node); }
  const TupleIR* tuple() const { return std::get_if<TupleIR>(&node); }
  const ChoiceIR* choice() const { return std::get_if<ChoiceIR>(&node); }
};

TypeIRPtr make_ir(TypeIR ir);

/// A type tree annotated with the element name, the ancestor token path that
/// makes generator names unique, and the declaring namespace.
struct NamedIR {
  std::string local_name;
  std::vector<std::string> ancestor_path;
  std::string ns;
  TypeIRPtr ir;

  // Naming/encoding metadata, not part of semantic equality:
  std::optional<uint32_t> arity;            // argument position, operation roots only
  std::optional<std::string> type_token;    // named user type's path token
  bool occurs_list = false;                 // ir wraps the type in an occurrence list
  bool qualified = true;                    // wire-level element form
};

/// Semantic equality: structure, names, namespaces, bounds and wire forms.
/// Naming metadata (ancestor paths, arity, tokens) is excluded; use
/// ir_identical for bit-level comparisons of a lowering result.
bool ir_equal(const TypeIR& a, const TypeIR& b);
bool named_equal(const NamedIR& a, const NamedIR& b);
bool ir_identical(const NamedIR& a, const NamedIR& b);

/// Underscore-joined ancestor path + local name (+ arity / named-type
/// tokens), e.g. "Order_1_products_ProductType_price". Unique per lowering.
std::string path_id(const NamedIR& n);

/// Definition name for the item type of an occurrence list, e.g.
/// "Order_1_products_ProductType" under the "Order_1_products" list node.
std::optional<std::string> list_item_name(const NamedIR& n);

/// Ancestor token vector for this node's descendants.
std::vector<std::string> child_path(const NamedIR& n);

/// Maps an XSD built-in simple type to its IR. Integer-family types carry
/// exact two's-complement-derived bounds; `string` becomes a character list
/// over the printable ASCII range. Unknown built-ins (dates and friends)
/// raise UnsupportedBuiltin.
TypeIR builtin_ir(const QName& xsd_name);

/// Narrows a base type by the restriction's facets: min/max facets tighten
/// scalar bounds (exclusive integer bounds shift by one, exclusive float
/// bounds are recorded open), enumerations replace the IR entirely, and
/// length facets tighten string list bounds.
TypeIR lower_simple_type(const XsdSchema& schema, const SimpleTypeDef& def);

/// Lowers a global element declaration depth-first into a NamedIR tree.
/// The root carries the operation-argument arity suffix in its name path.
NamedIR lower_element(const XsdSchema& schema, const QName& element, uint32_t arity = 1);

/// Lowers a named type as a standalone root (no arity token), with the type
/// name as the naming context.
NamedIR lower_type(const XsdSchema& schema, const QName& type);

}  // namespace soapcheck
