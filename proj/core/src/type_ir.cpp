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

#include "soapcheck/type_ir.hpp"

#include <algorithm>
#include <cstdlib>

namespace soapcheck {

namespace {

BigInt pow2(int bits) { return BigInt{1} << bits; }

TypeIR int_scalar(Bound lo, Bound hi, Wire wire) {
  return TypeIR{ScalarIR{ScalarKind::Integer, lo, hi, false, false, wire}};
}

BigInt parse_int_facet(const std::string& lexical, const char* facet) {
  auto value = parse_bigint(lexical);
  if (!value)
    throw Error(ErrorCode::ContradictoryFacets,
                std::string(facet) + " value '" + lexical + "' is not an integer");
  return *value;
}

double parse_float_facet(const std::string& lexical, const char* facet) {
  char* end = nullptr;
  double value = std::strtod(lexical.c_str(), &end);
  if (end != lexical.c_str() + lexical.size() || lexical.empty())
    throw Error(ErrorCode::ContradictoryFacets,
                std::string(facet) + " value '" + lexical + "' is not a number");
  return value;
}

bool is_synthetic(const QName& type) {
  return !type.local.empty() && type.local[0] == '$';
}

}  // namespace

int Bound::cmp_int(const Bound& a, const Bound& b) {
  auto rank = [](const Bound& x) { return x.kind == Kind::NegInf ? -1 : x.kind == Kind::PosInf ? 1 : 0; };
  if (rank(a) != rank(b)) return rank(a) < rank(b) ? -1 : 1;
  if (a.kind != Kind::Finite) return 0;
  if (a.int_value == b.int_value) return 0;
  return a.int_value < b.int_value ? -1 : 1;
}

int Bound::cmp_float(const Bound& a, const Bound& b) {
  auto rank = [](const Bound& x) { return x.kind == Kind::NegInf ? -1 : x.kind == Kind::PosInf ? 1 : 0; };
  if (rank(a) != rank(b)) return rank(a) < rank(b) ? -1 : 1;
  if (a.kind != Kind::Finite) return 0;
  if (a.float_value == b.float_value) return 0;
  return a.float_value < b.float_value ? -1 : 1;
}

TypeIRPtr make_ir(TypeIR ir) { return std::make_shared<const TypeIR>(std::move(ir)); }

bool ir_equal(const TypeIR& a, const TypeIR& b) {
  if (a.node.index() != b.node.index()) return false;
  if (auto* sa = a.scalar()) {
    auto* sb = b.scalar();
    return sa->kind == sb->kind && sa->min == sb->min && sa->max == sb->max &&
           sa->min_open == sb->min_open && sa->max_open == sb->max_open &&
           sa->wire == sb->wire;
  }
  if (auto* ea = a.enumeration()) return ea->values == b.enumeration()->values;
  if (auto* la = a.list()) {
    auto* lb = b.list();
    return la->min_len == lb->min_len && la->max_len == lb->max_len &&
           la->text == lb->text && ir_equal(*la->inner, *lb->inner);
  }
  if (auto* ta = a.tuple()) {
    auto* tb = b.tuple();
    if (ta->fields.size() != tb->fields.size()) return false;
    for (size_t i = 0; i < ta->fields.size(); ++i)
      if (!named_equal(ta->fields[i], tb->fields[i])) return false;
    return true;
  }
  auto* ca = a.choice();
  auto* cb = b.choice();
  if (ca->alternatives.size() != cb->alternatives.size()) return false;
  for (size_t i = 0; i < ca->alternatives.size(); ++i)
    if (!named_equal(ca->alternatives[i], cb->alternatives[i])) return false;
  return true;
}

bool named_equal(const NamedIR& a, const NamedIR& b) {
  // Namespaces compare at the wire level: an unqualified element is the
  // same element no matter which schema section declared it.
  auto wire_ns = [](const NamedIR& n) { return n.qualified ? n.ns : std::string(); };
  return a.local_name == b.local_name && wire_ns(a) == wire_ns(b) && ir_equal(*a.ir, *b.ir);
}

namespace {

bool metadata_identical(const NamedIR& a, const NamedIR& b) {
  return a.ancestor_path == b.ancestor_path && a.arity == b.arity &&
         a.type_token == b.type_token && a.occurs_list == b.occurs_list &&
         a.qualified == b.qualified;
}

bool ir_identical_rec(const TypeIR& a, const TypeIR& b) {
  if (!ir_equal(a, b)) return false;
  auto fields_of = [](const TypeIR& t) -> const std::vector<NamedIR>* {
    if (auto* tu = t.tuple()) return &tu->fields;
    if (auto* ch = t.choice()) return &ch->alternatives;
    return nullptr;
  };
  if (auto* la = a.list()) return ir_identical_rec(*la->inner, *b.list()->inner);
  const auto* fa = fields_of(a);
  const auto* fb = fields_of(b);
  if (!fa) return true;
  for (size_t i = 0; i < fa->size(); ++i) {
    if (!metadata_identical((*fa)[i], (*fb)[i])) return false;
    if (!ir_identical_rec(*(*fa)[i].ir, *(*fb)[i].ir)) return false;
  }
  return true;
}

}  // namespace

bool ir_identical(const NamedIR& a, const NamedIR& b) {
  return named_equal(a, b) && metadata_identical(a, b) && ir_identical_rec(*a.ir, *b.ir);
}

std::string path_id(const NamedIR& n) {
  std::string out;
  for (const auto& token : n.ancestor_path) {
    out += token;
    out += '_';
  }
  out += n.local_name;
  if (n.arity) out += "_" + std::to_string(*n.arity);
  if (n.type_token && !n.occurs_list) out += "_" + *n.type_token;
  return out;
}

std::optional<std::string> list_item_name(const NamedIR& n) {
  if (!n.occurs_list || !n.type_token) return std::nullopt;
  return path_id(n) + "_" + *n.type_token;
}

std::vector<std::string> child_path(const NamedIR& n) {
  std::vector<std::string> path = n.ancestor_path;
  std::string own = n.local_name;
  if (n.arity) own += "_" + std::to_string(*n.arity);
  path.push_back(std::move(own));
  if (n.type_token) path.push_back(*n.type_token);
  return path;
}

TypeIR builtin_ir(const QName& xsd_name) {
  if (xsd_name.ns != kXsdNs)
    throw Error(ErrorCode::UnsupportedBuiltin,
                xsd_name.to_string() + " is not an XSD built-in type");
  const std::string& n = xsd_name.local;

  if (n == "boolean")
    return TypeIR{ScalarIR{ScalarKind::Boolean, Bound::neg_inf(), Bound::pos_inf(),
                           false, false, Wire::Native}};
  if (n == "float" || n == "double")
    return TypeIR{ScalarIR{ScalarKind::Float, Bound::neg_inf(), Bound::pos_inf(),
                           false, false, Wire::AsText}};
  if (n == "integer" || n == "decimal")
    return int_scalar(Bound::neg_inf(), Bound::pos_inf(), Wire::AsText);
  if (n == "nonPositiveInteger")
    return int_scalar(Bound::neg_inf(), Bound::of_int(0), Wire::AsText);
  if (n == "negativeInteger")
    return int_scalar(Bound::neg_inf(), Bound::of_int(-1), Wire::AsText);
  if (n == "long")
    return int_scalar(Bound::of_int(-pow2(63)), Bound::of_int(pow2(63) - 1), Wire::AsText);
  if (n == "int")
    return int_scalar(Bound::of_int(-pow2(31)), Bound::of_int(pow2(31) - 1), Wire::Native);
  if (n == "short")
    return int_scalar(Bound::of_int(-pow2(15)), Bound::of_int(pow2(15) - 1), Wire::AsText);
  if (n == "byte")
    return int_scalar(Bound::of_int(-pow2(7)), Bound::of_int(pow2(7) - 1), Wire::AsText);
  if (n == "nonNegativeInteger")
    return int_scalar(Bound::of_int(0), Bound::pos_inf(), Wire::AsText);
  if (n == "positiveInteger")
    return int_scalar(Bound::of_int(1), Bound::pos_inf(), Wire::AsText);
  if (n == "unsignedLong")
    return int_scalar(Bound::of_int(0), Bound::of_int(pow2(64) - 1), Wire::AsText);
  if (n == "unsignedInt")
    return int_scalar(Bound::of_int(0), Bound::of_int(pow2(32) - 1), Wire::AsText);
  if (n == "unsignedShort")
    return int_scalar(Bound::of_int(0), Bound::of_int(pow2(16) - 1), Wire::AsText);
  if (n == "unsignedByte")
    return int_scalar(Bound::of_int(0), Bound::of_int(pow2(8) - 1), Wire::AsText);
  if (n == "string") {
    ListIR list;
    list.min_len = 0;
    list.max_len = Bound::pos_inf();
    list.inner = make_ir(int_scalar(Bound::of_int(32), Bound::of_int(127), Wire::Native));
    list.text = true;
    return TypeIR{std::move(list)};
  }
  throw Error(ErrorCode::UnsupportedBuiltin, "no mapping for xsd:" + n);
}

namespace {

struct Lowerer {
  const XsdSchema& schema;

  TypeIR lower_simple(const SimpleTypeDef& def) {
    const FacetSet& f = def.facets;
    if (f.pattern)
      throw Error(ErrorCode::UnsupportedFacet, "the pattern facet is not handled");
    if (f.unsupported)
      throw Error(ErrorCode::UnsupportedFacet, "facet '" + *f.unsupported + "' is not handled");

    TypeIR base = lower_base(def.base);

    if (f.enumeration) {
      if (f.enumeration->empty())
        throw Error(ErrorCode::ContradictoryFacets, "empty enumeration");
      EnumIR e;
      for (const std::string& v : *f.enumeration)
        if (std::find(e.values.begin(), e.values.end(), v) == e.values.end())
          e.values.push_back(v);
      if (const EnumIR* base_enum = base.enumeration()) {
        for (const std::string& v : e.values)
          if (std::find(base_enum->values.begin(), base_enum->values.end(), v) ==
              base_enum->values.end())
            throw Error(ErrorCode::ContradictoryFacets,
                        "enumeration value '" + v + "' is outside the base enumeration");
      }
      return TypeIR{std::move(e)};
    }

    if (const ScalarIR* scalar = base.scalar()) {
      ScalarIR narrowed = *scalar;
      if (f.min_length || f.max_length)
        throw Error(ErrorCode::UnsupportedFacet, "length facets on a non-string type");
      if (scalar->kind == ScalarKind::Boolean) {
        if (!f.empty())
          throw Error(ErrorCode::UnsupportedFacet, "facets on xsd:boolean");
        return base;
      }
      if (scalar->kind == ScalarKind::Integer) {
        if (f.min_inclusive)
          tighten_int_min(narrowed, parse_int_facet(*f.min_inclusive, "minInclusive"));
        if (f.min_exclusive)
          tighten_int_min(narrowed, parse_int_facet(*f.min_exclusive, "minExclusive") + 1);
        if (f.max_inclusive)
          tighten_int_max(narrowed, parse_int_facet(*f.max_inclusive, "maxInclusive"));
        if (f.max_exclusive)
          tighten_int_max(narrowed, parse_int_facet(*f.max_exclusive, "maxExclusive") - 1);
        if (Bound::cmp_int(narrowed.min, narrowed.max) > 0)
          throw Error(ErrorCode::ContradictoryFacets, "empty integer range after facets");
      } else {
        if (f.min_inclusive)
          tighten_float_min(narrowed, parse_float_facet(*f.min_inclusive, "minInclusive"), false);
        if (f.min_exclusive)
          tighten_float_min(narrowed, parse_float_facet(*f.min_exclusive, "minExclusive"), true);
        if (f.max_inclusive)
          tighten_float_max(narrowed, parse_float_facet(*f.max_inclusive, "maxInclusive"), false);
        if (f.max_exclusive)
          tighten_float_max(narrowed, parse_float_facet(*f.max_exclusive, "maxExclusive"), true);
        int order = Bound::cmp_float(narrowed.min, narrowed.max);
        if (order > 0 || (order == 0 && (narrowed.min_open || narrowed.max_open)))
          throw Error(ErrorCode::ContradictoryFacets, "empty float range after facets");
      }
      return TypeIR{narrowed};
    }

    if (const ListIR* list = base.list()) {
      if (f.min_inclusive || f.max_inclusive || f.min_exclusive || f.max_exclusive)
        throw Error(ErrorCode::UnsupportedFacet, "numeric bound facets on a string type");
      ListIR narrowed = *list;
      if (f.min_length && *f.min_length > narrowed.min_len)
        narrowed.min_len = *f.min_length;
      if (f.max_length) {
        Bound new_max = Bound::of_int(static_cast<BigInt>(*f.max_length));
        if (Bound::cmp_int(new_max, narrowed.max_len) < 0) narrowed.max_len = new_max;
      }
      if (narrowed.max_len.finite() &&
          static_cast<BigInt>(narrowed.min_len) > narrowed.max_len.int_value)
        throw Error(ErrorCode::ContradictoryFacets, "minLength exceeds maxLength");
      return TypeIR{narrowed};
    }

    throw Error(ErrorCode::UnsupportedFacet, "facets on an enumeration base");
  }

  TypeIR lower_base(const QName& base) {
    if (base.ns == kXsdNs) return builtin_ir(base);
    if (const SimpleTypeDef* def = schema.find_simple_type(base)) return lower_simple(*def);
    if (schema.find_complex_type(base))
      throw Error(ErrorCode::UnresolvedReference,
                  "simple type restriction of complex type " + base.to_string());
    throw Error(ErrorCode::UnresolvedReference, "base type " + base.to_string() + " not found");
  }

  static void tighten_int_min(ScalarIR& s, BigInt v) {
    Bound b = Bound::of_int(v);
    if (Bound::cmp_int(b, s.min) > 0) s.min = b;
  }
  static void tighten_int_max(ScalarIR& s, BigInt v) {
    Bound b = Bound::of_int(v);
    if (Bound::cmp_int(b, s.max) < 0) s.max = b;
  }
  static void tighten_float_min(ScalarIR& s, double v, bool open) {
    Bound b = Bound::of_float(v);
    int order = Bound::cmp_float(b, s.min);
    if (order > 0) {
      s.min = b;
      s.min_open = open;
    } else if (order == 0 && open) {
      s.min_open = true;
    }
  }
  static void tighten_float_max(ScalarIR& s, double v, bool open) {
    Bound b = Bound::of_float(v);
    int order = Bound::cmp_float(b, s.max);
    if (order < 0) {
      s.max = b;
      s.max_open = open;
    } else if (order == 0 && open) {
      s.max_open = true;
    }
  }

  TypeIRPtr lower_type_ref(const QName& type, const std::vector<std::string>& path) {
    if (type.ns == kXsdNs) return make_ir(builtin_ir(type));
    if (const SimpleTypeDef* simple = schema.find_simple_type(type))
      return make_ir(lower_simple(*simple));
    if (const ComplexTypeDef* complex = schema.find_complex_type(type))
      return lower_complex(*complex, path);
    throw Error(ErrorCode::UnresolvedReference, "type " + type.to_string() + " not found");
  }

  TypeIRPtr lower_complex(const ComplexTypeDef& def, const std::vector<std::string>& path) {
    std::vector<NamedIR> fields;
    fields.reserve(def.children.size());
    for (const ElementDecl& child : def.children)
      fields.push_back(lower_decl(child, path, std::nullopt));
    if (def.combinator == ComplexTypeDef::Combinator::Choice) {
      if (fields.empty())
        throw Error(ErrorCode::UnresolvedReference, "choice with no alternatives");
      return make_ir(TypeIR{ChoiceIR{std::move(fields)}});
    }
    // `all` carries no ordering obligation for us: encoders emit one fixed
    // order anyway, so it lowers exactly like `sequence`.
    return make_ir(TypeIR{TupleIR{std::move(fields)}});
  }

  NamedIR lower_decl(const ElementDecl& decl, const std::vector<std::string>& path,
                     std::optional<uint32_t> arity) {
    NamedIR n;
    n.local_name = decl.name;
    n.ns = decl.ns;
    n.ancestor_path = path;
    n.arity = arity;
    n.qualified = decl.ns.empty() ? false
                  : (decl.global || schema.element_form_qualified(decl.ns));
    if (decl.type.ns != kXsdNs && !is_synthetic(decl.type))
      n.type_token = decl.type.local;

    TypeIRPtr type_ir = lower_type_ref(decl.type, child_path_of(n));
    if (decl.single_occurrence()) {
      n.ir = std::move(type_ir);
    } else {
      ListIR wrapper;
      wrapper.min_len = decl.min_occurs;
      wrapper.max_len = decl.max_occurs
                            ? Bound::of_int(static_cast<BigInt>(*decl.max_occurs))
                            : Bound::pos_inf();
      wrapper.inner = std::move(type_ir);
      wrapper.text = false;
      n.ir = make_ir(TypeIR{std::move(wrapper)});
      n.occurs_list = true;
    }
    return n;
  }

  static std::vector<std::string> child_path_of(const NamedIR& n) { return child_path(n); }
};

}  // namespace

TypeIR lower_simple_type(const XsdSchema& schema, const SimpleTypeDef& def) {
  return Lowerer{schema}.lower_simple(def);
}

NamedIR lower_element(const XsdSchema& schema, const QName& element, uint32_t arity) {
  const ElementDecl* decl = schema.find_element(element);
  if (!decl)
    throw Error(ErrorCode::UnresolvedReference,
                "element " + element.to_string() + " not declared");
  return Lowerer{schema}.lower_decl(*decl, {}, arity);
}

NamedIR lower_type(const XsdSchema& schema, const QName& type) {
  Lowerer lowerer{schema};
  NamedIR n;
  n.local_name = type.local;
  n.ns = type.ns;
  n.ir = lowerer.lower_type_ref(type, {type.local});
  return n;
}

}  // namespace soapcheck
