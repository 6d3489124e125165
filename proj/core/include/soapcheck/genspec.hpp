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
#include <vector>

#include "soapcheck/type_ir.hpp"

namespace soapcheck {

inline constexpr const char* kDefaultGenSpecFilename = "proper_ws_autogen.genspec";

/// One generator expression in the spec file.
///
///   gen NAME = EXPR
///   EXPR := int(lo, hi) | float(lo, hi) | bool | enum("a", ...)
///         | list(min, max, EXPR) | tuple(name: EXPR, ...)
///         | choice(name: EXPR, ...) | text_of(EXPR) | ref(NAME)
///
/// `inf` / `-inf` are the infinite bounds; a `~` suffix on a float bound
/// marks it exclusive; `name @ "ns": EXPR` overrides the file's default
/// namespace for one field. text_of marks the as-text wire form (a string
/// rendering of the generated scalar, or character-string content for a
/// list).
struct GenExpr {
  enum class Kind { Int, Float, Bool, Enum, List, Tuple, Choice, TextOf, Ref };

  struct Field;

  Kind kind = Kind::Bool;
  Bound lo, hi;                        // Int / Float
  bool lo_open = false, hi_open = false;  // Float exclusive endpoints
  std::vector<std::string> enum_values;
  uint64_t list_min = 0;
  Bound list_max = Bound::pos_inf();
  std::vector<GenExpr> children;       // List / TextOf inner expression
  std::vector<Field> fields;           // Tuple / Choice
  std::string ref_name;

  bool operator==(const GenExpr&) const;
};

struct GenExpr::Field {
  std::string name;
  std::optional<std::string> ns;  // overrides the file default
  GenExpr expr;

  bool operator==(const Field&) const = default;
};

struct OperationStanza {
  std::string op_name;
  std::string input_gen;
  std::string output_type;

  bool operator==(const OperationStanza&) const = default;
};

/// Parsed generator-spec file: an ordered list of named definitions plus one
/// operation stanza per service operation. Refs may only point backwards, so
/// the definition list is cycle-free by construction.
struct GenSpec {
  std::string default_ns;
  std::vector<std::pair<std::string, GenExpr>> definitions;
  std::vector<OperationStanza> operations;

  const GenExpr* find(std::string_view name) const;
  bool operator==(const GenSpec&) const = default;
};

/// An operation with its lowered input and output trees; the unit emit()
/// consumes.
struct LoweredOperation {
  std::string op_name;
  NamedIR input;
  NamedIR output;
};

/// Lowers every operation of the model (inputs at arity position 1).
/// Throws if any operation's schema cannot be lowered; response_check
/// catches per-operation instead.
std::vector<LoweredOperation> lower_operations(const WsdlModel& model);

/// Renders the lowered operations as a generator-spec file: one named
/// definition per IR node (names from path_id), then one operation stanza
/// per operation, output types included so response structure is visible.
/// The result re-parses to a structurally equal GenSpec.
std::string emit(const WsdlModel& model, const std::vector<LoweredOperation>& lowered);

enum class RefValidation {
  Strict,    // refs must resolve to earlier definitions (whole files)
  Deferred,  // skip resolution; used for override fragments merged later
};

/// Parses spec text. Syntax problems carry 1-based line numbers; dangling
/// refs raise UnknownName and forward/self refs raise CycleError.
GenSpec parse_genspec(std::string_view text,
                      RefValidation validation = RefValidation::Strict);

/// Replaces same-named definitions in `base` with those from `overrides`
/// (definition order is kept, so ref direction is re-checked). Overriding an
/// unknown name raises UnknownName; a ref made forward raises CycleError.
GenSpec merge_overrides(const GenSpec& base, const GenSpec& overrides);

/// Translates a named definition to a TypeIR with refs inlined. Field
/// namespaces default to the file's namespace; naming paths are not
/// reconstructed (generator names live in the definition names).
TypeIR to_ir(const GenSpec& spec, const std::string& name);

}  // namespace soapcheck
