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
#include <string>
#include <utility>
#include <vector>

#include "soapcheck/int128.hpp"
#include "soapcheck/type_ir.hpp"

namespace soapcheck {

/// A generated test datum shaped by a TypeIR. Character strings and
/// enumeration picks are lists of code points (printable ASCII from the
/// default string generator); tuples keep their field names.
struct Value {
  enum class Kind { Int, Float, Bool, List, Tuple, Choice };

  Kind kind = Kind::Int;
  BigInt int_v = 0;
  double float_v = 0.0;
  bool bool_v = false;
  std::vector<Value> items;                              // List, Choice (single item)
  std::vector<std::pair<std::string, Value>> fields;     // Tuple
  size_t alt_index = 0;                                  // Choice

  static Value of_int(BigInt v);
  static Value of_float(double v);
  static Value of_bool(bool v);
  static Value list(std::vector<Value> items);
  static Value tuple(std::vector<std::pair<std::string, Value>> fields);
  static Value choice(size_t index, Value inner);
  /// UTF-8 text as a list of code points.
  static Value text(std::string_view utf8);

  /// Inverse of text(); invalid byte sequences were never produced by this
  /// library, so this is only called on values built from text().
  std::string to_text() const;

  bool operator==(const Value& other) const;
};

/// Size budget and seed for one generation. Equal (ir, seed, size) always
/// yield the equal Value.
struct GenContext {
  uint64_t seed = 0;
  uint32_t size = 1;  // >= 1
};

/// Post-generation transforms keyed by generator name (path_id). Applied
/// after generation and again after every shrink step, so domain-specific
/// fixups (checksums and the like) survive minimization.
class Hooks {
 public:
  using Transform = std::function<Value(Value)>;

  void add(std::string path, Transform fn) { transforms_[std::move(path)] = std::move(fn); }
  const Transform* find(const std::string& path) const {
    auto it = transforms_.find(path);
    return it == transforms_.end() ? nullptr : &it->second;
  }
  bool empty() const { return transforms_.empty(); }

 private:
  std::map<std::string, Transform> transforms_;
};

/// Draws a random Value conforming to `ir`.
///
/// Unbounded scalar ranges are windowed to magnitude size*8 (one-sided
/// ranges anchor the window at their finite bound); list lengths are uniform
/// over [min_len, min(max_len, min_len + size)]; choices and enumerations
/// pick uniformly. Throws ContradictoryRange when the value set is empty.
Value generate(const TypeIR& ir, const GenContext& ctx);

/// Structural and bounds check of `v` against `ir`. Total.
bool conforms(const TypeIR& ir, const Value& v);

/// Shrink candidates ordered most-aggressive first. Every candidate
/// conforms to `ir` and is strictly smaller under the size order; the list
/// is empty exactly when `v` is minimal.
std::vector<Value> shrink_candidates(const TypeIR& ir, const Value& v);

/// The strict size order used by shrinking: integers/floats by distance to
/// the in-range point nearest zero, lists by (length, elementwise), tuples
/// elementwise, choices by (alternative index, inner).
bool size_less(const TypeIR& ir, const Value& a, const Value& b);

/// The least value of the type under the size order.
Value minimal_value(const TypeIR& ir);

/// generate() over a lowered tree, applying hooks by generator name.
Value generate_named(const NamedIR& root, const GenContext& ctx, const Hooks* hooks = nullptr);

/// Re-applies hooks to a (possibly shrunk) value of the given tree.
Value apply_transforms(const NamedIR& root, Value v, const Hooks& hooks);

/// Human-readable literal, e.g. {in = "abc", c = ""} or [1, 2, 3]. The IR
/// distinguishes character strings from plain lists; pass nullptr to force
/// the plain rendering.
std::string render_value(const TypeIR* ir, const Value& v);

}  // namespace soapcheck
