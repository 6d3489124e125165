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

#include "soapcheck/generate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "soapcheck/rng.hpp"
#include "soapcheck/xml.hpp"

namespace soapcheck {

// ---- Value ----

Value Value::of_int(BigInt v) {
  Value out;
  out.kind = Kind::Int;
  out.int_v = v;
  return out;
}

Value Value::of_float(double v) {
  Value out;
  out.kind = Kind::Float;
  out.float_v = v;
  return out;
}

Value Value::of_bool(bool v) {
  Value out;
  out.kind = Kind::Bool;
  out.bool_v = v;
  return out;
}

Value Value::list(std::vector<Value> items) {
  Value out;
  out.kind = Kind::List;
  out.items = std::move(items);
  return out;
}

Value Value::tuple(std::vector<std::pair<std::string, Value>> fields) {
  Value out;
  out.kind = Kind::Tuple;
  out.fields = std::move(fields);
  return out;
}

Value Value::choice(size_t index, Value inner) {
  Value out;
  out.kind = Kind::Choice;
  out.alt_index = index;
  out.items.push_back(std::move(inner));
  return out;
}

Value Value::text(std::string_view utf8) {
  std::vector<Value> points;
  for (size_t i = 0; i < utf8.size();) {
    auto b = static_cast<unsigned char>(utf8[i]);
    uint32_t cp = 0;
    int len = 1;
    if (b < 0x80) { cp = b; }
    else if ((b >> 5) == 0x6) { cp = b & 0x1F; len = 2; }
    else if ((b >> 4) == 0xE) { cp = b & 0x0F; len = 3; }
    else { cp = b & 0x07; len = 4; }
    for (int k = 1; k < len && i + k < utf8.size(); ++k)
      cp = (cp << 6) | (static_cast<unsigned char>(utf8[i + k]) & 0x3F);
    points.push_back(Value::of_int(cp));
    i += static_cast<size_t>(len);
  }
  return Value::list(std::move(points));
}

std::string Value::to_text() const {
  std::string out;
  for (const Value& item : items)
    utf8_append(out, static_cast<uint32_t>(item.int_v));
  return out;
}

bool Value::operator==(const Value& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::Int: return int_v == other.int_v;
    case Kind::Float: return float_v == other.float_v;
    case Kind::Bool: return bool_v == other.bool_v;
    case Kind::List: return items == other.items;
    case Kind::Tuple: return fields == other.fields;
    case Kind::Choice: return alt_index == other.alt_index && items == other.items;
  }
  return false;
}

// ---- generation ----

namespace {

[[noreturn]] void empty_range(const std::string& what) {
  throw Error(ErrorCode::ContradictoryRange, what);
}

struct IntRange {
  BigInt lo;
  BigInt hi;
};

// Applies the size window to a scalar integer range. Fully finite ranges
// are drawn whole; infinite sides are clipped to magnitude size*8, with
// one-sided ranges anchoring the window at their finite bound.
IntRange int_gen_range(const ScalarIR& s, uint32_t size) {
  BigInt window = static_cast<BigInt>(size) * 8;
  bool lo_finite = s.min.finite();
  bool hi_finite = s.max.finite();
  if (lo_finite && hi_finite) {
    if (s.min.int_value > s.max.int_value) empty_range("integer range is empty");
    return {s.min.int_value, s.max.int_value};
  }
  if (!lo_finite && !hi_finite) return {-window, window};
  if (lo_finite) return {s.min.int_value, s.min.int_value + 2 * window};
  return {s.max.int_value - 2 * window, s.max.int_value};
}

struct FloatRange {
  double lo;
  double hi;
};

FloatRange float_gen_range(const ScalarIR& s, uint32_t size) {
  double window = static_cast<double>(size) * 8.0;
  double lo = s.min.finite() ? s.min.float_value : -window;
  double hi = s.max.finite() ? s.max.float_value : window;
  if (lo > hi) {
    // The window missed the declared range; anchor it at the finite bound.
    if (s.min.finite()) { lo = s.min.float_value; hi = lo + 2 * window; }
    else { hi = s.max.float_value; lo = hi - 2 * window; }
  }
  int order = Bound::cmp_float(s.min, s.max);
  if (order > 0 || (order == 0 && (s.min_open || s.max_open)))
    empty_range("float range is empty");
  return {lo, hi};
}

BigInt gen_int(const ScalarIR& s, Rng& rng, uint32_t size) {
  IntRange r = int_gen_range(s, size);
  return rng.int_in(r.lo, r.hi);
}

double gen_float(const ScalarIR& s, Rng& rng, uint32_t size) {
  FloatRange r = float_gen_range(s, size);

  // A quarter of the draws go to boundary values; those expose faults that
  // uniform sampling rarely hits.
  std::vector<double> specials;
  auto excluded = [&](double v) {
    return (s.min_open && s.min.finite() && v == s.min.float_value) ||
           (s.max_open && s.max.finite() && v == s.max.float_value);
  };
  auto add_special = [&](double v) {
    if (v < r.lo || v > r.hi || excluded(v)) return;
    if (std::find(specials.begin(), specials.end(), v) == specials.end())
      specials.push_back(v);
  };
  add_special(0.0);
  if (s.min.finite()) add_special(s.min.float_value);
  if (s.max.finite()) add_special(s.max.float_value);

  if (!specials.empty() && rng.below(4) == 0)
    return specials[rng.below(specials.size())];

  for (int attempt = 0; attempt < 100; ++attempt) {
    double v = rng.real_in(r.lo, r.hi);
    if (!excluded(v)) return v;
  }
  empty_range("could not avoid an open float endpoint");
}

uint64_t gen_list_length(const ListIR& list, Rng& rng, uint32_t size) {
  if (list.max_len.finite() &&
      static_cast<BigInt>(list.min_len) > list.max_len.int_value)
    empty_range("list length range is empty");
  BigInt cap = static_cast<BigInt>(list.min_len) + size;
  if (list.max_len.finite() && list.max_len.int_value < cap) cap = list.max_len.int_value;
  auto span = static_cast<uint64_t>(cap - static_cast<BigInt>(list.min_len));
  return list.min_len + rng.below(span + 1);
}

const Hooks::Transform* hook_for(const Hooks* hooks, const std::string& name) {
  return hooks ? hooks->find(name) : nullptr;
}

Value gen_field(const NamedIR& n, Rng& rng, uint32_t size, const Hooks* hooks);

Value gen_ir(const TypeIR& ir, Rng& rng, uint32_t size, const Hooks* hooks,
             const std::string* item_hook) {
  if (const ScalarIR* s = ir.scalar()) {
    switch (s->kind) {
      case ScalarKind::Integer: return Value::of_int(gen_int(*s, rng, size));
      case ScalarKind::Float: return Value::of_float(gen_float(*s, rng, size));
      case ScalarKind::Boolean: return Value::of_bool(rng.coin());
    }
  }
  if (const EnumIR* e = ir.enumeration())
    return Value::text(e->values[rng.below(e->values.size())]);
  if (const ListIR* l = ir.list()) {
    uint64_t len = gen_list_length(*l, rng, size);
    std::vector<Value> items;
    items.reserve(len);
    const Hooks::Transform* item_transform =
        item_hook ? hook_for(hooks, *item_hook) : nullptr;
    for (uint64_t i = 0; i < len; ++i) {
      Value item = gen_ir(*l->inner, rng, size, hooks, nullptr);
      if (item_transform) item = (*item_transform)(std::move(item));
      items.push_back(std::move(item));
    }
    return Value::list(std::move(items));
  }
  if (const TupleIR* t = ir.tuple()) {
    std::vector<std::pair<std::string, Value>> fields;
    fields.reserve(t->fields.size());
    for (const NamedIR& field : t->fields)
      fields.emplace_back(field.local_name, gen_field(field, rng, size, hooks));
    return Value::tuple(std::move(fields));
  }
  const ChoiceIR* c = ir.choice();
  size_t index = rng.below(c->alternatives.size());
  return Value::choice(index, gen_field(c->alternatives[index], rng, size, hooks));
}

Value gen_field(const NamedIR& n, Rng& rng, uint32_t size, const Hooks* hooks) {
  std::optional<std::string> item_name = hooks ? list_item_name(n) : std::nullopt;
  Value v = gen_ir(*n.ir, rng, size, hooks, item_name ? &*item_name : nullptr);
  if (const auto* transform = hooks ? hooks->find(path_id(n)) : nullptr)
    v = (*transform)(std::move(v));
  return v;
}

}  // namespace

Value generate(const TypeIR& ir, const GenContext& ctx) {
  Rng rng(ctx.seed);
  return gen_ir(ir, rng, ctx.size, nullptr, nullptr);
}

Value generate_named(const NamedIR& root, const GenContext& ctx, const Hooks* hooks) {
  Rng rng(ctx.seed);
  return gen_field(root, rng, ctx.size, hooks);
}

namespace {

Value transform_field(const NamedIR& n, Value v, const Hooks& hooks);

Value transform_ir(const TypeIR& ir, Value v, const Hooks& hooks, const std::string* item_hook) {
  if (const ListIR* l = ir.list()) {
    const Hooks::Transform* item_transform = item_hook ? hooks.find(*item_hook) : nullptr;
    for (Value& item : v.items) {
      item = transform_ir(*l->inner, std::move(item), hooks, nullptr);
      if (item_transform) item = (*item_transform)(std::move(item));
    }
  } else if (const TupleIR* t = ir.tuple()) {
    for (size_t i = 0; i < t->fields.size() && i < v.fields.size(); ++i)
      v.fields[i].second = transform_field(t->fields[i], std::move(v.fields[i].second), hooks);
  } else if (const ChoiceIR* c = ir.choice()) {
    if (v.kind == Value::Kind::Choice && v.alt_index < c->alternatives.size() && !v.items.empty())
      v.items[0] = transform_field(c->alternatives[v.alt_index], std::move(v.items[0]), hooks);
  }
  return v;
}

Value transform_field(const NamedIR& n, Value v, const Hooks& hooks) {
  std::optional<std::string> item_name = list_item_name(n);
  v = transform_ir(*n.ir, std::move(v), hooks, item_name ? &*item_name : nullptr);
  if (const auto* transform = hooks.find(path_id(n))) v = (*transform)(std::move(v));
  return v;
}

}  // namespace

Value apply_transforms(const NamedIR& root, Value v, const Hooks& hooks) {
  return transform_field(root, std::move(v), hooks);
}

// ---- conformance ----

namespace {

bool int_in_bounds(const ScalarIR& s, BigInt v) {
  Bound b = Bound::of_int(v);
  return Bound::cmp_int(b, s.min) >= 0 && Bound::cmp_int(b, s.max) <= 0;
}

bool float_in_bounds(const ScalarIR& s, double v) {
  if (!std::isfinite(v)) return false;
  Bound b = Bound::of_float(v);
  int lo = Bound::cmp_float(b, s.min);
  int hi = Bound::cmp_float(b, s.max);
  if (lo < 0 || hi > 0) return false;
  if (lo == 0 && s.min_open && s.min.finite()) return false;
  if (hi == 0 && s.max_open && s.max.finite()) return false;
  return true;
}

bool valid_code_point_list(const Value& v) {
  if (v.kind != Value::Kind::List) return false;
  for (const Value& item : v.items)
    if (item.kind != Value::Kind::Int || item.int_v < 0 || item.int_v > 0x10FFFF)
      return false;
  return true;
}

}  // namespace

bool conforms(const TypeIR& ir, const Value& v) {
  if (const ScalarIR* s = ir.scalar()) {
    switch (s->kind) {
      case ScalarKind::Integer:
        return v.kind == Value::Kind::Int && int_in_bounds(*s, v.int_v);
      case ScalarKind::Float:
        return v.kind == Value::Kind::Float && float_in_bounds(*s, v.float_v);
      case ScalarKind::Boolean:
        return v.kind == Value::Kind::Bool;
    }
  }
  if (const EnumIR* e = ir.enumeration()) {
    if (!valid_code_point_list(v)) return false;
    std::string text = v.to_text();
    return std::find(e->values.begin(), e->values.end(), text) != e->values.end();
  }
  if (const ListIR* l = ir.list()) {
    if (v.kind != Value::Kind::List) return false;
    auto len = static_cast<BigInt>(v.items.size());
    if (len < static_cast<BigInt>(l->min_len)) return false;
    if (l->max_len.finite() && len > l->max_len.int_value) return false;
    for (const Value& item : v.items)
      if (!conforms(*l->inner, item)) return false;
    return true;
  }
  if (const TupleIR* t = ir.tuple()) {
    if (v.kind != Value::Kind::Tuple || v.fields.size() != t->fields.size()) return false;
    for (size_t i = 0; i < t->fields.size(); ++i) {
      if (v.fields[i].first != t->fields[i].local_name) return false;
      if (!conforms(*t->fields[i].ir, v.fields[i].second)) return false;
    }
    return true;
  }
  const ChoiceIR* c = ir.choice();
  return v.kind == Value::Kind::Choice && v.alt_index < c->alternatives.size() &&
         v.items.size() == 1 && conforms(*c->alternatives[v.alt_index].ir, v.items[0]);
}

// ---- shrinking ----

namespace {

// In-range point nearest zero: the attractor every scalar shrinks toward.
BigInt int_target(const ScalarIR& s) {
  if (s.min.finite() && s.min.int_value > 0) return s.min.int_value;
  if (s.max.finite() && s.max.int_value < 0) return s.max.int_value;
  return 0;
}

double float_target(const ScalarIR& s) {
  double t = 0.0;
  if (s.min.finite() && s.min.float_value > 0.0) t = s.min.float_value;
  else if (s.max.finite() && s.max.float_value < 0.0) t = s.max.float_value;
  if (s.min_open && s.min.finite() && t == s.min.float_value)
    t = std::nextafter(t, std::numeric_limits<double>::infinity());
  if (s.max_open && s.max.finite() && t == s.max.float_value)
    t = std::nextafter(t, -std::numeric_limits<double>::infinity());
  return t;
}

void shrink_int(const ScalarIR& s, BigInt v, std::vector<Value>& out) {
  BigInt t = int_target(s);
  if (v == t) return;
  BigInt d = v - t;
  for (BigInt step = d; step != 0; step /= 2) {
    BigInt candidate = v - step;
    if (candidate == v) break;
    out.push_back(Value::of_int(candidate));
  }
}

void shrink_float(const ScalarIR& s, double v, std::vector<Value>& out) {
  double t = float_target(s);
  if (v == t) return;
  auto push_unique = [&](double c) {
    if (c == v) return;
    if (!float_in_bounds(s, c)) return;
    for (const Value& existing : out)
      if (existing.float_v == c) return;
    if (std::abs(c - t) < std::abs(v - t)) out.push_back(Value::of_float(c));
  };
  push_unique(t);
  double truncated = v < t ? std::ceil(v) : std::floor(v);
  push_unique(truncated);
  double d = v - t;
  for (int i = 1; i <= 64; ++i) {
    d /= 2;
    double candidate = v - d;
    if (candidate == v || d == 0.0) break;
    push_unique(candidate);
  }
}

void shrink_enum(const EnumIR& e, const Value& v, std::vector<Value>& out) {
  std::string text = v.to_text();
  auto it = std::find(e.values.begin(), e.values.end(), text);
  if (it == e.values.end()) return;
  for (auto earlier = e.values.begin(); earlier != it; ++earlier)
    out.push_back(Value::text(*earlier));
}

void shrink_list(const ListIR& l, const Value& v, std::vector<Value>& out) {
  uint64_t len = v.items.size();
  uint64_t min_len = l.min_len;

  if (len > min_len) {
    // Length reductions first, halving the number of dropped elements:
    // keep-first-min, then progressively longer prefixes.
    uint64_t removable = len - min_len;
    std::vector<uint64_t> keeps;
    for (uint64_t drop = removable; drop > 0; drop /= 2) {
      uint64_t keep = len - drop;
      if (keeps.empty() || keeps.back() != keep) keeps.push_back(keep);
    }
    for (uint64_t keep : keeps)
      out.push_back(Value::list({v.items.begin(), v.items.begin() + static_cast<long>(keep)}));

    // Single-element removals at every position (the last position is
    // already covered by the shortest prefix drop above).
    for (size_t skip = 0; skip + 1 < len; ++skip) {
      std::vector<Value> items;
      items.reserve(len - 1);
      for (size_t i = 0; i < len; ++i)
        if (i != skip) items.push_back(v.items[i]);
      out.push_back(Value::list(std::move(items)));
    }
  }

  for (size_t i = 0; i < len; ++i) {
    for (Value& candidate : shrink_candidates(*l.inner, v.items[i])) {
      Value shrunk = v;
      shrunk.items[i] = std::move(candidate);
      out.push_back(std::move(shrunk));
    }
  }
}

void shrink_tuple(const TupleIR& t, const Value& v, std::vector<Value>& out) {
  for (size_t i = 0; i < t.fields.size(); ++i) {
    for (Value& candidate : shrink_candidates(*t.fields[i].ir, v.fields[i].second)) {
      Value shrunk = v;
      shrunk.fields[i].second = std::move(candidate);
      out.push_back(std::move(shrunk));
    }
  }
}

void shrink_choice(const ChoiceIR& c, const Value& v, std::vector<Value>& out) {
  for (size_t j = 0; j < v.alt_index; ++j) {
    try {
      out.push_back(Value::choice(j, minimal_value(*c.alternatives[j].ir)));
    } catch (const Error&) {
      // alternative with an empty value set; nothing to offer
    }
  }
  for (Value& candidate : shrink_candidates(*c.alternatives[v.alt_index].ir, v.items[0]))
    out.push_back(Value::choice(v.alt_index, std::move(candidate)));
}

}  // namespace

std::vector<Value> shrink_candidates(const TypeIR& ir, const Value& v) {
  std::vector<Value> out;
  if (const ScalarIR* s = ir.scalar()) {
    if (s->kind == ScalarKind::Integer) shrink_int(*s, v.int_v, out);
    else if (s->kind == ScalarKind::Float) shrink_float(*s, v.float_v, out);
    else if (v.bool_v) out.push_back(Value::of_bool(false));
  } else if (const EnumIR* e = ir.enumeration()) {
    shrink_enum(*e, v, out);
  } else if (const ListIR* l = ir.list()) {
    shrink_list(*l, v, out);
  } else if (const TupleIR* t = ir.tuple()) {
    shrink_tuple(*t, v, out);
  } else if (const ChoiceIR* c = ir.choice()) {
    shrink_choice(*c, v, out);
  }
  return out;
}

bool size_less(const TypeIR& ir, const Value& a, const Value& b) {
  if (const ScalarIR* s = ir.scalar()) {
    if (s->kind == ScalarKind::Integer) {
      BigInt t = int_target(*s);
      BigInt da = a.int_v > t ? a.int_v - t : t - a.int_v;
      BigInt db = b.int_v > t ? b.int_v - t : t - b.int_v;
      return da < db;
    }
    if (s->kind == ScalarKind::Float) {
      double t = float_target(*s);
      return std::abs(a.float_v - t) < std::abs(b.float_v - t);
    }
    return !a.bool_v && b.bool_v;
  }
  if (const EnumIR* e = ir.enumeration()) {
    auto index_of = [&](const Value& v) {
      return std::find(e->values.begin(), e->values.end(), v.to_text()) - e->values.begin();
    };
    return index_of(a) < index_of(b);
  }
  if (const ListIR* l = ir.list()) {
    if (a.items.size() != b.items.size()) return a.items.size() < b.items.size();
    for (size_t i = 0; i < a.items.size(); ++i) {
      if (a.items[i] == b.items[i]) continue;
      return size_less(*l->inner, a.items[i], b.items[i]);
    }
    return false;
  }
  if (const TupleIR* t = ir.tuple()) {
    for (size_t i = 0; i < t->fields.size(); ++i) {
      if (a.fields[i].second == b.fields[i].second) continue;
      return size_less(*t->fields[i].ir, a.fields[i].second, b.fields[i].second);
    }
    return false;
  }
  const ChoiceIR* c = ir.choice();
  if (a.alt_index != b.alt_index) return a.alt_index < b.alt_index;
  return size_less(*c->alternatives[a.alt_index].ir, a.items[0], b.items[0]);
}

Value minimal_value(const TypeIR& ir) {
  if (const ScalarIR* s = ir.scalar()) {
    switch (s->kind) {
      case ScalarKind::Integer: {
        if (s->min.finite() && s->max.finite() && s->min.int_value > s->max.int_value)
          empty_range("integer range is empty");
        return Value::of_int(int_target(*s));
      }
      case ScalarKind::Float: {
        double t = float_target(*s);
        if (!float_in_bounds(*s, t)) empty_range("float range is empty");
        return Value::of_float(t);
      }
      case ScalarKind::Boolean:
        return Value::of_bool(false);
    }
  }
  if (const EnumIR* e = ir.enumeration()) return Value::text(e->values.front());
  if (const ListIR* l = ir.list()) {
    std::vector<Value> items;
    items.reserve(l->min_len);
    for (uint64_t i = 0; i < l->min_len; ++i) items.push_back(minimal_value(*l->inner));
    return Value::list(std::move(items));
  }
  if (const TupleIR* t = ir.tuple()) {
    std::vector<std::pair<std::string, Value>> fields;
    for (const NamedIR& field : t->fields)
      fields.emplace_back(field.local_name, minimal_value(*field.ir));
    return Value::tuple(std::move(fields));
  }
  const ChoiceIR* c = ir.choice();
  return Value::choice(0, minimal_value(*c->alternatives[0].ir));
}

// ---- rendering ----

namespace {

std::string quote_text(const std::string& text) {
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

std::string float_repr(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

}  // namespace

std::string render_value(const TypeIR* ir, const Value& v) {
  switch (v.kind) {
    case Value::Kind::Int:
      return to_string(v.int_v);
    case Value::Kind::Float:
      return float_repr(v.float_v);
    case Value::Kind::Bool:
      return v.bool_v ? "true" : "false";
    case Value::Kind::List: {
      bool as_text = ir && ((ir->list() && ir->list()->text) || ir->enumeration());
      if (as_text && valid_code_point_list(v)) return quote_text(v.to_text());
      const TypeIR* inner = ir && ir->list() ? ir->list()->inner.get() : nullptr;
      std::string out = "[";
      for (size_t i = 0; i < v.items.size(); ++i) {
        if (i) out += ", ";
        out += render_value(inner, v.items[i]);
      }
      return out + "]";
    }
    case Value::Kind::Tuple: {
      const TupleIR* t = ir ? ir->tuple() : nullptr;
      std::string out = "{";
      for (size_t i = 0; i < v.fields.size(); ++i) {
        if (i) out += ", ";
        const TypeIR* field_ir =
            t && i < t->fields.size() ? t->fields[i].ir.get() : nullptr;
        out += v.fields[i].first + " = " + render_value(field_ir, v.fields[i].second);
      }
      return out + "}";
    }
    case Value::Kind::Choice: {
      const ChoiceIR* c = ir ? ir->choice() : nullptr;
      const NamedIR* alt =
          c && v.alt_index < c->alternatives.size() ? &c->alternatives[v.alt_index] : nullptr;
      std::string name = alt ? alt->local_name : "alt" + std::to_string(v.alt_index);
      return name + ": " + render_value(alt ? alt->ir.get() : nullptr, v.items[0]);
    }
  }
  return "?";
}

}  // namespace soapcheck
