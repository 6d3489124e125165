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
#include <optional>
#include <string>
#include <string_view>

namespace soapcheck {

// XSD integer bounds reach from -2^63 (long) to 2^64-1 (unsignedLong), which
// no single built-in 64-bit type covers exactly. All schema-facing integer
// arithmetic therefore runs on 128 bits.
using BigInt = __int128;
using UBigInt = unsigned __int128;

inline std::string to_string(BigInt v) {
  if (v == 0) return "0";
  bool negative = v < 0;
  UBigInt mag = negative ? UBigInt{0} - static_cast<UBigInt>(v) : static_cast<UBigInt>(v);
  char buf[48];
  char* p = buf + sizeof(buf);
  while (mag != 0) {
    *--p = static_cast<char>('0' + static_cast<unsigned>(mag % 10));
    mag /= 10;
  }
  if (negative) *--p = '-';
  return std::string(p, buf + sizeof(buf));
}

/// Parses an optionally signed decimal literal. Returns nullopt on empty
/// input, stray characters, or overflow of the 128-bit range.
inline std::optional<BigInt> parse_bigint(std::string_view text) {
  size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i >= text.size()) return std::nullopt;
  UBigInt mag = 0;
  constexpr UBigInt kMax = ~UBigInt{0};
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') return std::nullopt;
    unsigned digit = static_cast<unsigned>(c - '0');
    if (mag > (kMax - digit) / 10) return std::nullopt;
    mag = mag * 10 + digit;
  }
  constexpr UBigInt kSignedMax = (UBigInt{1} << 127) - 1;
  if (negative) {
    if (mag > kSignedMax + 1) return std::nullopt;
    if (mag == kSignedMax + 1) return -static_cast<BigInt>(kSignedMax) - 1;
    return -static_cast<BigInt>(mag);
  }
  if (mag > kSignedMax) return std::nullopt;
  return static_cast<BigInt>(mag);
}

}  // namespace soapcheck
