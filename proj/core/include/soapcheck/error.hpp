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

#include <stdexcept>
#include <string>

namespace soapcheck {

/// Every failure the library can report. Callers that need to branch on a
/// failure kind should switch on the code rather than parse messages.
enum class ErrorCode {
  MalformedXml,
  UnsupportedWsdl,
  UnresolvedReference,
  ImportCycle,
  UnsupportedBuiltin,
  ContradictoryFacets,
  UnsupportedFacet,
  SyntaxError,
  UnknownName,
  CycleError,
  ShapeMismatch,
  ContradictoryRange,
  Timeout,
  ConnectionFailed,
  HttpError,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  Error(ErrorCode code, const std::string& message, int http_status)
      : Error(code, message) {
    http_status_ = http_status;
  }

  ErrorCode code() const noexcept { return code_; }

  /// Meaningful only for HttpError.
  int http_status() const noexcept { return http_status_; }

 private:
  ErrorCode code_;
  int http_status_ = 0;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedXml: return "MalformedXml";
    case ErrorCode::UnsupportedWsdl: return "UnsupportedWsdl";
    case ErrorCode::UnresolvedReference: return "UnresolvedReference";
    case ErrorCode::ImportCycle: return "ImportCycle";
    case ErrorCode::UnsupportedBuiltin: return "UnsupportedBuiltin";
    case ErrorCode::ContradictoryFacets: return "ContradictoryFacets";
    case ErrorCode::UnsupportedFacet: return "UnsupportedFacet";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::CycleError: return "CycleError";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ContradictoryRange: return "ContradictoryRange";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::ConnectionFailed: return "ConnectionFailed";
    case ErrorCode::HttpError: return "HttpError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace soapcheck
