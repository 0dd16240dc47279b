// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPLITMAT_ERRORS_H_
#define SPLITMAT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace splitmat {

// Coarse error classes. The CLI maps them to exit codes 2, 3 and 4.
enum class ErrorClass {
  kValidation,
  kGuard,
  kCertificate,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorClass error_class, const std::string& what)
      : std::runtime_error(what), error_class_(error_class) {}

  ErrorClass error_class() const { return error_class_; }

 private:
  ErrorClass error_class_;
};

#define SPLITMAT_DEFINE_ERROR(Name, Class)                         \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what)                         \
        : Error(ErrorClass::Class, std::string(#Name ": ") + what) {} \
  }

SPLITMAT_DEFINE_ERROR(InvalidParams, kValidation);
SPLITMAT_DEFINE_ERROR(EmptyBases, kValidation);
SPLITMAT_DEFINE_ERROR(CardinalityMismatch, kValidation);
SPLITMAT_DEFINE_ERROR(ExchangeViolation, kValidation);
SPLITMAT_DEFINE_ERROR(RankDeficient, kValidation);
SPLITMAT_DEFINE_ERROR(NotConnected, kValidation);
SPLITMAT_DEFINE_ERROR(NotASplitFlacet, kValidation);
SPLITMAT_DEFINE_ERROR(NotSplit, kValidation);
SPLITMAT_DEFINE_ERROR(NotSparsePaving, kValidation);
SPLITMAT_DEFINE_ERROR(NotStable, kValidation);
SPLITMAT_DEFINE_ERROR(NotAMatroid, kValidation);
SPLITMAT_DEFINE_ERROR(FormatError, kValidation);
SPLITMAT_DEFINE_ERROR(MixedParameters, kValidation);
SPLITMAT_DEFINE_ERROR(DegenerateParameters, kValidation);
SPLITMAT_DEFINE_ERROR(LimitExceeded, kGuard);
SPLITMAT_DEFINE_ERROR(CertificateFailure, kCertificate);

#undef SPLITMAT_DEFINE_ERROR

}  // namespace splitmat

#endif  // SPLITMAT_ERRORS_H_
