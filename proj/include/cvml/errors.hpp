// Copyright 2026 The cvml Authors
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

#ifndef CVML_ERRORS_HPP
#define CVML_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cvml {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define CVML_DEFINE_ERROR(Name)          \
    class Name : public Error {          \
      public:                            \
        using Error::Error;              \
    };

CVML_DEFINE_ERROR(NonPhysicalState)
CVML_DEFINE_ERROR(DomainError)
CVML_DEFINE_ERROR(ConvergenceError)
CVML_DEFINE_ERROR(Unreachable)
CVML_DEFINE_ERROR(InvalidResource)
CVML_DEFINE_ERROR(SingularWorkspace)
CVML_DEFINE_ERROR(SingularMeasurement)
CVML_DEFINE_ERROR(NeverQuantum)

#undef CVML_DEFINE_ERROR

}  // namespace cvml

#endif
