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

#ifndef CVML_APP_COMMANDS_HPP
#define CVML_APP_COMMANDS_HPP

#include <ostream>

namespace cvml::app {

enum ExitCode { kOk = 0, kAcceptanceFailure = 1, kConfigError = 2, kIoError = 3 };

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace cvml::app

#endif
