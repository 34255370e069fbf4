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


// Prints one PASS/FAIL line per acceptance criterion.
// Default: documented deviations do not fail the run. --strict: any FAIL exits 1.

#include <cstring>
#include <iostream>

#include "acceptance.hpp"

int main(int argc, char **argv) {
    bool strict = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--strict") == 0) {
            strict = true;
        } else {
            std::cerr << "usage: cvml_acceptance [--strict]\n";
            return 2;
        }
    }
    const cvml::app::ScenarioConfig cfg;
    const auto results = cvml::app::run_acceptance(cfg);
    const int unexpected = cvml::app::print_acceptance(std::cout, results, cfg);
    if (strict)
        return cvml::app::any_failure(results) ? 1 : 0;
    return unexpected ? 1 : 0;
}
