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

#ifndef CVML_CVML_HPP
#define CVML_CVML_HPP

#include "cvml/channel.hpp"
#include "cvml/distillation.hpp"
#include "cvml/errors.hpp"
#include "cvml/gaussian.hpp"
#include "cvml/satellite.hpp"
#include "cvml/solvers.hpp"
#include "cvml/special.hpp"
#include "cvml/swapping.hpp"
#include "cvml/teleportation.hpp"

#endif
