// Copyright 2026 The qspacer Authors
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

#pragma once

#include "qspacer/analysis.hpp"
#include "qspacer/benchmarks.hpp"
#include "qspacer/circuit.hpp"
#include "qspacer/encoder.hpp"
#include "qspacer/errors.hpp"
#include "qspacer/interaction.hpp"
#include "qspacer/simulator.hpp"
#include "qspacer/state_vector.hpp"
