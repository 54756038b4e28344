// Copyright 2026 The qalg developers
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

#include "qalg/core.hpp"
#include "qalg/deutsch.hpp"
#include "qalg/gates.hpp"
#include "qalg/grover.hpp"
#include "qalg/mach_zehnder.hpp"
#include "qalg/number_theory.hpp"
#include "qalg/phase_estimation.hpp"
#include "qalg/qft.hpp"
#include "qalg/register.hpp"
#include "qalg/shor.hpp"
#include "qalg/simon.hpp"
