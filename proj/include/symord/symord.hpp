// Copyright 2026 The symord Authors
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

/// \file symord/symord.hpp
///
/// Everything in one include.

#pragma once

#include "symord/capacity.hpp"
#include "symord/choquet.hpp"
#include "symord/mobius.hpp"
#include "symord/player_set.hpp"
#include "symord/problem.hpp"
#include "symord/rational.hpp"
#include "symord/rules.hpp"
#include "symord/scale.hpp"
#include "symord/sugeno.hpp"
#include "symord/text_format.hpp"
