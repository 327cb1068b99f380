// Copyright 2026 The padiccf Authors
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

#include "padiccf/convergents.hpp"
#include "padiccf/errors.hpp"
#include "padiccf/expansion.hpp"
#include "padiccf/experiments.hpp"
#include "padiccf/integer.hpp"
#include "padiccf/padic.hpp"
#include "padiccf/prime.hpp"
#include "padiccf/quadratic.hpp"
#include "padiccf/version.hpp"
