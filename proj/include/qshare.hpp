// Copyright 2026 The qshare Authors
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

#include "qshare/adversary.hpp"
#include "qshare/attacks.hpp"
#include "qshare/bell.hpp"
#include "qshare/canon.hpp"
#include "qshare/decomposition_check.hpp"
#include "qshare/harness.hpp"
#include "qshare/qss.hpp"
#include "qshare/rng.hpp"
#include "qshare/sdc.hpp"
#include "qshare/state.hpp"
#include "qshare/stats.hpp"
#include "qshare/types.hpp"
