// Copyright 2026 The ttr Authors
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

#include "ttr/delta2.hpp"
#include "ttr/duration.hpp"
#include "ttr/error.hpp"
#include "ttr/fpt.hpp"
#include "ttr/instance.hpp"
#include "ttr/io.hpp"
#include "ttr/milp.hpp"
#include "ttr/oracle.hpp"
#include "ttr/preprocess.hpp"
#include "ttr/rational.hpp"
#include "ttr/reductions/coloring.hpp"
#include "ttr/reductions/nae.hpp"
#include "ttr/simplex.hpp"
#include "ttr/solve.hpp"
#include "ttr/tree.hpp"
#include "ttr/twosat.hpp"
#include "ttr/unimodular.hpp"
