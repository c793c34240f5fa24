// Copyright 2026 The Authors.
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

#include "tangles/cluster.hpp"
#include "tangles/duality.hpp"
#include "tangles/element_set.hpp"
#include "tangles/family.hpp"
#include "tangles/gf2.hpp"
#include "tangles/graph.hpp"
#include "tangles/graph_decompositions.hpp"
#include "tangles/graph_families.hpp"
#include "tangles/graph_width.hpp"
#include "tangles/matroid.hpp"
#include "tangles/orientation_search.hpp"
#include "tangles/separation.hpp"
#include "tangles/separation_system.hpp"
#include "tangles/setsep.hpp"
#include "tangles/stree.hpp"
#include "tangles/universe.hpp"
