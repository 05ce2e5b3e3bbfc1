// Copyright 2026 The spgraph Authors
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

// Umbrella header for the whole library.

#ifndef SPGRAPH_SPGRAPH_HPP
#define SPGRAPH_SPGRAPH_HPP

#include "spgraph/bench.hpp"
#include "spgraph/error.hpp"
#include "spgraph/generator.hpp"
#include "spgraph/graph.hpp"
#include "spgraph/ingest.hpp"
#include "spgraph/ktruss.hpp"
#include "spgraph/reference_data.hpp"
#include "spgraph/sparse.hpp"
#include "spgraph/triangles.hpp"

#endif  // SPGRAPH_SPGRAPH_HPP
