// Copyright 2026 The sido Authors
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

#include "sido/associated.hpp"
#include "sido/bounds.hpp"
#include "sido/distribution.hpp"
#include "sido/errors.hpp"
#include "sido/graph.hpp"
#include "sido/graph_catalog.hpp"
#include "sido/homomorphism.hpp"
#include "sido/isomorphism.hpp"
#include "sido/json_io.hpp"
#include "sido/markov_glue.hpp"
#include "sido/markov_tree.hpp"
#include "sido/random_instances.hpp"
#include "sido/strong_decomposition.hpp"
#include "sido/tree_decomposition.hpp"
#include "sido/validation.hpp"
