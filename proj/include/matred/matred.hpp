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

// Umbrella header. JSON support lives in matred/io.hpp and additionally
// needs the vendored json.hpp on the include path.

#ifndef MATRED_MATRED_HPP_
#define MATRED_MATRED_HPP_

#include "matred/algorithms.hpp"
#include "matred/element_set.hpp"
#include "matred/error.hpp"
#include "matred/gammoid_reducer.hpp"
#include "matred/graph.hpp"
#include "matred/matroid.hpp"
#include "matred/reducers.hpp"
#include "matred/verifier.hpp"
#include "matred/zoo.hpp"

#endif  // MATRED_MATRED_HPP_
