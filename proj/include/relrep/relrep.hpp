// Copyright 2026 the relrep authors
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

#ifndef RELREP_RELREP_HPP_
#define RELREP_RELREP_HPP_

#include "algebra.hpp"
#include "concrete.hpp"
#include "error.hpp"
#include "io.hpp"
#include "partial_group.hpp"
#include "relation.hpp"
#include "representation.hpp"
#include "repsearch.hpp"
#include "signature.hpp"

#endif  // RELREP_RELREP_HPP_
