// Copyright 2026 The Quatinv Authors
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

#ifndef QUATINV_QUATINV_HPP_
#define QUATINV_QUATINV_HPP_

#include "quatinv/involution.hpp"
#include "quatinv/laws.hpp"
#include "quatinv/projection.hpp"
#include "quatinv/quaternion.hpp"
#include "quatinv/record_io.hpp"
#include "quatinv/sampling.hpp"
#include "quatinv/tolerances.hpp"
#include "quatinv/vector3.hpp"

#endif  // QUATINV_QUATINV_HPP_
