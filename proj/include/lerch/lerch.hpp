//Copyright (c) 2026, The lerch authors
//
//Licensed under the Apache License, Version 2.0 (the "License");
//you may not use this file except in compliance with the License.
//You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
//Unless required by applicable law or agreed to in writing, software
//distributed under the License is distributed on an "AS IS" BASIS,
//WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//See the License for the specific language governing permissions and
//limitations under the License.

// Umbrella header.

#ifndef LERCH_LERCH_HPP
#define LERCH_LERCH_HPP

#include <lerch/boundary.hpp>
#include <lerch/core.hpp>
#include <lerch/hermite.hpp>
#include <lerch/sampling.hpp>
#include <lerch/zeta_integral.hpp>

#endif
