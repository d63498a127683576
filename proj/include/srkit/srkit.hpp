/*
   Copyright 2026 The srkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SRKIT_SRKIT_HPP
#define SRKIT_SRKIT_HPP

#include "scalar.hpp"
#include "error.hpp"
#include "quaternion.hpp"
#include "realpoly.hpp"
#include "qpoly.hpp"
#include "starpoly.hpp"
#include "semiregular.hpp"
#include "matrep.hpp"
#include "zeros.hpp"
#include "jets.hpp"
#include "cousin.hpp"

#endif  // SRKIT_SRKIT_HPP
