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

#ifndef SRKIT_TESTS_SUPPORT_HPP
#define SRKIT_TESTS_SUPPORT_HPP

#include <gtest/gtest.h>

#include "generators.hpp"

namespace srkit::testing {

template <typename F>
void expect_error(ErrorCode code, F&& body) {
    try {
        body();
        ADD_FAILURE() << "expected " << error_name(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

}  // namespace srkit::testing

#endif  // SRKIT_TESTS_SUPPORT_HPP
