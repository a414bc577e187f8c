// Copyright 2026 The masersim developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <stdexcept>

#include "masersim/nonlinearity.hpp"

using masersim::algebra::NonlinearityFn;

TEST_CASE("named families evaluate as advertised") {
    CHECK(NonlinearityFn::identity()(5) == 1.0);
    CHECK(NonlinearityFn::inverse_sqrt()(4) == 0.5);
    CHECK(NonlinearityFn::power(1.0)(3) == 3.0);
    CHECK(NonlinearityFn::power(-1.0)(4) == 0.25);
    CHECK(NonlinearityFn::power(2.0)(3) == 9.0);
}

TEST_CASE("f(0) = 1 for every family, including the singular ones") {
    CHECK(NonlinearityFn::identity()(0) == 1.0);
    CHECK(NonlinearityFn::inverse_sqrt()(0) == 1.0);
    CHECK(NonlinearityFn::power(-2.0)(0) == 1.0);
}

TEST_CASE("evaluation is deterministic") {
    const auto f = NonlinearityFn::power(-0.5);
    for (int n = 0; n < 20; ++n) {
        CHECK(f(n) == f(n));
    }
}

TEST_CASE("tables reject zeros and out-of-range evaluation") {
    CHECK_THROWS_AS(NonlinearityFn::table({1.0, 0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(NonlinearityFn::table({}), std::invalid_argument);

    const auto f = NonlinearityFn::table({1.0, 2.0, -0.5});
    CHECK(f(2) == -0.5);
    CHECK_THROWS_AS(f(3), std::out_of_range);
    CHECK_FALSE(f.has_asymptotics());
}

TEST_CASE("config-string parsing round trips") {
    CHECK(NonlinearityFn::parse("identity").is_identity());
    CHECK(NonlinearityFn::parse("inverse_sqrt")(9) == doctest::Approx(1.0 / 3.0));
    CHECK(NonlinearityFn::parse("power:-1")(2) == 0.5);
    CHECK(NonlinearityFn::parse("table:1,2,3")(1) == 2.0);

    for (const char* spec : {"identity", "inverse_sqrt", "power:0.5", "table:1,2,3"}) {
        const auto f = NonlinearityFn::parse(spec);
        CHECK(NonlinearityFn::parse(f.name()).name() == f.name());
    }

    CHECK_THROWS_AS(NonlinearityFn::parse("power:x"), std::invalid_argument);
    CHECK_THROWS_AS(NonlinearityFn::parse("table:1,zero"), std::invalid_argument);
    CHECK_THROWS_AS(NonlinearityFn::parse("frobnicate"), std::invalid_argument);
    CHECK_THROWS_AS(NonlinearityFn::parse("table:1,0,1"), std::invalid_argument);
}

TEST_CASE("real-argument extension agrees on integers") {
    for (const auto& f : {NonlinearityFn::identity(), NonlinearityFn::inverse_sqrt(),
                          NonlinearityFn::power(1.5)}) {
        for (int n = 0; n < 8; ++n) {
            CHECK(f.eval_real(n) == doctest::Approx(f(n)).epsilon(1e-15));
        }
    }
    CHECK(NonlinearityFn::power(1.0).eval_real(1.25) == doctest::Approx(1.25));
}
