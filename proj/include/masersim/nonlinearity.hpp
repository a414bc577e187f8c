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

#pragma once

#include <string>
#include <vector>

namespace masersim::algebra {

/**
 * Nonlinearity function f(n) on non-negative integers.
 *
 * Deforms the ladder operators of the cavity mode: the intensity-dependent
 * lowering operator is a*f(N). f must be real and nonzero at every integer
 * in range, including n = 0. Families that are singular at 0 (inverse_sqrt,
 * power with negative exponent) use the convention f(0) = 1; the value never
 * multiplies a physical amplitude but keeps every table total.
 */
class NonlinearityFn {
  public:
    enum class Family { Identity, InverseSqrt, Power, Table };

    static NonlinearityFn identity();
    static NonlinearityFn inverse_sqrt();
    static NonlinearityFn power(double exponent);
    /// Explicit value table for n = 0..values.size()-1. Rejects zero entries.
    static NonlinearityFn table(std::vector<double> values);

    /// Parses the config-string forms "identity", "inverse_sqrt",
    /// "power:<p>" and "table:<v0,v1,...>".
    static NonlinearityFn parse(const std::string& spec);

    /// f(n). Throws std::out_of_range for a table evaluated past its end.
    double operator()(int n) const;

    /// Continuous extension f(x) for real x >= 0, used by regime checks that
    /// evaluate the deformation at a fractional mean photon number. Tables
    /// fall back to the nearest tabulated integer.
    double eval_real(double x) const;

    Family family() const { return family_; }
    bool is_identity() const { return family_ == Family::Identity; }
    /// True when f can be evaluated at arbitrarily large n (named families).
    bool has_asymptotics() const { return family_ != Family::Table; }

    /// Config-string form that parse() accepts back.
    std::string name() const;

  private:
    NonlinearityFn(Family family, double exponent, std::vector<double> values)
        : family_(family), exponent_(exponent), values_(std::move(values)) {}

    Family family_;
    double exponent_ = 0.0;
    std::vector<double> values_;
};

} // namespace masersim::algebra
