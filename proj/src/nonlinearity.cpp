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

#include "masersim/nonlinearity.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace masersim::algebra {

NonlinearityFn NonlinearityFn::identity() {
    return NonlinearityFn(Family::Identity, 0.0, {});
}

NonlinearityFn NonlinearityFn::inverse_sqrt() {
    return NonlinearityFn(Family::InverseSqrt, 0.0, {});
}

NonlinearityFn NonlinearityFn::power(double exponent) {
    if (!std::isfinite(exponent)) {
        throw std::invalid_argument("power nonlinearity: exponent must be finite");
    }
    return NonlinearityFn(Family::Power, exponent, {});
}

NonlinearityFn NonlinearityFn::table(std::vector<double> values) {
    if (values.empty()) {
        throw std::invalid_argument("table nonlinearity: empty table");
    }
    for (std::size_t n = 0; n < values.size(); ++n) {
        if (!std::isfinite(values[n]) || values[n] == 0.0) {
            throw std::invalid_argument("table nonlinearity: entry " + std::to_string(n) +
                                        " must be finite and nonzero");
        }
    }
    return NonlinearityFn(Family::Table, 0.0, std::move(values));
}

NonlinearityFn NonlinearityFn::parse(const std::string& spec) {
    if (spec == "identity") return identity();
    if (spec == "inverse_sqrt") return inverse_sqrt();
    if (spec.rfind("power:", 0) == 0) {
        std::size_t pos = 0;
        const std::string arg = spec.substr(6);
        double p = 0.0;
        try {
            p = std::stod(arg, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse nonlinearity exponent in '" + spec + "'");
        }
        if (pos != arg.size()) {
            throw std::invalid_argument("trailing junk in nonlinearity spec '" + spec + "'");
        }
        return power(p);
    }
    if (spec.rfind("table:", 0) == 0) {
        std::vector<double> values;
        std::stringstream ss(spec.substr(6));
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t pos = 0;
            double v = 0.0;
            try {
                v = std::stod(item, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("cannot parse table entry '" + item + "'");
            }
            if (pos != item.size()) {
                throw std::invalid_argument("trailing junk in table entry '" + item + "'");
            }
            values.push_back(v);
        }
        return table(std::move(values));
    }
    throw std::invalid_argument("unknown nonlinearity '" + spec + "'");
}

double NonlinearityFn::operator()(int n) const {
    if (n < 0) {
        throw std::invalid_argument("nonlinearity evaluated at negative n");
    }
    switch (family_) {
        case Family::Identity:
            return 1.0;
        case Family::InverseSqrt:
            return n == 0 ? 1.0 : 1.0 / std::sqrt(static_cast<double>(n));
        case Family::Power:
            return n == 0 ? 1.0 : std::pow(static_cast<double>(n), exponent_);
        case Family::Table:
            if (static_cast<std::size_t>(n) >= values_.size()) {
                throw std::out_of_range("nonlinearity table has " + std::to_string(values_.size()) +
                                        " entries, asked for n=" + std::to_string(n));
            }
            return values_[static_cast<std::size_t>(n)];
    }
    throw std::logic_error("unreachable nonlinearity family");
}

double NonlinearityFn::eval_real(double x) const {
    if (!(x >= 0.0)) {
        throw std::invalid_argument("nonlinearity evaluated at negative real x");
    }
    switch (family_) {
        case Family::Identity:
            return 1.0;
        case Family::InverseSqrt:
            return x == 0.0 ? 1.0 : 1.0 / std::sqrt(x);
        case Family::Power:
            return x == 0.0 ? 1.0 : std::pow(x, exponent_);
        case Family::Table: {
            long idx = std::lround(x);
            if (idx >= static_cast<long>(values_.size())) idx = static_cast<long>(values_.size()) - 1;
            return values_[static_cast<std::size_t>(idx)];
        }
    }
    throw std::logic_error("unreachable nonlinearity family");
}

std::string NonlinearityFn::name() const {
    switch (family_) {
        case Family::Identity:
            return "identity";
        case Family::InverseSqrt:
            return "inverse_sqrt";
        case Family::Power: {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "power:%.17g", exponent_);
            return buf;
        }
        case Family::Table: {
            std::string out = "table:";
            for (std::size_t n = 0; n < values_.size(); ++n) {
                char buf[40];
                std::snprintf(buf, sizeof(buf), "%.17g", values_[n]);
                if (n) out += ',';
                out += buf;
            }
            return out;
        }
    }
    throw std::logic_error("unreachable nonlinearity family");
}

} // namespace masersim::algebra
