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

#ifndef LERCH_SAMPLING_HPP
#define LERCH_SAMPLING_HPP

#include <cstdint>
#include <random>

namespace lerch {

/// Deterministic sampler built on mt19937_64 raw output only, so the draws
/// do not depend on the standard library's distribution implementations.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : gen_(seed) {}
    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi)
    {
        double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }
    long integer(long lo, long hi) { return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

} // namespace lerch

#endif
