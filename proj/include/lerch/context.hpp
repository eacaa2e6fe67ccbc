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

#ifndef LERCH_CONTEXT_HPP
#define LERCH_CONTEXT_HPP

#include <lerch/complex.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace lerch {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside the supported domain.
class DomainError : public Error {
public:
    using Error::Error;
};

enum class SingularityKind { Pole, Zero };

/// Evaluation requested exactly at a singular point.
class PoleError : public DomainError {
public:
    PoleError(const std::string& what, SingularityKind kind = SingularityKind::Pole)
        : DomainError(what), kind_(kind) {}
    SingularityKind kind() const { return kind_; }

private:
    SingularityKind kind_;
};

class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

class QuadratureNonconvergent : public ConvergenceFailure {
public:
    using ConvergenceFailure::ConvergenceFailure;
};

class DecayEnvelopeInsufficient : public Error {
public:
    using Error::Error;
};

class RootIsolationFailure : public Error {
public:
    using Error::Error;
};

class CaseOutOfRange : public DomainError {
public:
    using DomainError::DomainError;
};

class IntegerSRejected : public DomainError {
public:
    using DomainError::DomainError;
};

class RegistrationError : public Error {
public:
    using Error::Error;
};

/// Requested accuracy of a computation.
///
/// Results aim for absolute error below 2^-(working_bits - guard_bits); all
/// intermediate arithmetic runs with at least working_bits + guard_bits bits.
class PrecisionContext {
public:
    PrecisionContext() = default;
    explicit PrecisionContext(long working_bits, long guard_bits = 16)
        : working_bits_(working_bits), guard_bits_(guard_bits)
    {
        if (working_bits < 64) throw DomainError("working_bits must be at least 64");
        if (guard_bits < 8) throw DomainError("guard_bits must be at least 8");
    }

    long working_bits() const { return working_bits_; }
    long guard_bits() const { return guard_bits_; }
    long internal_bits() const { return working_bits_ + guard_bits_; }
    long target_bits() const { return working_bits_ - guard_bits_; }
    /// 2^-(working_bits - guard_bits) at the current precision.
    Real target_abs_error() const { return pow2(-target_bits()); }

    /// Copy with the working precision raised by extra bits.
    PrecisionContext raised(long extra) const { return PrecisionContext(working_bits_ + extra, guard_bits_); }

private:
    long working_bits_ = 128;
    long guard_bits_ = 16;
};

/// Pole of the evaluated function near the evaluation point.
struct Pole {
    Complex location;
    Complex residue;
};

/// Result of an evaluation.
///
/// When `pole` is set the evaluation point lies within the near-pole
/// threshold of `pole->location` and `value` holds the finite part, i.e. the
/// value minus residue / (s - location).
struct EvalResult {
    Complex value;
    Real err_bound;
    std::optional<Pole> pole;
};

/// Width of the near-pole window for a context: 2^-(working_bits / 4).
inline Real near_pole_radius(const PrecisionContext& ctx) { return pow2(-(ctx.working_bits() / 4)); }

} // namespace lerch

#endif
