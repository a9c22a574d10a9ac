/* Copyright 2026 The strainvalley Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/** @file errors.hpp
 *  @brief Exception hierarchy shared by all strainvalley modules.
 */

#ifndef STRAINVALLEY_ERRORS_HPP
#define STRAINVALLEY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace strainvalley {

/// An argument lies outside the range where the model is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A named entry (parameter set, config key, valley name) does not exist.
class LookupError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// The requested physical target cannot be reached with the given inputs.
class InfeasibleError : public std::runtime_error {
public:
    enum class Reason {
        AlreadyBelow,       // L1 is already below Delta6 at zero strain
        NeverCrosses,       // no crossing inside the strain bracket
        RequiresXAboveOne,  // strain exceeds what pure Ge can impose
        Unbounded,          // zero misfit, critical thickness is infinite
        NoRoot              // equation has no admissible root
    };

    InfeasibleError(Reason reason, const std::string& what)
        : std::runtime_error(what), reason_(reason) {}

    Reason reason() const noexcept { return reason_; }

private:
    Reason reason_;
};

/// An iterative solver hit its iteration cap without converging.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace strainvalley

#endif
