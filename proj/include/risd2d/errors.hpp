// SPDX-License-Identifier: Apache-2.0
//
// ris-d2d: sum-rate optimization for RIS-assisted D2D underlay uplinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISD2D_ERRORS_HPP
#define RISD2D_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace risd2d {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-finite entries, bad sizes, violated preconditions.
struct InvalidInputError : Error {
    using Error::Error;
};

/// Operand dimensions do not match.
struct DimensionError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

/// Matrix required to be (numerically) positive semidefinite is not.
struct NotPsdError : Error {
    using Error::Error;
};

/// Coincident nodes or otherwise unusable geometry.
struct GeometryError : Error {
    using Error::Error;
};

/// A channel vector that must be nonzero is identically zero.
struct DegenerateChannelError : Error {
    using Error::Error;
};

/// Power-allocation coefficients outside the closed forms' domain.
struct DegenerateCoefficientError : Error {
    using Error::Error;
};

/// Interior-point solver failure, with iteration context where known.
struct SdpError : Error {
    using Error::Error;
};

/// File-format / parsing problems on the CLI boundary.
struct IoError : Error {
    using Error::Error;
};

} // namespace risd2d

#endif // RISD2D_ERRORS_HPP
