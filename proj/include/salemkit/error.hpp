/*
   Copyright 2026 The salemkit Authors

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

#ifndef SALEMKIT_ERROR_HPP
#define SALEMKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace salemkit {

enum class Errc {
    NotDivisible,
    PreconditionFailed,
    NotInterlacing,
    NotOnCircle,
    NotSimple,
    NotAlternating,
    Inconclusive,
    NotMaterializable,
    OddN,
    NotCoprime,
    BadParam,
    NotReciprocal,
    OddDegree,
    EndpointIsRoot,
    BadTrace,
    TooLarge,
    ParseError,
};

inline std::string_view errc_name(Errc e) noexcept
{
    switch (e) {
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::NotInterlacing: return "NotInterlacing";
    case Errc::NotOnCircle: return "NotOnCircle";
    case Errc::NotSimple: return "NotSimple";
    case Errc::NotAlternating: return "NotAlternating";
    case Errc::Inconclusive: return "Inconclusive";
    case Errc::NotMaterializable: return "NotMaterializable";
    case Errc::OddN: return "OddN";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::BadParam: return "BadParam";
    case Errc::NotReciprocal: return "NotReciprocal";
    case Errc::OddDegree: return "OddDegree";
    case Errc::EndpointIsRoot: return "EndpointIsRoot";
    case Errc::BadTrace: return "BadTrace";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Single exception type for the library; `code()` tells callers which
/// contract was violated, `what()` carries the witness.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code)
    {
    }

    [[nodiscard]] Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace salemkit

#endif // SALEMKIT_ERROR_HPP
