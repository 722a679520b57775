#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace enriques {

// Domain errors carry a stable machine-readable code (snake_case) next to the
// human message. The CLI maps any Error to exit status 1 with a structured
// JSON payload on stderr; usage problems are handled separately (status 2).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code))
    {
    }

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define ENRIQUES_DEFINE_ERROR(ClassName, code_literal)                        \
    class ClassName : public Error {                                          \
    public:                                                                   \
        explicit ClassName(const std::string& message)                        \
            : Error(code_literal, message)                                    \
        {                                                                     \
        }                                                                     \
    }

ENRIQUES_DEFINE_ERROR(NotPositiveError, "not_positive");
ENRIQUES_DEFINE_ERROR(NotEffectiveError, "not_effective");
ENRIQUES_DEFINE_ERROR(NegativeSquareError, "negative_square");
ENRIQUES_DEFINE_ERROR(NonPositiveSquareError, "non_positive_square");
ENRIQUES_DEFINE_ERROR(UnsupportedModelError, "unsupported_model");
ENRIQUES_DEFINE_ERROR(NotCartierError, "not_cartier");
ENRIQUES_DEFINE_ERROR(BadParameterError, "bad_parameter");
ENRIQUES_DEFINE_ERROR(SearchExhaustedError, "search_exhausted");
ENRIQUES_DEFINE_ERROR(InternalBoundViolationError, "internal_bound_violation");
ENRIQUES_DEFINE_ERROR(PipelineInapplicableError, "pipeline_inapplicable");
ENRIQUES_DEFINE_ERROR(UnsupportedMultiplicityError, "unsupported_multiplicity");
ENRIQUES_DEFINE_ERROR(LengthCapExceededError, "length_cap_exceeded");
ENRIQUES_DEFINE_ERROR(ParseClassError, "parse_class");
ENRIQUES_DEFINE_ERROR(OracleMismatchError, "oracle_mismatch");

#undef ENRIQUES_DEFINE_ERROR

} // namespace enriques
