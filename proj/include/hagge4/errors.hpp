#pragma once

#include <stdexcept>
#include <string>

namespace hagge {

// Base of all domain errors. what() is "<Kind>" or "<Kind>: <detail>".
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(detail.empty() ? kind : kind + ": " + detail),
          kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define HAGGE_DEFINE_ERROR(Name)                              \
    class Name : public Error {                               \
    public:                                                   \
        explicit Name(const std::string& detail = "")         \
            : Error(#Name, detail) {}                         \
    }

HAGGE_DEFINE_ERROR(ZeroDenominator);
HAGGE_DEFINE_ERROR(DivisionByZero);
HAGGE_DEFINE_ERROR(ParseError);
HAGGE_DEFINE_ERROR(CoincidentPoints);
HAGGE_DEFINE_ERROR(CoincidentParameters);
HAGGE_DEFINE_ERROR(ParallelLines);
HAGGE_DEFINE_ERROR(CollinearPoints);
HAGGE_DEFINE_ERROR(NotOnCircle);
HAGGE_DEFINE_ERROR(InvalidParameter);
HAGGE_DEFINE_ERROR(DuplicateVertex);
HAGGE_DEFINE_ERROR(DegeneratePosition);

#undef HAGGE_DEFINE_ERROR

} // namespace hagge
