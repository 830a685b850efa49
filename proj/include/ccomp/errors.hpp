#pragma once

#include <stdexcept>
#include <string>

namespace ccomp {

class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define CCOMP_ERROR(Type)                                                   \
    class Type : public Error {                                             \
    public:                                                                 \
        explicit Type(const std::string& what) : Error(#Type, what) {}      \
    };

CCOMP_ERROR(DomainError)
CCOMP_ERROR(OverflowError)
CCOMP_ERROR(NegativeTerm)
CCOMP_ERROR(ExponentOutOfRange)
CCOMP_ERROR(HypothesisNotCertified)
CCOMP_ERROR(NoFixedPointLocated)
CCOMP_ERROR(PrecisionExhausted)
CCOMP_ERROR(DigitOverflow)
CCOMP_ERROR(UnknownConstant)
CCOMP_ERROR(DerivativeUnavailable)

#undef CCOMP_ERROR

}  // namespace ccomp
