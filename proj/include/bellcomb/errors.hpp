#pragma once

#include <stdexcept>
#include <string>

namespace bellcomb {

// Base for every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define BELLCOMB_DEFINE_ERROR(Name)                                    \
    class Name : public Error {                                        \
    public:                                                            \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

BELLCOMB_DEFINE_ERROR(NonContiguousGround);
BELLCOMB_DEFINE_ERROR(InvalidRGS);
BELLCOMB_DEFINE_ERROR(ElementNotInGround);
BELLCOMB_DEFINE_ERROR(NegativeIndex);
BELLCOMB_DEFINE_ERROR(IndexOutOfRange);
BELLCOMB_DEFINE_ERROR(SizeTooLarge);
BELLCOMB_DEFINE_ERROR(NonIntegerCoefficient);
BELLCOMB_DEFINE_ERROR(WeightVectorTooShort);
BELLCOMB_DEFINE_ERROR(MalformedInput);
BELLCOMB_DEFINE_ERROR(PreconditionViolated);

#undef BELLCOMB_DEFINE_ERROR

} // namespace bellcomb
