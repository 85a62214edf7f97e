#ifndef COBORD_ERRORS_HPP
#define COBORD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cobord {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define COBORD_DEFINE_ERROR(Name)                                              \
    struct Name : Error {                                                      \
        explicit Name(const std::string& msg) : Error(#Name ": " + msg) {}     \
    }

COBORD_DEFINE_ERROR(DimensionMismatch);
COBORD_DEFINE_ERROR(SingularMatrix);
COBORD_DEFINE_ERROR(SignatureMismatch);
COBORD_DEFINE_ERROR(RankViolation);
COBORD_DEFINE_ERROR(InvalidIndex);
COBORD_DEFINE_ERROR(EmptySpec);
COBORD_DEFINE_ERROR(NoStabilization);
COBORD_DEFINE_ERROR(Unsupported);
COBORD_DEFINE_ERROR(NoBound);
COBORD_DEFINE_ERROR(UnknownLabel);
COBORD_DEFINE_ERROR(InvalidState);
COBORD_DEFINE_ERROR(MissingSingleton);
COBORD_DEFINE_ERROR(InconsistentSamples);
COBORD_DEFINE_ERROR(ParseError);
COBORD_DEFINE_ERROR(CapExceeded);

#undef COBORD_DEFINE_ERROR

} // namespace cobord

#endif
