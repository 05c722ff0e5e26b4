#pragma once

#include <stdexcept>
#include <string>

namespace gait {

// Broad failure class, used by the CLI to pick an exit code.
enum class ErrorKind { Usage, Data, Numeric };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

#define GAITKIT_DEFINE_ERROR(Name, Kind)                                   \
    class Name : public Error {                                            \
    public:                                                                \
        explicit Name(const std::string& what) : Error(Kind, what) {}      \
    }

GAITKIT_DEFINE_ERROR(UsageError, ErrorKind::Usage);

// ingestion / validation
GAITKIT_DEFINE_ERROR(ParseError, ErrorKind::Data);
GAITKIT_DEFINE_ERROR(SchemaError, ErrorKind::Data);
GAITKIT_DEFINE_ERROR(SyncError, ErrorKind::Data);
GAITKIT_DEFINE_ERROR(NotStationary, ErrorKind::Data);
GAITKIT_DEFINE_ERROR(InvalidProfile, ErrorKind::Data);

// numerics
GAITKIT_DEFINE_ERROR(NonUnitQuaternion, ErrorKind::Numeric);
GAITKIT_DEFINE_ERROR(UnsupportedRate, ErrorKind::Numeric);
GAITKIT_DEFINE_ERROR(EmptySignal, ErrorKind::Numeric);
GAITKIT_DEFINE_ERROR(ZeroVariance, ErrorKind::Numeric);
GAITKIT_DEFINE_ERROR(NoPeriodicity, ErrorKind::Numeric);
GAITKIT_DEFINE_ERROR(SignalTooShort, ErrorKind::Numeric);
GAITKIT_DEFINE_ERROR(WindowTooLong, ErrorKind::Numeric);

// statistics / models
GAITKIT_DEFINE_ERROR(DegenerateGroups, ErrorKind::Numeric);
GAITKIT_DEFINE_ERROR(ZeroSpread, ErrorKind::Numeric);
GAITKIT_DEFINE_ERROR(NoSignificantFeatures, ErrorKind::Numeric);
GAITKIT_DEFINE_ERROR(SingularScatter, ErrorKind::Numeric);
GAITKIT_DEFINE_ERROR(DegenerateData, ErrorKind::Numeric);
GAITKIT_DEFINE_ERROR(DimensionMismatch, ErrorKind::Usage);
GAITKIT_DEFINE_ERROR(EmptyTestSet, ErrorKind::Data);
GAITKIT_DEFINE_ERROR(InsufficientData, ErrorKind::Data);

#undef GAITKIT_DEFINE_ERROR

}  // namespace gait
