#pragma once

#include <stdexcept>
#include <string>

namespace vstab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define VSTAB_ERROR(Name)                                                      \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}   \
    }

VSTAB_ERROR(DegreeMismatch);
VSTAB_ERROR(NotAPermutation);
VSTAB_ERROR(OrderExceedsCap);
VSTAB_ERROR(ParseError);
VSTAB_ERROR(CosetLimitExceeded);
VSTAB_ERROR(TableNotClosed);
VSTAB_ERROR(InvalidPartition);
VSTAB_ERROR(PartitionNotInvariant);
VSTAB_ERROR(ConnectionNotInverseClosed);
VSTAB_ERROR(IdentityInConnection);
VSTAB_ERROR(SelfPairedLoop);
VSTAB_ERROR(NotSimple);
VSTAB_ERROR(UnknownSeed);
VSTAB_ERROR(SeedInvariantViolated);
VSTAB_ERROR(InvalidParams);
VSTAB_ERROR(NotAnAutomorphism);
VSTAB_ERROR(VertexOutOfRange);
VSTAB_ERROR(SearchBudgetExceeded);
VSTAB_ERROR(NotASubgroup);
VSTAB_ERROR(NotLocallyD4);
VSTAB_ERROR(NotLocallyC23);
VSTAB_ERROR(StabTooSmall);
VSTAB_ERROR(PairingDegenerate);
VSTAB_ERROR(NotPowerOfTwo);
VSTAB_ERROR(NotCubic);
VSTAB_ERROR(NotVertexTransitive);
VSTAB_ERROR(NoCaseHolds);

#undef VSTAB_ERROR

} // namespace vstab
