#include "toraut/error.hpp"

namespace toraut {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DegreeTooSmall:
            return "DegreeTooSmall";
        case ErrorCode::EndpointRoot:
            return "EndpointRoot";
        case ErrorCode::NotSelfReciprocal:
            return "NotSelfReciprocal";
        case ErrorCode::RepeatedRoots:
            return "RepeatedRoots";
        case ErrorCode::CircleBoundaryUnresolved:
            return "CircleBoundaryUnresolved";
        case ErrorCode::NotMonic:
            return "NotMonic";
        case ErrorCode::BadForm:
            return "BadForm";
        case ErrorCode::NotSimpleSpectrum:
            return "NotSimpleSpectrum";
        case ErrorCode::EmptyPart:
            return "EmptyPart";
        case ErrorCode::NotPartiallyHyperbolic:
            return "NotPartiallyHyperbolic";
        case ErrorCode::RealRoot:
            return "RealRoot";
        case ErrorCode::NotUnimodular:
            return "NotUnimodular";
        case ErrorCode::MayBeNonPeriodic:
            return "MayBeNonPeriodic";
        case ErrorCode::DenominatorTooLarge:
            return "DenominatorTooLarge";
        case ErrorCode::WrongUnstableDim:
            return "WrongUnstableDim";
        case ErrorCode::BudgetExhausted:
            return "BudgetExhausted";
    }
    return "UnknownError";
}

}  // namespace toraut
