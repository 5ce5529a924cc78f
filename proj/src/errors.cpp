#include "tavg/errors.hpp"

namespace tavg {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::UnsupportedComposition: return "UnsupportedComposition";
        case ErrorCode::EmptyPattern: return "EmptyPattern";
        case ErrorCode::ImproperTransform: return "ImproperTransform";
        case ErrorCode::WrongDomain: return "WrongDomain";
        case ErrorCode::PoleOnPath: return "PoleOnPath";
        case ErrorCode::QuadratureFailure: return "QuadratureFailure";
        case ErrorCode::UnstableSystem: return "UnstableSystem";
        case ErrorCode::PoleAtOne: return "PoleAtOne";
        case ErrorCode::PoleAtZero: return "PoleAtZero";
        case ErrorCode::PoleOnContour: return "PoleOnContour";
        case ErrorCode::ExtrapolationUnstable: return "ExtrapolationUnstable";
        case ErrorCode::UnderResolved: return "UnderResolved";
        case ErrorCode::UnstableImpulseResponse: return "UnstableImpulseResponse";
        case ErrorCode::PreconditionViolation: return "PreconditionViolation";
        case ErrorCode::SerializationError: return "SerializationError";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "UnknownError";
}

}  // namespace tavg
