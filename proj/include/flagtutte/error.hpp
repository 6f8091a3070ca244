#ifndef FLAGTUTTE_ERROR_HPP
#define FLAGTUTTE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace flagtutte {

enum class ErrorCode {
    // input / validation
    InvalidInput,
    ParseError,
    NotAMatroid,
    EmptyBases,
    InvalidRank,
    EmptyMatrix,
    GroundSetExhausted,
    GroundSetTooLarge,
    GroundSetMismatch,
    NotAQuotient,
    NotAQuotientChain,
    NotABasis,
    NotPointed,
    NotUnimodular,
    HypothesisViolated,
    RankZeroConstituent,
    HasLoopOrColoop,
    LoopOrColoop,
    RankGapZero,
    UnknownInvariant,
    UnknownIdentity,
    // internal assertions: these surface bugs, never bad input
    ZeroPairing,
    DegenerateWeights,
    NonCancellingPole,
    NotInUV,
    NotDivisible,
    InternalAssertion,
};

inline constexpr std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NotAMatroid: return "NotAMatroid";
        case ErrorCode::EmptyBases: return "EmptyBases";
        case ErrorCode::InvalidRank: return "InvalidRank";
        case ErrorCode::EmptyMatrix: return "EmptyMatrix";
        case ErrorCode::GroundSetExhausted: return "GroundSetExhausted";
        case ErrorCode::GroundSetTooLarge: return "GroundSetTooLarge";
        case ErrorCode::GroundSetMismatch: return "GroundSetMismatch";
        case ErrorCode::NotAQuotient: return "NotAQuotient";
        case ErrorCode::NotAQuotientChain: return "NotAQuotientChain";
        case ErrorCode::NotABasis: return "NotABasis";
        case ErrorCode::NotPointed: return "NotPointed";
        case ErrorCode::NotUnimodular: return "NotUnimodular";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::RankZeroConstituent: return "RankZeroConstituent";
        case ErrorCode::HasLoopOrColoop: return "HasLoopOrColoop";
        case ErrorCode::LoopOrColoop: return "LoopOrColoop";
        case ErrorCode::RankGapZero: return "RankGapZero";
        case ErrorCode::UnknownInvariant: return "UnknownInvariant";
        case ErrorCode::UnknownIdentity: return "UnknownIdentity";
        case ErrorCode::ZeroPairing: return "ZeroPairing";
        case ErrorCode::DegenerateWeights: return "DegenerateWeights";
        case ErrorCode::NonCancellingPole: return "NonCancellingPole";
        case ErrorCode::NotInUV: return "NotInUV";
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::InternalAssertion: return "InternalAssertion";
    }
    return "Unknown";
}

/// True for codes that indicate a broken internal invariant rather than bad input.
inline constexpr bool is_internal(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ZeroPairing:
        case ErrorCode::DegenerateWeights:
        case ErrorCode::NonCancellingPole:
        case ErrorCode::NotInUV:
        case ErrorCode::NotDivisible:
        case ErrorCode::InternalAssertion:
            return true;
        default:
            return false;
    }
}

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace flagtutte

#endif  // FLAGTUTTE_ERROR_HPP
