#ifndef HYPERCX_ERRORS_HPP
#define HYPERCX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypercx {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define HYPERCX_DEFINE_ERROR(NAME)                                     \
    class NAME : public Error {                                        \
    public:                                                            \
        explicit NAME(const std::string& what) : Error(what) {}        \
    }

HYPERCX_DEFINE_ERROR(InvalidDimension);
HYPERCX_DEFINE_ERROR(UnknownPreset);
HYPERCX_DEFINE_ERROR(AlgebraMismatch);
HYPERCX_DEFINE_ERROR(UnknownConjugation);
HYPERCX_DEFINE_ERROR(ZeroDivisorError);
HYPERCX_DEFINE_ERROR(UnknownOperator);
HYPERCX_DEFINE_ERROR(UnknownGoldenId);
HYPERCX_DEFINE_ERROR(DomainError);
HYPERCX_DEFINE_ERROR(UnknownSymbol);
HYPERCX_DEFINE_ERROR(EliminationFailed);
HYPERCX_DEFINE_ERROR(OnCone);
HYPERCX_DEFINE_ERROR(TailBoundFailed);
HYPERCX_DEFINE_ERROR(AllPointsRejected);
HYPERCX_DEFINE_ERROR(Singular);
HYPERCX_DEFINE_ERROR(CharacterizationMismatch);
HYPERCX_DEFINE_ERROR(ModeError);

#undef HYPERCX_DEFINE_ERROR

/// Parse error with a byte offset into the offending text.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace hypercx

#endif
