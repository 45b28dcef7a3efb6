#ifndef RLC_ERROR_HPP
#define RLC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rlc {

// Every failure mode in the library carries one of these codes so tests can
// assert on the exact condition rather than matching message text.
enum class Errc {
    NonPrimeCharacteristic,
    ReducibleModulus,
    FieldTooLarge,
    InvertZero,
    MixedFields,
    DimensionMismatch,
    DuplicateVector,
    InvalidRate,
    EnumerationTooLarge,
    EmptyLambda,
    EllExceedsField,
    SearchTooLarge,
    HypothesisViolated,
    DomainError,
    ConstraintViolated,
    BadInput,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace rlc

#endif
