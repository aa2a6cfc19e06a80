#ifndef POINTLIKE_ERRORS_HPP
#define POINTLIKE_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pointlike {

/// Base class of everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid input: files, tables, arguments, regexes.
/// CLI maps these to exit code 2.
struct InputError : Error {
  using Error::Error;
};

/// A configured resource cap was exceeded. Never a wrong answer.
/// CLI maps these to exit code 3.
struct CapExceededError : Error {
  using Error::Error;
};

/// An internal cross-check failed. Signals a bug in this library,
/// not a problem with the input.
struct VerificationError : Error {
  using Error::Error;
};

struct NonAssociativeError : InputError {
  std::size_t i, j, k;
  NonAssociativeError(std::size_t i_, std::size_t j_, std::size_t k_)
      : InputError("multiplication table violates associativity at triple ("
                   + std::to_string(i_) + ", " + std::to_string(j_) + ", "
                   + std::to_string(k_) + ")"),
        i(i_),
        j(j_),
        k(k_) {}
};

struct IndexOutOfRangeError : InputError {
  using InputError::InputError;
};

struct EmptyGeneratorSetError : InputError {
  using InputError::InputError;
};

struct NotIdempotentError : InputError {
  using InputError::InputError;
};

struct NotSurjectiveError : InputError {
  using InputError::InputError;
};

struct ArityMismatchError : InputError {
  using InputError::InputError;
};

struct UniverseMismatchError : InputError {
  using InputError::InputError;
};

struct NotAChainError : InputError {
  using InputError::InputError;
};

struct RegexParseError : InputError {
  std::size_t position;
  RegexParseError(const std::string& what, std::size_t pos)
      : InputError(what + " at position " + std::to_string(pos)),
        position(pos) {}
};

struct EmptyWordAcceptedError : InputError {
  using InputError::InputError;
};

struct AlphabetMismatchError : InputError {
  using InputError::InputError;
};

struct NotDisjointError : InputError {
  std::string witness;
  explicit NotDisjointError(const std::string& witness_word)
      : InputError("languages are not disjoint; both accept \"" + witness_word
                   + "\""),
        witness(witness_word) {}
};

/// The kernel-rule and pseudoidentity-rule saturations produced different
/// maximal antichains. Carries one set in the symmetric difference.
struct StrategiesDisagreeError : VerificationError {
  std::uint64_t witness_mask;
  explicit StrategiesDisagreeError(std::uint64_t mask)
      : VerificationError(
            "saturation strategies disagree; witness member mask "
            + std::to_string(mask)),
        witness_mask(mask) {}
};

/// A blowup-operator axiom failed to hold. Always an implementation bug.
struct AxiomViolationError : VerificationError {
  std::string axiom;
  AxiomViolationError(const std::string& axiom_id, const std::string& detail)
      : VerificationError("blowup axiom " + axiom_id + " violated: " + detail),
        axiom(axiom_id) {}
};

struct StateExplosionError : CapExceededError {
  using CapExceededError::CapExceededError;
};

}  // namespace pointlike

#endif  // POINTLIKE_ERRORS_HPP
