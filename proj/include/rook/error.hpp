#ifndef ROOK_ERROR_HPP_
#define ROOK_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rook {

  enum class ErrorCode {
    duplicate_domain,
    duplicate_range,
    index_out_of_range,
    dimension_mismatch,
    cardinality_mismatch,
    not_a_rook_matrix,
    syntax_error,
    bound_exceeded,
    not_in_bn,
    invalid_ballot,
    not_down_closed,
    invalid_range,
  };

  constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::duplicate_domain: return "DuplicateDomain";
      case ErrorCode::duplicate_range: return "DuplicateRange";
      case ErrorCode::index_out_of_range: return "IndexOutOfRange";
      case ErrorCode::dimension_mismatch: return "DimensionMismatch";
      case ErrorCode::cardinality_mismatch: return "CardinalityMismatch";
      case ErrorCode::not_a_rook_matrix: return "NotARookMatrix";
      case ErrorCode::syntax_error: return "SyntaxError";
      case ErrorCode::bound_exceeded: return "BoundExceeded";
      case ErrorCode::not_in_bn: return "NotInBn";
      case ErrorCode::invalid_ballot: return "InvalidBallot";
      case ErrorCode::not_down_closed: return "NotDownClosed";
      case ErrorCode::invalid_range: return "InvalidRange";
    }
    return "Unknown";
  }

  //! Every failure raised by the library. The code identifies the failure
  //! kind; syntax errors additionally carry the offending byte offset.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code) {}

    Error(ErrorCode code, std::string const& what, std::size_t position)
        : std::runtime_error(std::string(to_string(code)) + " at position "
                             + std::to_string(position) + ": " + what),
          _code(code),
          _position(position) {}

    ErrorCode code() const noexcept {
      return _code;
    }

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    ErrorCode   _code;
    std::size_t _position = 0;
  };

}  // namespace rook

#endif  // ROOK_ERROR_HPP_
