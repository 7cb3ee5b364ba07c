#ifndef COSPEC_ERROR_HPP
#define COSPEC_ERROR_HPP

#include <stdexcept>

namespace cospec {

/// Base class of every domain error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SelfLoop : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct VertexOutOfRange : Error { using Error::Error; };

struct NonSquare : Error { using Error::Error; };
struct NonSymmetric : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

struct NotAPartition : Error { using Error::Error; };
struct NotAdmissible : Error { using Error::Error; };
struct Overlap : Error { using Error::Error; };
struct SizeMismatch : Error { using Error::Error; };
struct ColumnCaseViolation : Error { using Error::Error; };
struct RowSumNotConstant : Error { using Error::Error; };

struct InfeasibleParameters : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace cospec

#endif
