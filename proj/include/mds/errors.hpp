#pragma once

#include <stdexcept>
#include <string>

namespace mds {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MDS_DEFINE_ERROR(Name) \
  class Name : public Error {  \
   public:                     \
    using Error::Error;        \
  }

MDS_DEFINE_ERROR(ParseError);
MDS_DEFINE_ERROR(ZeroVector);
MDS_DEFINE_ERROR(NoPositiveRelation);
MDS_DEFINE_ERROR(InvalidPolytope);
MDS_DEFINE_ERROR(OutOfRange);
MDS_DEFINE_ERROR(NotSizeOne);
MDS_DEFINE_ERROR(NonSimplicialSlice);
MDS_DEFINE_ERROR(UnexpectedKernelDim);
MDS_DEFINE_ERROR(NormalizationUnsolvable);
// Raised when a self-consistency cross-check inside the library disagrees.
MDS_DEFINE_ERROR(InternalError);

#undef MDS_DEFINE_ERROR

}  // namespace mds
