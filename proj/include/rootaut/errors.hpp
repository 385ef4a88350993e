#pragma once

#include <stdexcept>
#include <string>

namespace rootaut {

// Base of everything this library throws on purpose. The CLI maps any
// Error to exit status 1; anything else is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

#define ROOTAUT_ERROR(Name, Kind)                          \
  class Name : public Error {                              \
   public:                                                 \
    using Error::Error;                                    \
    const char* kind() const noexcept override { return Kind; } \
  };

ROOTAUT_ERROR(ParameterError, "parameter")
ROOTAUT_ERROR(IntegrityError, "integrity")
ROOTAUT_ERROR(RegularityError, "regularity")
ROOTAUT_ERROR(SizeError, "size")
ROOTAUT_ERROR(CatalogueError, "catalogue")
ROOTAUT_ERROR(InternalConsistencyError, "internal-consistency")
ROOTAUT_ERROR(ResolutionError, "resolution")
ROOTAUT_ERROR(ConstructionError, "construction")

#undef ROOTAUT_ERROR

}  // namespace rootaut
