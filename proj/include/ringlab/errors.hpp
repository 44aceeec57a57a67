#pragma once

#include <stdexcept>
#include <string>

namespace ringlab {

// Base of every error the library throws. The name() tag is stable and is
// what the CLI prints.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& name() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define RINGLAB_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  };

RINGLAB_DEFINE_ERROR(SchemaError)
RINGLAB_DEFINE_ERROR(AlgebraError)
RINGLAB_DEFINE_ERROR(RingMismatch)
RINGLAB_DEFINE_ERROR(CapacityError)
RINGLAB_DEFINE_ERROR(InfiniteRing)
RINGLAB_DEFINE_ERROR(VerificationError)
RINGLAB_DEFINE_ERROR(NotIdempotentClass)
RINGLAB_DEFINE_ERROR(SeparatorNotFound)
RINGLAB_DEFINE_ERROR(NotMpRing)
RINGLAB_DEFINE_ERROR(BaseNotPP)
RINGLAB_DEFINE_ERROR(NotReduced)
RINGLAB_DEFINE_ERROR(ConsistencyError)
RINGLAB_DEFINE_ERROR(UnknownName)
RINGLAB_DEFINE_ERROR(NotApplicable)

#undef RINGLAB_DEFINE_ERROR

}  // namespace ringlab
