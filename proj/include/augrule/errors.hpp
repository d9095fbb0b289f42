#pragma once

#include <stdexcept>
#include <string>

namespace augrule {

enum class ErrorKind {
  Syntax,
  Range,
  NotAKnot,
  Index,
  ResourceLimit,
  RhoIncompatible,
  EvenRhoUnsupported,
  NotAnAugmentation,
  ReportFailure,
  GiveUp,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define AUGRULE_DEFINE_ERROR(Name, Kind)                        \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& what) : Error(Kind, what) {} \
  };

AUGRULE_DEFINE_ERROR(SyntaxError, ErrorKind::Syntax)
AUGRULE_DEFINE_ERROR(RangeError, ErrorKind::Range)
AUGRULE_DEFINE_ERROR(NotAKnot, ErrorKind::NotAKnot)
AUGRULE_DEFINE_ERROR(IndexError, ErrorKind::Index)
AUGRULE_DEFINE_ERROR(ResourceLimit, ErrorKind::ResourceLimit)
AUGRULE_DEFINE_ERROR(RhoIncompatible, ErrorKind::RhoIncompatible)
AUGRULE_DEFINE_ERROR(EvenRhoUnsupported, ErrorKind::EvenRhoUnsupported)
AUGRULE_DEFINE_ERROR(NotAnAugmentation, ErrorKind::NotAnAugmentation)
AUGRULE_DEFINE_ERROR(ReportFailure, ErrorKind::ReportFailure)
AUGRULE_DEFINE_ERROR(GiveUp, ErrorKind::GiveUp)

#undef AUGRULE_DEFINE_ERROR

}  // namespace augrule
