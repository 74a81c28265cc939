#pragma once

#include <stdexcept>
#include <string>

namespace ultrapar {

enum class ErrorKind {
  ZeroVector,
  NotInteriorPoint,
  NotNormalised,
  NotPositive,
  InvalidOrder,
  InfinityOperand,
  NotNullVector,
  NotUnitModulus,
  NotIsometry,
  UnsupportedAlpha,
  ExistenceFails,
  DegenerateProduct,
  UnsupportedCase,
  NotInE,
  NoLatticeSolution,
  OutOfCertifiedRange,
  InternalInconsistency,
  NonPositiveInput,
  FixesInfinity,
  CapExceeded,
  Parse,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind k, const std::string& what)
      : std::runtime_error(what), kind_(k) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotInteriorPoint: return "NotInteriorPoint";
    case ErrorKind::NotNormalised: return "NotNormalised";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::InfinityOperand: return "InfinityOperand";
    case ErrorKind::NotNullVector: return "NotNullVector";
    case ErrorKind::NotUnitModulus: return "NotUnitModulus";
    case ErrorKind::NotIsometry: return "NotIsometry";
    case ErrorKind::UnsupportedAlpha: return "UnsupportedAlpha";
    case ErrorKind::ExistenceFails: return "ExistenceFails";
    case ErrorKind::DegenerateProduct: return "DegenerateProduct";
    case ErrorKind::UnsupportedCase: return "UnsupportedCase";
    case ErrorKind::NotInE: return "NotInE";
    case ErrorKind::NoLatticeSolution: return "NoLatticeSolution";
    case ErrorKind::OutOfCertifiedRange: return "OutOfCertifiedRange";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::NonPositiveInput: return "NonPositiveInput";
    case ErrorKind::FixesInfinity: return "FixesInfinity";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace ultrapar
