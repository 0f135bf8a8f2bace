#include "lukas/error.hpp"

namespace lukas {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::PrefixBelowAxis: return "PrefixBelowAxis";
    case Errc::NonzeroEndHeight: return "NonzeroEndHeight";
    case Errc::StepOutsideFamily: return "StepOutsideFamily";
    case Errc::MalformedPath: return "MalformedPath";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::UnknownName: return "UnknownName";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::UnsupportedPattern: return "UnsupportedPattern";
    case Errc::InvalidPositionSet: return "InvalidPositionSet";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::NonIntegral: return "NonIntegral";
    case Errc::NoClosedForm: return "NoClosedForm";
    case Errc::UnsupportedTag: return "UnsupportedTag";
    case Errc::NonConvergence: return "NonConvergence";
  }
  return "Unknown";
}

}  // namespace lukas
