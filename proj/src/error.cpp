#include "degenkit/error.hpp"

namespace degenkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidQuiver: return "InvalidQuiver";
    case ErrorKind::NotTame: return "NotTame";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotMixed: return "NotMixed";
    case ErrorKind::OutOfWindow: return "OutOfWindow";
    case ErrorKind::NoSuchSlice: return "NoSuchSlice";
    case ErrorKind::NotASource: return "NotASource";
    case ErrorKind::NotASink: return "NotASink";
    case ErrorKind::InvalidShape: return "InvalidShape";
    case ErrorKind::NotAShape: return "NotAShape";
    case ErrorKind::BadPair: return "BadPair";
    case ErrorKind::NotWild: return "NotWild";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::NotTamePlusW: return "NotTamePlusW";
    case ErrorKind::BadContext: return "BadContext";
    case ErrorKind::BadPlan: return "BadPlan";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace degenkit
