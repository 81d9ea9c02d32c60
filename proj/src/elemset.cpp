#include "priestley/elemset.hpp"
#include "priestley/error.hpp"

namespace priestley {

std::string ElemSet::toString() const {
  std::string out = "{";
  bool firstMember = true;
  for (int i : *this) {
    if (!firstMember) out += ',';
    out += std::to_string(i);
    firstMember = false;
  }
  return out + "}";
}

std::string_view toString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NotATopology: return "NotATopology";
    case ErrorKind::NotT0: return "NotT0";
    case ErrorKind::NotSober: return "NotSober";
    case ErrorKind::IsoFailure: return "IsoFailure";
    case ErrorKind::FixtureMismatch: return "FixtureMismatch";
    case ErrorKind::UnknownRule: return "UnknownRule";
    case ErrorKind::NotScottOpen: return "NotScottOpen";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnsupportedTarget: return "UnsupportedTarget";
  }
  return "Unknown";
}

void requireWithin(std::size_t n, std::size_t bound, std::string_view what) {
  if (n > bound || n > kMaxElements) {
    throw Error(ErrorKind::BoundExceeded,
                std::string(what) + ": size " + std::to_string(n) + " exceeds bound " +
                    std::to_string(std::min(bound, kMaxElements)));
  }
}

}  // namespace priestley
