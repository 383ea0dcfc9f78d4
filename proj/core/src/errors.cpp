#include "greenseq/errors.hpp"

namespace greenseq {

int exit_code_for(errc code) {
  switch (code) {
    case errc::parse_error:
    case errc::cyclic_quiver:
    case errc::disconnected:
    case errc::not_sink_or_source:
    case errc::unknown_preset:
    case errc::triple_not_in_catalog:
    case errc::too_many_orientations:
    case errc::capacity_exceeded:
      return 2;
    case errc::unsupported_type:
    case errc::sink_unreachable:
      return 3;
    case errc::mismatch_found:
      return 1;
    default:
      return 4;
  }
}

const char* to_string(errc code) {
  switch (code) {
    case errc::parse_error: return "ParseError";
    case errc::cyclic_quiver: return "CyclicQuiver";
    case errc::disconnected: return "Disconnected";
    case errc::not_sink_or_source: return "NotSinkOrSource";
    case errc::unknown_preset: return "UnknownPreset";
    case errc::triple_not_in_catalog: return "TripleNotInCatalog";
    case errc::too_many_orientations: return "TooManyOrientations";
    case errc::capacity_exceeded: return "CapacityExceeded";
    case errc::unsupported_type: return "UnsupportedType";
    case errc::sink_unreachable: return "SinkUnreachable";
    case errc::mismatch_found: return "MismatchFound";
    case errc::non_unimodular: return "NonUnimodular";
    case errc::orbit_overflow: return "OrbitOverflow";
    case errc::loop_overflow: return "LoopOverflow";
    case errc::cardinality_violation: return "CardinalityViolation";
    case errc::sign_incoherence: return "SignIncoherence";
    case errc::cycle_detected: return "CycleDetected";
    case errc::index_out_of_catalog: return "IndexOutOfCatalog";
    case errc::internal: return "InternalInvariant";
  }
  return "InternalInvariant";
}

}  // namespace greenseq
