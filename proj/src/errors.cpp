#include "grlwe/errors.hpp"

namespace grlwe {

const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_rank: return "InvalidRank";
    case errc::no_suitable_prime: return "NoSuitablePrime";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::ntt_unavailable: return "NttUnavailable";
    case errc::not_invertible: return "NotInvertible";
    case errc::oracle_size_exceeded: return "OracleSizeExceeded";
    case errc::not_in_lattice: return "NotInLattice";
    case errc::singular_basis: return "SingularBasis";
    case errc::bad_magic: return "BadMagic";
    case errc::unsupported_version: return "UnsupportedVersion";
    case errc::truncated_body: return "TruncatedBody";
    case errc::coefficient_out_of_range: return "CoefficientOutOfRange";
    case errc::param_mismatch: return "ParamMismatch";
  }
  return "UnknownError";
}

Error::Error(errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

void raise(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace grlwe
