#ifndef GRLWE_ERRORS_HPP
#define GRLWE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grlwe {

enum class errc {
  invalid_rank,
  no_suitable_prime,
  dimension_mismatch,
  ntt_unavailable,
  not_invertible,
  oracle_size_exceeded,
  not_in_lattice,
  singular_basis,
  bad_magic,
  unsupported_version,
  truncated_body,
  coefficient_out_of_range,
  param_mismatch,
};

const char* errc_name(errc code);

/// Library error carrying a stable error code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg);
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] void raise(errc code, const std::string& msg);

}  // namespace grlwe

#endif
