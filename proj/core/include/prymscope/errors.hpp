#pragma once

#include <stdexcept>
#include <string>

namespace prymscope {

// Structured rejection codes for bad inputs. Anything that indicates a broken
// internal invariant (a bug, never bad data) is thrown as internal_error
// instead and must abort the surrounding computation.
enum class errc {
  mixed_modulus,
  mixed_length,
  bad_modulus,
  bad_dimensions,
  too_few_columns,
  zero_column,
  row_sum_nonzero,
  index_out_of_range,
  sum_not_zero,
  not_involution,
  odd_modulus,
  sigma_not_in_group,
  sigma_ramified,
  spec_out_of_range,
  parse_error,
  io_error,
};

const char* errc_name(errc code);

class validation_error : public std::runtime_error {
 public:
  validation_error(errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

 private:
  errc code_;
};

// Violated invariant: the process state is wrong, not the input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace prymscope
