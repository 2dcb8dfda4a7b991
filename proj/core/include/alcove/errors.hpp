// Domain errors shared by all modules.  Every throwing code path uses one of
// these codes; the CLI maps calc_error to exit status 1 and prints the code
// name, so the names below are part of the output contract.
#ifndef ALCOVE_ERRORS_HPP
#define ALCOVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace alcove {

enum class errc {
  unknown_type,
  dimension_mismatch,
  not_a_positive_root,
  p_too_small,
  wall_point,
  fixed_point,
  not_in_ci,
  no_such_weight,
  wrong_block,
  wrong_basis,
  negative_coefficient,
  not_dominant,
  not_regular,
  check_failed,
  peel_failed,
  missing_entry,
  not_divisible,
  bound_exceeded,
  internal, // never expected; indicates a bug in this library
};

const char* errc_name(errc c);

class calc_error : public std::runtime_error {
public:
  calc_error(errc code, const std::string& what_arg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what_arg),
        code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw calc_error(code, msg);
}

} // namespace alcove

#endif
