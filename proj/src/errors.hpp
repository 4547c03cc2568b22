#pragma once

#include <stdexcept>
#include <string>

namespace cg {

enum class Errc {
  parse_error,
  invalid_argument,
  non_monotone,
  empty_knots,
  not_single_interval,
  fewer_than_two_generators,
  bad_support_shape,
  not_prechain,
  not_certified,
  not_in_class_a,
  unbounded_support,
  too_few_generators,
  bad_marked_point,
  not_found,
  empty_window,
  index_out_of_range,
  bad_parameters,
  denominator_limit,
  io_error,
  internal,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace cg
