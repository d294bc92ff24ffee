#ifndef OIDEAL_ERRORS_HPP
#define OIDEAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oideal {

enum class errc {
  duplicate_vertex,
  loop_edge,
  antiparallel_pair,
  nonpositive_weight,
  unknown_vertex,
  not_stable_set,
  not_a_cover,
  size_cap,
  exponent_overflow,
  unit_ideal,
  verification_failure,
  criteria_disagreement,
  not_a_whisker,
  not_bipartite,
  not_a_cycle,
  not_a_path,
  not_complete,
  parse_error,
  io_error,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace oideal

#endif
