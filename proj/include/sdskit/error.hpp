#pragma once

#include <stdexcept>
#include <string>

namespace sdskit {

// Error categories raised by the library.
enum class errc {
    bad_input,
    infeasible_params,
    out_of_range,
    inverse_not_integral,
    block_size_mismatch,
    not_divisible,
    unsupported_factor,
    alphabet_mismatch,
    too_large,
    unsupported,
    corrupt_registry,
};

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace sdskit
