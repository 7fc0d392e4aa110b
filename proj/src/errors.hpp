#ifndef BKIT_ERRORS_HPP
#define BKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bkit {

enum class errc {
    zero_point,          // evaluation at t = 0
    zero_input,
    zero_divisor,
    zero_modulus,
    zero_denominator,
    singular_matrix,
    not_hermitian,
    dimension_mismatch,
    no_solution,
    invalid_order,
    degenerate_input,
    parity_obstruction,
    not_coprime,
    singular_at_one,
    not_realizable,
    not_unit,
    invalid_module,
    precondition,
    parse_error,
    trial_bound_exceeded,
    internal,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace bkit

#endif
