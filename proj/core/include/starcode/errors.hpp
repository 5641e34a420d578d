#pragma once

#include <stdexcept>
#include <string>

namespace starcode {

/// Error categories raised by the library. The CLI maps them to exit codes:
/// parse/io -> 1, budget -> 3, everything else -> 2.
enum class errc {
    not_prime,
    reducible_polynomial,
    unsupported_order,
    division_by_zero,
    field_mismatch,
    length_mismatch,
    empty_list,
    dependent_seed,
    precondition_violated,
    zero_code,
    budget_exceeded,
    zero_product,
    support_condition_violated,
    invalid_params,
    too_long,
    duplicate_points,
    parse_error,
    io_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const { return code_; }

    /// Exit code the CLI should use for this error.
    int exit_code() const {
        switch (code_) {
            case errc::parse_error:
            case errc::io_error:
                return 1;
            case errc::budget_exceeded:
                return 3;
            default:
                return 2;
        }
    }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace starcode
