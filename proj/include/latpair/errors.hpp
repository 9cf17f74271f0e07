#ifndef LATPAIR_ERRORS_HPP
#define LATPAIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latpair {

enum class Errc {
    singular_matrix,
    dimension_mismatch,
    radicand_mismatch,
    non_integral_input,
    both_zero,
    box_too_large,
    not_unipotent,
    not_unimodular_integral,
    zero_parameter,
    not_coprime,
    perfect_square_radicand,
    minkowski_violation,
    internal_identity_failure,
    volume_mismatch,
    division_by_zero,
    dimension_not_2,
    parse_error,
    invalid_argument,
};

/// Single exception type for the whole library; `code()` identifies the
/// failure class so callers and tests can dispatch without string matching.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

/// Parse failures additionally carry a 1-based row/column position.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int row, int col)
        : Error(Errc::parse_error, what), row_(row), col_(col) {}
    int row() const { return row_; }
    int col() const { return col_; }

private:
    int row_;
    int col_;
};

const char* errc_name(Errc code);

} // namespace latpair

#endif
