#pragma once

#include "msw/error.hpp"
#include "msw/matrix_space.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace msw {

inline constexpr const char* kSpaceFileVersion = "msw-1";

/// Malformed space or matrix file. `where` is "line:column" for syntax errors
/// and a JSON pointer for content errors.
class FormatError : public Error {
public:
    FormatError(std::string where, const std::string& what)
        : Error(where + ": " + what), where_(std::move(where)) {}
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

/// {"version": "msw-1", "p": P, "rows": R, "cols": C, "basis": [matrix, ...]}.
/// Generators may be dependent; the result is canonicalized.
MatrixSpace parse_space(std::string_view text);

/// {"version": "msw-1", "p": P, "rows": R, "cols": C, "matrix": matrix}.
Matrix parse_matrix(std::string_view text);

/// Canonical serialization; parse_space(serialize_space(s)) == s and
/// serialize_space is a fixed point of parse-then-serialize.
std::string serialize_space(const MatrixSpace& s, int indent = 2);

/// Throws FormatError, prefixed with the path, on unreadable or malformed input.
MatrixSpace read_space_file(const std::filesystem::path& path);
Matrix read_matrix_file(const std::filesystem::path& path);
void write_space_file(const std::filesystem::path& path, const MatrixSpace& s, int indent = 2);

} // namespace msw
