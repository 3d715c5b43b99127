#include "msw/space_file.hpp"

#include "msw/report.hpp"

#include <fstream>
#include <sstream>

namespace msw {

namespace {

std::string position(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return std::to_string(line) + ":" + std::to_string(column);
}

json parse_document(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // nlohmann reports the byte just past the offending token
        throw FormatError(position(text, e.byte == 0 ? 0 : e.byte - 1), "invalid JSON");
    }
}

const json& member(const json& doc, const char* key) {
    if (!doc.is_object()) throw FormatError("/", "expected an object");
    const auto it = doc.find(key);
    if (it == doc.end()) throw FormatError("/", std::string("missing \"") + key + "\"");
    return *it;
}

std::uint64_t natural(const json& doc, const char* key) {
    const json& v = member(doc, key);
    if (!v.is_number_unsigned()) throw FormatError(std::string("/") + key, "expected a non-negative integer");
    return v.get<std::uint64_t>();
}

Field field_of(const json& doc) {
    const json& version = member(doc, "version");
    if (!version.is_string() || version.get<std::string>() != kSpaceFileVersion)
        throw FormatError("/version", std::string("expected \"") + kSpaceFileVersion + "\"");
    const std::uint64_t p = natural(doc, "p");
    if (p > Field::kMaxModulus || !is_prime(static_cast<std::uint32_t>(p)))
        throw FormatError("/p", std::to_string(p) + " is not a supported prime");
    return Field(static_cast<std::uint32_t>(p));
}

Matrix matrix_of(const json& m, Field f, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!m.is_array() || m.size() != rows)
        throw FormatError(where, "expected " + std::to_string(rows) + " rows");
    Matrix out(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = m[i];
        const std::string row_where = where + "/" + std::to_string(i);
        if (!row.is_array() || row.size() != cols)
            throw FormatError(row_where, "expected " + std::to_string(cols) + " entries");
        for (std::size_t j = 0; j < cols; ++j) {
            const json& e = row[j];
            if (!e.is_number_integer() || e.get<std::int64_t>() < 0 || e.get<std::int64_t>() >= f.p())
                throw FormatError(row_where + "/" + std::to_string(j),
                                  "entry " + e.dump() + " is not in [0, " + std::to_string(f.p()) + ")");
            out(i, j) = static_cast<Scalar>(e.get<std::int64_t>());
        }
    }
    return out;
}

std::pair<std::size_t, std::size_t> shape_of(const json& doc) {
    const auto rows = natural(doc, "rows"), cols = natural(doc, "cols");
    if (rows == 0 || cols == 0) throw FormatError("/rows", "dimensions must be positive");
    if (rows * cols > 4096) throw FormatError("/rows", "matrices larger than 4096 entries are not supported");
    return {rows, cols};
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError(path.string(), "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <class Parse>
auto with_path(const std::filesystem::path& path, Parse parse) {
    const std::string text = slurp(path);
    try {
        return parse(text);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ":" + e.where(), std::string(e.what()).substr(e.where().size() + 2));
    }
}

} // namespace

MatrixSpace parse_space(std::string_view text) {
    const json doc = parse_document(text);
    const Field f = field_of(doc);
    const auto [rows, cols] = shape_of(doc);
    const json& basis = member(doc, "basis");
    if (!basis.is_array()) throw FormatError("/basis", "expected a list of matrices");
    std::vector<Matrix> gens;
    for (std::size_t k = 0; k < basis.size(); ++k)
        gens.push_back(matrix_of(basis[k], f, rows, cols, "/basis/" + std::to_string(k)));
    return MatrixSpace::span(f, rows, cols, gens);
}

Matrix parse_matrix(std::string_view text) {
    const json doc = parse_document(text);
    const Field f = field_of(doc);
    const auto [rows, cols] = shape_of(doc);
    return matrix_of(member(doc, "matrix"), f, rows, cols, "/matrix");
}

std::string serialize_space(const MatrixSpace& s, int indent) {
    return json(s).dump(indent) + "\n";
}

MatrixSpace read_space_file(const std::filesystem::path& path) {
    return with_path(path, [](const std::string& t) { return parse_space(t); });
}

Matrix read_matrix_file(const std::filesystem::path& path) {
    return with_path(path, [](const std::string& t) { return parse_matrix(t); });
}

void write_space_file(const std::filesystem::path& path, const MatrixSpace& s, int indent) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError(path.string(), "cannot open file for writing");
    out << serialize_space(s, indent);
    if (!out) throw FormatError(path.string(), "write failed");
}

} // namespace msw
