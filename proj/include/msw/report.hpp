#pragma once

#include "msw/duality.hpp"
#include "msw/matrix_space.hpp"
#include "msw/primitivity.hpp"
#include "msw/recognition.hpp"
#include "msw/spectral.hpp"

#include <json.hpp>

namespace msw {

using json = nlohmann::json;

/// Version tag of the report documents emitted by the command-line tool.
inline constexpr const char* kReportSchema = "msw-report-1";

void to_json(json& j, const Matrix& m);
void to_json(json& j, const VectorSubspace& w);
/// Same layout as a space file: version, p, rows, cols, basis.
void to_json(json& j, const MatrixSpace& s);
void to_json(json& j, const RankProfile& r);

json report_json(const PrimitivityReport& r);
json report_json(const CompressionReport& r);
json report_json(const SpectralReport& r);
json report_json(const DualSpace& d, std::uint64_t cap);
json report_json(const CongruenceResult& r);
json report_json(const std::optional<Triangularization>& t);
json report_json(const EquivalenceVerdict& v);

} // namespace msw
