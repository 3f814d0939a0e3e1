#pragma once

#include <optional>
#include <string>

#include "p1p1/points.hpp"
#include "p1p1/vres.hpp"

namespace p1p1 {

/// Point-set file: {"field": "QQ" | {"Fp": p},
///                  "points": [[["a0","a1"],["b0","b1"]], ...]}.
/// A field override reinterprets the coordinate strings in that field.
std::string points_to_json(const PointSet& xs);
PointSet points_from_json(const std::string& text,
                          std::optional<Field> override_field = std::nullopt);

/// Complex file: {"modules": [[[a,b], ...], ...],
///                "maps": [[[poly, ...], ...], ...]} with maps[k] the
/// matrix of d_{k+1} in row-major order (rows = target basis), plus an
/// optional {"certificate": ...} block when one is supplied.
std::string complex_to_json(const FreeComplex& c, const VirtualCert* cert = nullptr);
FreeComplex complex_from_json(const std::string& text);

std::string cert_to_json(const VirtualCert& cert);

}  // namespace p1p1
