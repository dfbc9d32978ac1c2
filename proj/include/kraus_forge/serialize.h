// Copyright 2026 The kraus-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KRAUS_FORGE_SERIALIZE_H
#define KRAUS_FORGE_SERIALIZE_H

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "kraus_forge/bloch.h"
#include "kraus_forge/kraus_pipeline.h"

namespace kraus_forge {

/// [[[re, im], [re, im]], [[re, im], [re, im]]].
nlohmann::json operator_to_json(const QubitOperator &op);
QubitOperator operator_from_json(const nlohmann::json &j);

/// {"kraus": [...], "weights": [...], "completeness_residual": r,
///  "choi_eigenvalues": [...] (when known)}.
nlohmann::json kraus_set_to_json(const KrausSet &kraus);
/// Inverse of kraus_set_to_json; throws InvalidParameter on malformed input.
KrausSet kraus_set_from_json(const nlohmann::json &j);

/// `%.12g`, the precision used for every CSV number.
std::string csv_number(double v);

/// Header `u,v,x,y,z` then one row per point.
void write_point_cloud_csv(std::ostream &out, const PointCloud &cloud);

void write_csv(std::ostream &out, const std::vector<std::string_view> &header,
               const std::vector<std::vector<double>> &rows);

}  // namespace kraus_forge

#endif
