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

#include "kraus_forge/serialize.h"

#include <fmt/format.h>

#include <ostream>

#include "kraus_forge/error.h"

namespace kraus_forge {

using nlohmann::json;

json operator_to_json(const QubitOperator &op) {
    json rows = json::array();
    for (std::size_t r = 0; r < 2; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < 2; ++c) {
            row.push_back({op(r, c).real(), op(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

QubitOperator operator_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2) {
        throw Error(ErrorCode::InvalidParameter, "operator must be a 2x2 array");
    }
    QubitOperator op{};
    try {
        for (std::size_t r = 0; r < 2; ++r) {
            if (!j[r].is_array() || j[r].size() != 2) {
                throw Error(ErrorCode::InvalidParameter, "operator row must have 2 entries");
            }
            for (std::size_t c = 0; c < 2; ++c) {
                const json &e = j[r][c];
                if (!e.is_array() || e.size() != 2) {
                    throw Error(ErrorCode::InvalidParameter, "entry must be [re, im]");
                }
                op(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
            }
        }
    } catch (const json::exception &e) {
        throw Error(ErrorCode::InvalidParameter, e.what());
    }
    return op;
}

json kraus_set_to_json(const KrausSet &kraus) {
    json ops = json::array();
    for (const auto &e : kraus.operators()) {
        ops.push_back(operator_to_json(e));
    }
    json out;
    out["kraus"] = std::move(ops);
    out["weights"] = kraus.weights();
    out["completeness_residual"] = kraus.completeness_residual();
    if (kraus.choi_eigenvalues()) {
        out["choi_eigenvalues"] = *kraus.choi_eigenvalues();
    }
    return out;
}

KrausSet kraus_set_from_json(const json &j) {
    if (!j.is_object() || !j.contains("kraus") || !j.at("kraus").is_array()) {
        throw Error(ErrorCode::InvalidParameter, "Kraus document needs a \"kraus\" array");
    }
    std::vector<QubitOperator> ops;
    for (const auto &e : j.at("kraus")) {
        ops.push_back(operator_from_json(e));
    }
    std::vector<double> weights;
    try {
        if (j.contains("weights")) {
            weights = j.at("weights").get<std::vector<double>>();
        }
        KrausSet out(std::move(ops), std::move(weights));
        if (j.contains("choi_eigenvalues")) {
            out.set_choi_eigenvalues(j.at("choi_eigenvalues").get<std::array<double, 4>>());
        }
        return out;
    } catch (const json::exception &e) {
        throw Error(ErrorCode::InvalidParameter, e.what());
    }
}

std::string csv_number(double v) {
    return fmt::format("{:.12g}", v);
}

void write_point_cloud_csv(std::ostream &out, const PointCloud &cloud) {
    out << "u,v,x,y,z\n";
    for (std::size_t k = 0; k < cloud.size(); ++k) {
        out << csv_number(cloud.u[k]) << ',' << csv_number(cloud.v[k]) << ','
            << csv_number(cloud.x[k]) << ',' << csv_number(cloud.y[k]) << ','
            << csv_number(cloud.z[k]) << '\n';
    }
}

void write_csv(std::ostream &out, const std::vector<std::string_view> &header,
               const std::vector<std::vector<double>> &rows) {
    for (std::size_t k = 0; k < header.size(); ++k) {
        out << (k ? "," : "") << header[k];
    }
    out << '\n';
    for (const auto &row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            out << (k ? "," : "") << csv_number(row[k]);
        }
        out << '\n';
    }
}

}  // namespace kraus_forge
