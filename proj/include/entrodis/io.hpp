// Copyright 2026 The Entrodis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <json.hpp>

#include "entrodis/channel.hpp"
#include "entrodis/density.hpp"
#include "entrodis/functionals.hpp"

namespace entrodis {

// File formats, shared across the CLI and the sweep reports:
//   matrix            [[ [re, im], ... ], ...]   (list of rows)
//   density matrix    {"dim": n, "matrix": [...]}
//   instrument        {"din": n, "dout": m,
//                      "outcomes": [{"label": "k0", "kraus": [matrix, ...]}, ...]}
// A plain channel is an instrument with a single outcome.

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j, const std::string& context);

nlohmann::json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const nlohmann::json& j, const std::string& context);

nlohmann::json instrument_to_json(const Instrument& ins);
Instrument instrument_from_json(const nlohmann::json& j, const std::string& context);

nlohmann::json report_to_json(const TradeoffReport& r);

DensityMatrix load_density(const std::string& path);
Instrument load_instrument(const std::string& path);
nlohmann::json load_json(const std::string& path);
void save_text(const std::string& path, const std::string& text);

}  // namespace entrodis
