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

#include "entrodis/io.hpp"

#include <cmath>
#include <fstream>

#include "entrodis/errors.hpp"

namespace entrodis {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols; ++j)
      row.push_back(json::array({m.at(i, j).real(), m.at(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, const std::string& context) {
  if (!j.is_array() || j.empty())
    throw IoError(context + ": expected a non-empty list of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  ComplexMatrix m;
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.empty())
      throw IoError(context + "[" + std::to_string(i) + "]: expected a non-empty row");
    if (i == 0) {
      cols = row.size();
      m = ComplexMatrix(rows, cols);
    } else if (row.size() != cols) {
      throw IoError(context + "[" + std::to_string(i) + "]: row has " +
                    std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const json& e = row[c];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw IoError(context + "[" + std::to_string(i) + "][" + std::to_string(c) +
                      "]: expected [re, im]");
      m.at(i, c) = cplx{e[0].get<double>(), e[1].get<double>()};
    }
  }
  return m;
}

json density_to_json(const DensityMatrix& rho) {
  return json{{"dim", rho.dim()}, {"matrix", matrix_to_json(rho.matrix())}};
}

DensityMatrix density_from_json(const json& j, const std::string& context) {
  if (!j.is_object()) throw IoError(context + ": expected an object");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned())
    throw IoError(context + ".dim: expected a positive integer");
  if (!j.contains("matrix")) throw IoError(context + ".matrix: missing");
  const std::size_t dim = j["dim"].get<std::size_t>();
  ComplexMatrix m = matrix_from_json(j["matrix"], context + ".matrix");
  if (m.rows != dim || m.cols != dim)
    throw IoError(context + ".matrix: shape " + std::to_string(m.rows) + "x" +
                  std::to_string(m.cols) + " does not match dim " + std::to_string(dim));
  try {
    return DensityMatrix::from_matrix(std::move(m));
  } catch (const ValidationError& e) {
    throw IoError(context + ": " + e.what());
  }
}

json instrument_to_json(const Instrument& ins) {
  json outcomes = json::array();
  for (const Outcome& o : ins.outcomes()) {
    json kraus = json::array();
    for (std::size_t i : o.kraus_indices)
      kraus.push_back(matrix_to_json(ins.channel().kraus()[i]));
    outcomes.push_back(json{{"label", o.label}, {"kraus", std::move(kraus)}});
  }
  return json{{"din", ins.din()}, {"dout", ins.dout()}, {"outcomes", std::move(outcomes)}};
}

Instrument instrument_from_json(const json& j, const std::string& context) {
  if (!j.is_object()) throw IoError(context + ": expected an object");
  for (const char* key : {"din", "dout"})
    if (!j.contains(key) || !j[key].is_number_unsigned())
      throw IoError(context + "." + key + ": expected a positive integer");
  if (!j.contains("outcomes") || !j["outcomes"].is_array() || j["outcomes"].empty())
    throw IoError(context + ".outcomes: expected a non-empty list");
  const std::size_t din = j["din"].get<std::size_t>();
  const std::size_t dout = j["dout"].get<std::size_t>();

  std::vector<ComplexMatrix> kraus;
  std::vector<Outcome> outcomes;
  for (std::size_t o = 0; o < j["outcomes"].size(); ++o) {
    const json& jo = j["outcomes"][o];
    const std::string octx = context + ".outcomes[" + std::to_string(o) + "]";
    if (!jo.is_object() || !jo.contains("label") || !jo["label"].is_string())
      throw IoError(octx + ".label: expected a string");
    if (!jo.contains("kraus") || !jo["kraus"].is_array() || jo["kraus"].empty())
      throw IoError(octx + ".kraus: expected a non-empty list of matrices");
    Outcome outcome;
    outcome.label = jo["label"].get<std::string>();
    for (std::size_t i = 0; i < jo["kraus"].size(); ++i) {
      ComplexMatrix k = matrix_from_json(jo["kraus"][i], octx + ".kraus[" + std::to_string(i) + "]");
      if (k.rows != dout || k.cols != din)
        throw IoError(octx + ".kraus[" + std::to_string(i) + "]: shape " + std::to_string(k.rows) +
                      "x" + std::to_string(k.cols) + " does not match dout x din = " +
                      std::to_string(dout) + "x" + std::to_string(din));
      outcome.kraus_indices.push_back(kraus.size());
      kraus.push_back(std::move(k));
    }
    outcomes.push_back(std::move(outcome));
  }
  try {
    return Instrument::from_parts(Channel::from_kraus(std::move(kraus)), std::move(outcomes));
  } catch (const ValidationError& e) {
    throw IoError(context + ": " + e.what());
  }
}

namespace {
json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}
}  // namespace

json report_to_json(const TradeoffReport& r) {
  json j{
      {"s_rho", r.s_rho},
      {"s_out", r.s_out},
      {"s_exchange", r.s_exchange},
      {"i_coherent", r.i_coherent},
      {"disturbance", r.disturbance},
      {"mutual_info", r.mutual_info},
      {"holevo_rhs", r.holevo_rhs},
      {"normalized_i", r.normalized_i},
      {"normalized_d", r.normalized_d},
      {"fid_disturbance", finite_or_null(r.fid_disturbance)},
      {"ent_fid_disturbance", finite_or_null(r.ent_fid_disturbance)},
      {"dbar", finite_or_null(r.dbar)},
      {"slack", r.slack},
      {"metadata",
       {{"din", r.din}, {"dout", r.dout}, {"basis_convention", r.basis_convention}}},
  };
  if (r.seed) j["metadata"]["seed"] = *r.seed;
  return j;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path + ": cannot open file");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
  return j;
}

DensityMatrix load_density(const std::string& path) {
  return density_from_json(load_json(path), "state");
}

Instrument load_instrument(const std::string& path) {
  return instrument_from_json(load_json(path), "instrument");
}

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError(path + ": cannot open file for writing");
  out << text;
  if (!out) throw IoError(path + ": write failed");
}

}  // namespace entrodis
