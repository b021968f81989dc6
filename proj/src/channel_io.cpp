// Copyright 2026 The eawmr Authors
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

#include "eawmr/channel_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace eawmr {

std::string format_full_precision(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string channel_to_json(const KrausChannel& ch) {
  std::ostringstream out;
  out << "{\"dim\": " << ch.dim() << ", \"ops\": [";
  for (int n = 0; n < ch.size(); ++n) {
    if (n > 0) out << ", ";
    out << "[";
    const Matrix& k = ch.op(n);
    for (int i = 0; i < k.rows(); ++i)
      for (int j = 0; j < k.cols(); ++j) {
        if (i != 0 || j != 0) out << ", ";
        out << "[" << format_full_precision(k(i, j).real()) << ", "
            << format_full_precision(k(i, j).imag()) << "]";
      }
    out << "]";
  }
  out << "]}";
  return out.str();
}

KrausChannel channel_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed channel JSON: ") +
                                e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("ops"))
    throw std::invalid_argument(
        "malformed channel JSON: expected object with \"dim\" and \"ops\"");
  if (!doc["dim"].is_number_integer() || doc["dim"].get<int>() <= 0)
    throw std::invalid_argument(
        "malformed channel JSON: \"dim\" must be a positive integer");
  const int dim = doc["dim"].get<int>();
  if (!doc["ops"].is_array() || doc["ops"].empty())
    throw std::invalid_argument(
        "malformed channel JSON: \"ops\" must be a non-empty array");

  std::vector<Matrix> ops;
  ops.reserve(doc["ops"].size());
  for (const auto& op : doc["ops"]) {
    if (!op.is_array() || op.size() != static_cast<size_t>(dim) * dim)
      throw std::invalid_argument(
          "malformed channel JSON: operator must list dim*dim entries");
    Matrix k(dim, dim);
    int idx = 0;
    for (const auto& entry : op) {
      if (!entry.is_array() || entry.size() != 2 ||
          !entry[0].is_number() || !entry[1].is_number())
        throw std::invalid_argument(
            "malformed channel JSON: entry must be a [re, im] pair");
      k(idx / dim, idx % dim) =
          Complex{entry[0].get<double>(), entry[1].get<double>()};
      ++idx;
    }
    if (!is_finite(k))
      throw std::invalid_argument(
          "malformed channel JSON: non-finite operator entry");
    ops.push_back(std::move(k));
  }
  return KrausChannel(dim, std::move(ops));
}

KrausChannel load_channel(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open channel file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return channel_from_json(buf.str());
}

void save_channel(const KrausChannel& ch, const std::string& path) {
  std::ofstream out(path);
  if (!out)
    throw std::invalid_argument("cannot write channel file: " + path);
  out << channel_to_json(ch) << "\n";
}

}  // namespace eawmr
