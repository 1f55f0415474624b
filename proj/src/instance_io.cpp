// Copyright 2026 The rpca-landscape Authors.
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

#include <bit>
#include <filesystem>
#include <fstream>
#include <vector>

#include <json.hpp>

#include "rpca/model.hpp"

namespace rpca {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

static_assert(std::endian::native == std::endian::little,
              "binary instance files are little-endian");

void WriteBytes(const std::string& path, const char* data, std::size_t size) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(data, static_cast<std::streamsize>(size));
  if (!out) throw IoError("write failed for '" + path + "'");
}

std::vector<char> ReadBytes(const std::string& path, std::size_t expected) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  in.seekg(0, std::ios::end);
  const auto size = static_cast<std::size_t>(in.tellg());
  if (size != expected) {
    throw IoError("'" + path + "' has " + std::to_string(size) +
                  " bytes, expected " + std::to_string(expected));
  }
  in.seekg(0);
  std::vector<char> buf(size);
  in.read(buf.data(), static_cast<std::streamsize>(size));
  if (!in) throw IoError("read failed for '" + path + "'");
  return buf;
}

template <typename T>
T Field(const json& meta, const char* key) {
  if (!meta.contains(key)) {
    throw IoError(std::string("meta.json is missing '") + key + "'");
  }
  try {
    return meta.at(key).get<T>();
  } catch (const json::exception& e) {
    throw IoError(std::string("meta.json field '") + key + "': " + e.what());
  }
}

}  // namespace

void WriteMatrixBin(const Matrix& a, const std::string& path) {
  WriteBytes(path, reinterpret_cast<const char*>(a.data()),
             static_cast<std::size_t>(a.size()) * sizeof(double));
}

Matrix ReadMatrixBin(const std::string& path, Index rows, Index cols) {
  Matrix a(rows, cols);
  const std::size_t bytes = static_cast<std::size_t>(a.size()) * sizeof(double);
  const std::vector<char> buf = ReadBytes(path, bytes);
  std::copy(buf.begin(), buf.end(), reinterpret_cast<char*>(a.data()));
  return a;
}

void SaveInstance(const Instance& inst, const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir + "': " + ec.message());
  const fs::path root(dir);

  WriteMatrixBin(inst.l, (root / "L.bin").string());
  WriteMatrixBin(inst.s, (root / "S.bin").string());
  WriteMatrixBin(inst.m, (root / "M.bin").string());
  WriteMatrixBin(inst.u, (root / "U.bin").string());
  WriteMatrixBin(inst.v, (root / "V.bin").string());
  WriteBytes((root / "sigma.bin").string(),
             reinterpret_cast<const char*>(inst.sigma.data()),
             static_cast<std::size_t>(inst.sigma.size()) * sizeof(double));
  std::vector<char> omega(static_cast<std::size_t>(inst.omega.size()));
  for (Index i = 0; i < inst.omega.size(); ++i) {
    omega[static_cast<std::size_t>(i)] = inst.omega.data()[i] ? 1 : 0;
  }
  WriteBytes((root / "omega.bin").string(), omega.data(), omega.size());

  json meta;
  meta["schema_version"] = kSchemaVersion;
  meta["m"] = inst.dims.m;
  meta["n"] = inst.dims.n;
  meta["r"] = inst.dims.r;
  meta["k"] = inst.dims.k;
  meta["p"] = inst.p;
  meta["mu"] = inst.mu;
  meta["seed"] = inst.seed;
  meta["scale"] = inst.scale;
  meta["magnitude"] = {{"model", inst.magnitude.Name()},
                       {"amplitude", inst.magnitude.amplitude}};
  meta["support_size"] = inst.SupportSize();
  meta["encoding"] = "float64 little-endian row-major; omega uint8";
  meta["files"] = {"L.bin", "S.bin",   "M.bin",   "U.bin",
                   "V.bin", "sigma.bin", "omega.bin"};
  std::ofstream out((root / "meta.json").string(), std::ios::trunc);
  if (!out) throw IoError("cannot write meta.json in '" + dir + "'");
  out << meta.dump(2) << "\n";
}

Instance LoadInstance(const std::string& dir) {
  const fs::path root(dir);
  std::ifstream in((root / "meta.json").string());
  if (!in) throw IoError("no meta.json in '" + dir + "'");
  json meta;
  try {
    in >> meta;
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed meta.json: ") + e.what());
  }
  const int version = Field<int>(meta, "schema_version");
  if (version != kSchemaVersion) {
    throw IoError("unsupported schema_version " + std::to_string(version));
  }

  Instance inst;
  inst.dims.m = Field<Index>(meta, "m");
  inst.dims.n = Field<Index>(meta, "n");
  inst.dims.r = Field<Index>(meta, "r");
  inst.dims.k = Field<Index>(meta, "k");
  try {
    inst.dims.Validate();
  } catch (const ArgumentError& e) {
    throw IoError(std::string("meta.json: ") + e.what());
  }
  inst.p = Field<double>(meta, "p");
  inst.mu = Field<double>(meta, "mu");
  inst.seed = Field<std::uint64_t>(meta, "seed");
  inst.scale = Field<double>(meta, "scale");
  const json mag = Field<json>(meta, "magnitude");
  try {
    inst.magnitude = MagnitudeModel::Parse(Field<std::string>(mag, "model"),
                                           Field<double>(mag, "amplitude"));
  } catch (const ArgumentError& e) {
    throw IoError(std::string("meta.json: ") + e.what());
  }

  const Index m = inst.dims.m, n = inst.dims.n, r = inst.dims.r;
  inst.l = ReadMatrixBin((root / "L.bin").string(), m, n);
  inst.s = ReadMatrixBin((root / "S.bin").string(), m, n);
  inst.m = ReadMatrixBin((root / "M.bin").string(), m, n);
  inst.u = ReadMatrixBin((root / "U.bin").string(), m, r);
  inst.v = ReadMatrixBin((root / "V.bin").string(), n, r);
  const Matrix sigma = ReadMatrixBin((root / "sigma.bin").string(), r, 1);
  inst.sigma = sigma.col(0);
  const std::vector<char> omega =
      ReadBytes((root / "omega.bin").string(), static_cast<std::size_t>(m * n));
  inst.omega.resize(m, n);
  for (Index i = 0; i < m * n; ++i) {
    inst.omega.data()[i] = omega[static_cast<std::size_t>(i)] != 0;
  }
  return inst;
}

}  // namespace rpca
