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

// Command-line driver: gen, solve, certify, phase and landscape.

#ifndef RPCA_CLI_HPP_
#define RPCA_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include <boost/property_tree/ptree.hpp>

namespace rpca {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitNumeric = 3,
  kExitIo = 4,
};

// Sectioned key-value settings. Every valid key has a default; files and
// overrides may only touch existing keys.
class Config {
 public:
  static Config Defaults();

  // INI file. Throws IoError if unreadable, ArgumentError if malformed or if
  // it names unknown keys.
  void MergeFile(const std::string& path);
  // "section.key=value".
  void Set(const std::string& assignment);
  void Set(const std::string& key, const std::string& value);

  std::string GetString(const std::string& key) const;
  double GetDouble(const std::string& key) const;
  long long GetInt(const std::string& key) const;
  bool GetBool(const std::string& key) const;
  std::vector<double> GetDoubles(const std::string& key) const;

  const boost::property_tree::ptree& tree() const { return tree_; }

 private:
  boost::property_tree::ptree tree_;
};

// Runs the driver; returns one of ExitCode.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace rpca

#endif  // RPCA_CLI_HPP_
