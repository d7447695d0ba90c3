// Copyright 2026 The QSkat Authors
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

// Advisor sessions. The HTTP layer maps routes onto these calls one to one,
// so tests can drive the API without a socket.

#ifndef QSKAT_CLI_SESSION_API_H_
#define QSKAT_CLI_SESSION_API_H_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "json.hpp"
#include "qskat/cli/experiments.h"
#include "qskat/oracle/scenario.h"

namespace qskat::cli {

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

struct Session {
  std::string id;
  oracle::Scenario scenario;
  AdviceMode mode = AdviceMode::kOracle;
  std::vector<oracle::Played> history;
  nlohmann::json view;  // cached report for the current history
  std::mutex mu;        // one request at a time per session
};

class SessionApi {
 public:
  // Sessions are snapshotted to `state_dir` as <id>.json when given, and
  // snapshots found there are loaded on construction.
  explicit SessionApi(std::optional<std::filesystem::path> state_dir = {});

  // Body: {"scenario": {...}, "mode": "oracle"} or a bare scenario.
  ApiResponse Create(const std::string& body);
  ApiResponse Get(const std::string& id);
  // Body: {"seat": 1, "card": "HA"}. The move must be legal in at least
  // one deal consistent with the history.
  ApiResponse Play(const std::string& id, const std::string& body);
  // Body: {"card": "HQ"}; played by the seat to move, nothing is committed.
  ApiResponse WhatIf(const std::string& id, const std::string& body);
  ApiResponse Delete(const std::string& id);

  std::size_t size() const;

 private:
  std::shared_ptr<Session> Find(const std::string& id) const;
  void Snapshot(const Session& session) const;
  void LoadSnapshots();
  std::string NewId();

  std::optional<std::filesystem::path> state_dir_;
  mutable std::shared_mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::mutex id_mu_;
};

// Session view for `history`: the oracle report with our seat's qualities,
// the history and the advice mode.
nlohmann::json SessionView(const std::string& id, const oracle::Scenario& scenario,
                           AdviceMode mode,
                           const std::vector<oracle::Played>& history);

}  // namespace qskat::cli

#endif  // QSKAT_CLI_SESSION_API_H_
