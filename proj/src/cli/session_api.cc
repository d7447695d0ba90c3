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

#include "qskat/cli/session_api.h"

#include <fstream>
#include <iostream>

#include <boost/uuid/uuid.hpp>
#include <boost/uuid/uuid_generators.hpp>
#include <boost/uuid/uuid_io.hpp>

#include "qskat/encoding/card.h"

namespace qskat::cli {

using encoding::Card;
using nlohmann::json;
using oracle::Played;

namespace {

ApiResponse Error(int status, const std::string& message) {
  return {status, {{"error", message}}};
}

json HistoryToJson(const std::vector<Played>& history) {
  json out = json::array();
  for (const auto& p : history) {
    out.push_back({{"seat", p.seat}, {"card", p.card.ToString()}});
  }
  return out;
}

std::vector<Played> HistoryFromJson(const json& j) {
  std::vector<Played> out;
  for (const auto& p : j) {
    out.push_back({p.at("seat").get<int>(), Card::Parse(p.at("card").get<std::string>())});
  }
  return out;
}

// Parses a JSON object body; nullopt when it is not one.
std::optional<json> ParseObject(const std::string& body) {
  json j = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  return j;
}

// The move extends the history when some consistent deal allows it.
bool Extends(const oracle::Scenario& scenario, const std::vector<Played>& history,
             const Played& move) {
  auto next = history;
  next.push_back(move);
  return !oracle::ConsistentDeals(scenario, next).empty();
}

// Parses the card of a move request; the error response on failure.
std::optional<ApiResponse> ParseCard(const json& body, Card& card) {
  if (!body.contains("card") || !body["card"].is_string()) {
    return Error(400, "body needs a card string");
  }
  try {
    card = Card::Parse(body["card"].get<std::string>());
  } catch (const std::exception& e) {
    return Error(422, std::string("illegal card: ") + e.what());
  }
  return std::nullopt;
}

}  // namespace

json SessionView(const std::string& id, const oracle::Scenario& scenario,
                 AdviceMode mode, const std::vector<Played>& history) {
  const auto report = oracle::EvaluatePosition(scenario, history);
  json j = oracle::ReportToJson(scenario, report);
  const auto card = Recommend(report, mode);
  if (card.empty()) {
    j.erase("recommended");
  } else {
    j["recommended"] = card;
  }
  j["id"] = id;
  j["mode"] = ToString(mode);
  j["scenario"] = scenario.ToJson();
  j["history"] = HistoryToJson(history);
  return j;
}

SessionApi::SessionApi(std::optional<std::filesystem::path> state_dir)
    : state_dir_(std::move(state_dir)) {
  if (state_dir_) {
    std::filesystem::create_directories(*state_dir_);
    LoadSnapshots();
  }
}

std::string SessionApi::NewId() {
  std::lock_guard lock(id_mu_);
  static boost::uuids::random_generator gen;
  return boost::uuids::to_string(gen());
}

std::shared_ptr<Session> SessionApi::Find(const std::string& id) const {
  std::shared_lock lock(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::size_t SessionApi::size() const {
  std::shared_lock lock(mu_);
  return sessions_.size();
}

void SessionApi::Snapshot(const Session& s) const {
  if (!state_dir_) return;
  const json j = {{"id", s.id},
                  {"mode", ToString(s.mode)},
                  {"scenario", s.scenario.ToJson()},
                  {"history", HistoryToJson(s.history)}};
  const auto path = *state_dir_ / (s.id + ".json");
  const auto tmp = *state_dir_ / (s.id + ".json.tmp");
  {
    std::ofstream out(tmp);
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void SessionApi::LoadSnapshots() {
  for (const auto& entry : std::filesystem::directory_iterator(*state_dir_)) {
    if (entry.path().extension() != ".json") continue;
    try {
      std::ifstream in(entry.path());
      const json j = json::parse(in);
      auto s = std::make_shared<Session>();
      s->id = j.at("id").get<std::string>();
      s->scenario = oracle::Scenario::FromJson(j.at("scenario"));
      s->mode = ParseAdviceMode(j.at("mode").get<std::string>());
      s->history = HistoryFromJson(j.at("history"));
      s->view = SessionView(s->id, s->scenario, s->mode, s->history);
      sessions_[s->id] = s;
    } catch (const std::exception& e) {
      std::cerr << "skipping snapshot " << entry.path() << ": " << e.what() << "\n";
    }
  }
}

ApiResponse SessionApi::Create(const std::string& body) {
  const auto j = ParseObject(body);
  if (!j) return Error(400, "body must be a JSON object");
  auto s = std::make_shared<Session>();
  try {
    const json& sc = j->contains("scenario") ? j->at("scenario") : *j;
    s->scenario = oracle::Scenario::FromJson(sc);
    if (j->contains("mode")) {
      s->mode = ParseAdviceMode(j->at("mode").get<std::string>());
    }
    s->id = NewId();
    s->view = SessionView(s->id, s->scenario, s->mode, {});
  } catch (const std::exception& e) {
    return Error(400, std::string("malformed scenario: ") + e.what());
  }
  Snapshot(*s);
  {
    std::unique_lock lock(mu_);
    sessions_[s->id] = s;
  }
  return {200, s->view};
}

ApiResponse SessionApi::Get(const std::string& id) {
  auto s = Find(id);
  if (!s) return Error(404, "unknown session");
  std::lock_guard lock(s->mu);
  return {200, s->view};
}

ApiResponse SessionApi::Play(const std::string& id, const std::string& body) {
  auto s = Find(id);
  if (!s) return Error(404, "unknown session");
  const auto j = ParseObject(body);
  if (!j) return Error(400, "body must be a JSON object");
  if (!j->contains("seat") || !j->at("seat").is_number_integer()) {
    return Error(400, "body needs an integer seat");
  }
  Card card;
  if (auto err = ParseCard(*j, card)) return *err;
  const Played move{j->at("seat").get<int>(), card};

  std::lock_guard lock(s->mu);
  if (s->view.at("terminal").get<bool>()) return Error(422, "the game is over");
  if (move.seat != s->view.at("to_move").get<int>()) {
    return Error(422, "seat " + std::to_string(move.seat) + " is not to move");
  }
  if (!Extends(s->scenario, s->history, move)) {
    return Error(422, card.ToString() + " is not a legal play here");
  }
  auto history = s->history;
  history.push_back(move);
  s->view = SessionView(s->id, s->scenario, s->mode, history);
  s->history = std::move(history);
  Snapshot(*s);
  return {200, s->view};
}

ApiResponse SessionApi::WhatIf(const std::string& id, const std::string& body) {
  auto s = Find(id);
  if (!s) return Error(404, "unknown session");
  const auto j = ParseObject(body);
  if (!j) return Error(400, "body must be a JSON object");
  Card card;
  if (auto err = ParseCard(*j, card)) return *err;

  std::lock_guard lock(s->mu);
  if (s->view.at("terminal").get<bool>()) return Error(422, "the game is over");
  const Played move{s->view.at("to_move").get<int>(), card};
  if (!Extends(s->scenario, s->history, move)) {
    return Error(422, card.ToString() + " is not a legal play here");
  }
  json out;
  out["card"] = card.ToString();
  out["seat"] = move.seat;
  if (move.seat == s->scenario.our_seat) {
    out["quality"] =
        oracle::QualityToJson(oracle::EvaluateCard(s->scenario, s->history, card));
  }
  auto history = s->history;
  history.push_back(move);
  out["projected"] = SessionView(s->id, s->scenario, s->mode, history);
  return {200, out};
}

ApiResponse SessionApi::Delete(const std::string& id) {
  std::shared_ptr<Session> s;
  {
    std::unique_lock lock(mu_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) return Error(404, "unknown session");
    s = it->second;
    sessions_.erase(it);
  }
  std::lock_guard lock(s->mu);  // let an in-flight request finish
  if (state_dir_) std::filesystem::remove(*state_dir_ / (id + ".json"));
  return {200, {{"deleted", id}}};
}

}  // namespace qskat::cli
