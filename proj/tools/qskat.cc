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

// qskat: experiments, golden numbers, recommendations and the advisor API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "httplib.h"
#include "json.hpp"
#include "qskat/cli/experiments.h"
#include "qskat/cli/http.h"
#include "qskat/cli/session_api.h"
#include "qskat/scoring/counting.h"

#ifndef QSKAT_DATA_DIR
#define QSKAT_DATA_DIR "data"
#endif

namespace {

using nlohmann::json;
namespace cli = qskat::cli;

struct Output {
  std::string format = "json";
  bool pretty = false;
  std::string out;
};

void AddOutputFlags(CLI::App* cmd, Output& o) {
  cmd->add_option("--format", o.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--pretty", o.pretty, "human-readable table");
  cmd->add_option("--out", o.out, "write to this file instead of stdout");
}

void Emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  f << text;
  if (!f) throw cli::CliError("cannot write " + path);
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

json ReadJsonFile(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw cli::CliError("cannot read " + path);
  return json::parse(f);
}

std::string QualityTable(const json& report) {
  std::ostringstream os;
  char line[160];
  std::snprintf(line, sizeof line, "%-6s %6s %6s %10s\n", "card", "Q", "deals",
                "p_win");
  os << line;
  for (const auto& q : report["qualities"]) {
    std::snprintf(line, sizeof line, "%-6s %6d %6d %10.4f\n",
                  q["card"].get<std::string>().c_str(), q["q_bar"].get<int>(),
                  q["deals_total"].get<int>(), q["p_win"].get<double>());
    os << line;
  }
  if (report.contains("recommended")) {
    os << "recommended: " << report["recommended"].get<std::string>() << "\n";
  }
  for (const auto& u : report["unbeatable"]) {
    os << "unbeatable: declarer holds";
    for (const auto& c : u["declarer"]) os << " " << c.get<std::string>();
    os << "\n";
  }
  return os.str();
}

std::string QualityCsv(const json& report) {
  std::ostringstream os;
  os << "card,q_bar,deals_total,p_win,winning_paths,all_paths\n";
  for (const auto& q : report["qualities"]) {
    os << q["card"].get<std::string>() << "," << q["q_bar"] << ","
       << q["deals_total"] << "," << q["p_win"] << ","
       << q["winning_paths"].get<std::string>() << ","
       << q["all_paths"].get<std::string>() << "\n";
  }
  return os.str();
}

int RunToy(const std::string& stage, long shots, long long seed, const Output& o) {
  const auto run = cli::RunToy(cli::ParseToyStage(stage));
  const auto hist = cli::ToyHistogram(run, shots, seed);
  json report = cli::ToyReport(run);
  if (o.format == "csv") {
    Emit(qskat::qsim::HistogramToCsv(hist), o.out);
    return 0;
  }
  if (!o.out.empty()) {
    Emit(qskat::qsim::HistogramToJson(hist) + "\n", o.out);
  } else {
    report["histogram"] = json::parse(qskat::qsim::HistogramToJson(hist));
  }
  if (o.pretty) {
    std::printf("stage %s: support %zu (full register %zu), norm %.12f\n",
                stage.c_str(), report["support"].get<std::size_t>(),
                report["full_support"].get<std::size_t>(),
                report["norm"].get<double>());
    for (const auto& s : report["states"]) {
      const auto label = s["label"].get<std::string>();
      std::printf("%s  p=%.12f  shots=%ld\n", label.c_str(),
                  s["probability"].get<double>(),
                  hist.counts.contains(label) ? hist.counts.at(label) : 0L);
    }
    if (report.contains("p_win")) {
      std::printf("p_win %.12f (favorable dimension %d)\n",
                  report["p_win"].get<double>(),
                  report["favorable_dimension"].get<int>());
    }
    return 0;
  }
  std::cout << Dump(report);
  return 0;
}

int RunDeals(const std::string& spec_path, const Output& o) {
  const json report = spec_path.empty()
                          ? cli::DealsReport()
                          : cli::DealsReport(qskat::encoding::DealSpec::FromJson(
                                ReadJsonFile(spec_path)));
  if (o.format == "csv" || o.pretty) {
    std::ostringstream os;
    if (report.contains("deals")) {
      os << "name,deals\nspec," << report["deals"].get<std::string>() << "\n";
    } else {
      os << "name,deals\n";
      for (const char* k : {"full", "known_hand", "toy"}) {
        os << k << "," << report[k].get<std::string>() << "\n";
      }
      for (const auto& r : report["reduced"]) {
        os << "reduced_" << r["cards_per_hand"] << ","
           << r["deals"].get<std::string>() << "\n";
        os << "reduced_known_" << r["cards_per_hand"] << ","
           << r["known_hand_deals"].get<std::string>() << "\n";
      }
    }
    std::string text = os.str();
    if (o.pretty) {
      for (char& c : text) c = c == ',' ? '\t' : c;
    }
    Emit(text, o.out);
    return 0;
  }
  Emit(Dump(report), o.out);
  return 0;
}

int RunQualityCommand(const json& report, const Output& o) {
  if (o.pretty) {
    Emit(QualityTable(report), o.out);
  } else if (o.format == "csv") {
    Emit(QualityCsv(report), o.out);
  } else {
    Emit(Dump(report), o.out);
  }
  return 0;
}

int Serve(const std::string& host, int port, const std::string& state_dir,
          const std::string& origin) {
  std::optional<std::filesystem::path> dir;
  if (!state_dir.empty()) dir = state_dir;
  cli::SessionApi api(dir);
  httplib::Server server;
  cli::MountRoutes(server, api, origin);
  if (!server.bind_to_port(host, port)) {
    throw cli::CliError("cannot bind " + host + ":" + std::to_string(port));
  }
  std::cerr << "serving on http://" << host << ":" << port << " (" << api.size()
            << " sessions restored)\n";
  server.listen_after_bind();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qskat: quantum-circuit and oracle analysis of Skat positions"};
  app.require_subcommand(1);

  Output o;
  std::string stage = "final";
  long shots = 1000;
  long long seed = 0;
  auto* toy = app.add_subcommand("toy", "four-card toy example");
  toy->add_option("--stage", stage, "initial, a-played, b-played, trick1, final");
  toy->add_option("--shots", shots, "measurement shots")->check(CLI::PositiveNumber);
  toy->add_option("--seed", seed, "sampling seed");
  AddOutputFlags(toy, o);

  std::string spec_path;
  auto* deals = app.add_subcommand("deals", "deal counts");
  deals->add_option("spec", spec_path, "DealSpec JSON file (default: golden table)");
  AddOutputFlags(deals, o);

  std::string scenario_path = QSKAT_DATA_DIR "/showcase.json";
  auto* showcase = app.add_subcommand("showcase", "nine-card showcase");
  showcase->add_option("--scenario", scenario_path, "scenario JSON file");
  AddOutputFlags(showcase, o);

  int t = 7;
  auto* qcount = app.add_subcommand("qcount", "quantum counting demonstrator");
  qcount->add_option("--t", t, "counting qubits")
      ->check(CLI::Range(1, qskat::scoring::kMaxCountingQubits));
  AddOutputFlags(qcount, o);

  bool sf = false;
  int points = 101;
  auto* payoff = app.add_subcommand("payoff", "payoff curves per game choice");
  payoff->add_flag("--sf", sf, "Seeger-Fabian scoring");
  payoff->add_option("--points", points, "grid points")->check(CLI::Range(2, 100000));
  AddOutputFlags(payoff, o);

  std::string mode = "oracle";
  std::string recommend_path;
  auto* recommend = app.add_subcommand("recommend", "card recommendation");
  recommend->add_option("scenario", recommend_path, "scenario JSON file")->required();
  recommend->add_option("--mode", mode, "oracle or hybrid-legal");
  AddOutputFlags(recommend, o);

  int min_cards = 1, max_cards = 5, samples = 20;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "oracle solve time per deck size");
  bench->add_option("--min", min_cards, "smallest cards per hand");
  bench->add_option("--max", max_cards, "largest cards per hand");
  bench->add_option("--samples", samples, "random deals per size");
  bench->add_option("--seed", bench_seed, "deal sampling seed");
  Output bench_out{.format = "csv"};
  AddOutputFlags(bench, bench_out);

  std::string host = "127.0.0.1", state_dir, origin = "*";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "advisor HTTP service");
  serve->add_option("--port", port, "listen port")->check(CLI::Range(1, 65535));
  serve->add_option("--host", host, "listen address");
  serve->add_option("--state-dir", state_dir, "directory for session snapshots");
  serve->add_option("--allow-origin", origin, "CORS origin for the UI");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*toy) return RunToy(stage, shots, seed, o);
    if (*deals) return RunDeals(spec_path, o);
    if (*showcase) {
      const auto sc = qskat::oracle::Scenario::FromJson(ReadJsonFile(scenario_path));
      return RunQualityCommand(cli::ShowcaseReport(sc), o);
    }
    if (*recommend) {
      const auto sc = qskat::oracle::Scenario::FromJson(ReadJsonFile(recommend_path));
      return RunQualityCommand(cli::RecommendReport(sc, cli::ParseAdviceMode(mode)), o);
    }
    if (*qcount) {
      const json r = cli::QcountReport(t);
      if (o.format == "csv" || o.pretty) {
        std::ostringstream os;
        os << "t,outcome,estimate,abs_error,error_bound\n"
           << r["t"] << "," << r["outcome"] << "," << r["estimate"] << ","
           << r["abs_error"] << "," << r["error_bound"] << "\n";
        Emit(os.str(), o.out);
      } else {
        Emit(Dump(r), o.out);
      }
      return 0;
    }
    if (*payoff) {
      Emit(o.format == "csv" ? cli::PayoffCsv(sf, points) : Dump(cli::PayoffReport(sf, points)),
           o.out);
      return 0;
    }
    if (*bench) {
      const auto rows = cli::RunBench(min_cards, max_cards, samples, bench_seed);
      Emit(bench_out.format == "csv" ? cli::BenchToCsv(rows) : Dump(cli::BenchToJson(rows)),
           bench_out.out);
      return 0;
    }
    if (*serve) return Serve(host, port, state_dir, origin);
  } catch (const std::exception& e) {
    std::cerr << "qskat: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
