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

#include "qskat/cli/http.h"

#include "httplib.h"

namespace qskat::cli {

namespace {

constexpr const char* kSessionPath = R"(/api/sessions/([0-9a-fA-F-]+))";

void Send(httplib::Response& res, const ApiResponse& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

}  // namespace

void MountRoutes(httplib::Server& server, SessionApi& api,
                 const std::string& allow_origin) {
  server.set_default_headers({
      {"Access-Control-Allow-Origin", allow_origin},
      {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"},
      {"Access-Control-Allow-Headers", "Content-Type"},
  });
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
  server.set_exception_handler(
      [](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
        std::string what = "internal error";
        try {
          std::rethrow_exception(ep);
        } catch (const std::exception& e) {
          what = e.what();
        } catch (...) {
        }
        Send(res, {500, {{"error", what}}});
      });

  server.Post("/api/sessions", [&api](const httplib::Request& req,
                                      httplib::Response& res) {
    Send(res, api.Create(req.body));
  });
  server.Get(kSessionPath, [&api](const httplib::Request& req,
                                  httplib::Response& res) {
    Send(res, api.Get(req.matches[1]));
  });
  server.Delete(kSessionPath, [&api](const httplib::Request& req,
                                     httplib::Response& res) {
    Send(res, api.Delete(req.matches[1]));
  });
  server.Post(std::string(kSessionPath) + "/play",
              [&api](const httplib::Request& req, httplib::Response& res) {
                Send(res, api.Play(req.matches[1], req.body));
              });
  server.Post(std::string(kSessionPath) + "/whatif",
              [&api](const httplib::Request& req, httplib::Response& res) {
                Send(res, api.WhatIf(req.matches[1], req.body));
              });
}

}  // namespace qskat::cli
