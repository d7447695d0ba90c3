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

#ifndef QSKAT_CLI_HTTP_H_
#define QSKAT_CLI_HTTP_H_

#include <string>

#include "qskat/cli/session_api.h"

namespace httplib {
class Server;
}

namespace qskat::cli {

// Registers the /api/sessions routes and CORS headers for `allow_origin`.
void MountRoutes(httplib::Server& server, SessionApi& api,
                 const std::string& allow_origin = "*");

}  // namespace qskat::cli

#endif  // QSKAT_CLI_HTTP_H_
