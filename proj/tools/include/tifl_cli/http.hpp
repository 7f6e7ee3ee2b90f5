#pragma once

#include <httplib.h>

#include <tifl/api.hpp>

namespace tifl::cli {

/// Routes /api/v1/* on `server` to `api`, with CORS headers and OPTIONS preflight.
/// `api` must outlive the server.
void mount_api(httplib::Server& server, const ApiService& api);

}  // namespace tifl::cli
