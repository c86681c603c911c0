#pragma once

#include <string>

namespace httplib {
class Server;
}

namespace rainbowlab::cli {

// Routes /api/* to puzzle::handle_api and answers CORS preflights.
void mount_puzzle_api(httplib::Server& server);

// Blocks until the server stops. Returns false if the address cannot be bound.
bool serve_puzzle(const std::string& host, int port);

}  // namespace rainbowlab::cli
