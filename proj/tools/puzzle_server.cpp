#include "puzzle_server.hpp"

#include <httplib.h>

#include "rainbowlab/puzzle.hpp"

namespace rainbowlab::cli {

namespace {

void forward(const httplib::Request& req, httplib::Response& res) {
  const puzzle::ApiResponse r = puzzle::handle_api(req.method, req.path, req.body);
  res.status = r.status;
  res.set_content(r.body, "application/json");
}

}  // namespace

void mount_puzzle_api(httplib::Server& server) {
  server.set_default_headers({
      {"Access-Control-Allow-Origin", "*"},
      {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
      {"Access-Control-Allow-Headers", "Content-Type"},
  });
  const char* pattern = R"(/api/.*)";
  server.Get(pattern, forward);
  server.Post(pattern, forward);
  server.Put(pattern, forward);
  server.Delete(pattern, forward);
  server.Options(pattern, [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

bool serve_puzzle(const std::string& host, int port) {
  httplib::Server server;
  mount_puzzle_api(server);
  return server.listen(host, port);
}

}  // namespace rainbowlab::cli
