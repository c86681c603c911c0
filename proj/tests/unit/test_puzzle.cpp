#include <nlohmann/json.hpp>

#include "doctest.h"
#include "rainbowlab/errors.hpp"
#include "rainbowlab/puzzle.hpp"

using namespace rainbowlab;
using namespace rainbowlab::puzzle;
using nlohmann::json;

namespace {

Board board(int k, std::vector<int> cells) { return Board(k, cells); }

}  // namespace

TEST_CASE("board_color") {
  CHECK(board_color(board(6, {})) == 0);
  CHECK(board_color(board(6, {37})) == 37);
  CHECK(board_color(board(6, {3, 5})) == 6);
}

TEST_CASE("wise1_flip") {
  FlipResult r = wise1_flip(board(6, {}), 5);
  CHECK(r.flip == 5);
  CHECK(r.after.cells() == std::vector<int>{5});

  r = wise1_flip(board(6, {3, 5}), 6);
  CHECK(r.flip == 0);
  CHECK(r.after.cells() == std::vector<int>{0, 3, 5});

  r = wise1_flip(board(6, {7}), 7);
  CHECK(r.flip == 0);
  CHECK(r.after.cells() == std::vector<int>{0, 7});

  CHECK_THROWS_AS(wise1_flip(board(3, {}), 8), InvalidArgument);
  CHECK_THROWS_AS(wise1_flip(board(3, {}), -1), InvalidArgument);
}

TEST_CASE("wise2_guess") {
  CHECK(wise2_guess(board(6, {5})) == 5);
  CHECK(wise2_guess(board(6, {0, 3, 5})) == 6);
  CHECK(wise2_guess(board(6, {})) == 0);
}

TEST_CASE("board validation") {
  CHECK_THROWS_AS(board(0, {}), InvalidArgument);
  CHECK_THROWS_AS(board(7, {}), InvalidArgument);
  CHECK_THROWS_AS(board(2, {4}), InvalidArgument);
  CHECK_THROWS_AS(board(2, {1, 1}), InvalidArgument);
  CHECK_THROWS_AS(Board::from_mask(2, 0x10), InvalidArgument);
  CHECK(board(6, {63}).occupied(63));
  CHECK(board(2, {3, 1}).cells() == std::vector<int>{1, 3});
}

TEST_CASE("strategy on every board with k <= 3") {
  for (int k = 1; k <= 3; ++k) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (1 << k)); ++mask) {
      const Board b = Board::from_mask(k, mask);
      REQUIRE(neighborhood_is_rainbow(b));
      for (int target = 0; target < (1 << k); ++target) {
        const FlipResult r = wise1_flip(b, target);
        REQUIRE(wise2_guess(r.after) == target);
        REQUIRE(std::popcount(b.mask() ^ r.after.mask()) == 1);
      }
    }
  }
}

TEST_CASE("API happy paths") {
  ApiResponse r = handle_api("POST", "/api/color", R"({"k":6,"board":[3,5]})");
  CHECK(r.status == 200);
  CHECK(json::parse(r.body) == json{{"color", 6}});

  r = handle_api("POST", "/api/flip", R"({"k":6,"board":[3,5],"target":6})");
  CHECK(r.status == 200);
  CHECK(json::parse(r.body) == json{{"flip", 0}, {"board_after", {0, 3, 5}}});

  r = handle_api("POST", "/api/guess", R"({"k":6,"board":[0,3,5]})");
  CHECK(r.status == 200);
  CHECK(json::parse(r.body) == json{{"guess", 6}});

  r = handle_api("GET", "/api/health", "");
  CHECK(r.status == 200);
  CHECK(json::parse(r.body) == json{{"ok", true}});

  r = handle_api("POST", "/api/color", R"({"k":4,"board":[9,2]})");
  CHECK(json::parse(r.body) == json{{"color", 11}});
}

TEST_CASE("API errors") {
  auto status_and_error = [](std::string_view method, std::string_view path, std::string_view body) {
    const ApiResponse r = handle_api(method, path, body);
    const json j = json::parse(r.body);
    CHECK(j.contains("error"));
    return r.status;
  };
  CHECK(status_and_error("POST", "/api/color", R"({"k":6,"board":[64]})") == 400);
  CHECK(status_and_error("POST", "/api/color", R"({"k":6,"board":[-1]})") == 400);
  CHECK(status_and_error("POST", "/api/color", R"({"k":7,"board":[]})") == 400);
  CHECK(status_and_error("POST", "/api/color", R"({"k":0,"board":[]})") == 400);
  CHECK(status_and_error("POST", "/api/color", R"({"board":[]})") == 400);
  CHECK(status_and_error("POST", "/api/color", R"({"k":"6","board":[]})") == 400);
  CHECK(status_and_error("POST", "/api/color", R"({"k":6,"board":[1,1]})") == 400);
  CHECK(status_and_error("POST", "/api/color", R"({"k":6,"board":"3"})") == 400);
  CHECK(status_and_error("POST", "/api/flip", R"({"k":6,"board":[]})") == 400);
  CHECK(status_and_error("POST", "/api/flip", R"({"k":2,"board":[],"target":4})") == 400);
  CHECK(status_and_error("POST", "/api/guess", "not json") == 400);
  CHECK(status_and_error("POST", "/api/guess", "[1,2]") == 400);
  CHECK(status_and_error("POST", "/api/nope", "{}") == 404);
  CHECK(status_and_error("GET", "/api/color", "") == 405);
  CHECK(status_and_error("POST", "/api/health", "") == 405);
}
