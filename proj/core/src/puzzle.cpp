#include "rainbowlab/puzzle.hpp"

#include <bit>
#include <nlohmann/json.hpp>

#include "rainbowlab/errors.hpp"

namespace rainbowlab::puzzle {

namespace {

void check_log_size(int k) {
  if (k < kMinBoardLog || k > kMaxBoardLog) {
    throw InvalidArgument("k must be in " + std::to_string(kMinBoardLog) + ".." +
                          std::to_string(kMaxBoardLog) + ", got " + std::to_string(k));
  }
}

void check_cell(int k, int cell, const char* what) {
  if (cell < 0 || cell >= (1 << k)) {
    throw InvalidArgument(std::string(what) + " " + std::to_string(cell) + " outside 0.." +
                          std::to_string((1 << k) - 1));
  }
}

}  // namespace

Board::Board(int k, std::uint64_t mask, bool) : k_(k), mask_(mask) {}

Board::Board(int k, std::span<const int> occupied) : k_(k) {
  check_log_size(k);
  for (int cell : occupied) {
    check_cell(k, cell, "cell");
    if (this->occupied(cell)) {
      throw InvalidArgument("cell " + std::to_string(cell) + " listed twice");
    }
    mask_ |= std::uint64_t{1} << cell;
  }
}

Board Board::from_mask(int k, std::uint64_t mask) {
  check_log_size(k);
  if (k < 6 && (mask >> (1 << k)) != 0) {
    throw InvalidArgument("mask has cells outside the board");
  }
  return Board(k, mask, true);
}

std::vector<int> Board::cells() const {
  std::vector<int> out;
  for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

Board Board::toggled(int cell) const {
  check_cell(k_, cell, "cell");
  return Board(k_, mask_ ^ (std::uint64_t{1} << cell), true);
}

int board_color(const Board& b) {
  int color = 0;
  for (std::uint64_t rest = b.mask(); rest != 0; rest &= rest - 1) {
    color ^= std::countr_zero(rest);
  }
  return color;
}

FlipResult wise1_flip(const Board& b, int target) {
  check_cell(b.log_size(), target, "target");
  const int flip = board_color(b) ^ target;
  return {flip, b.toggled(flip)};
}

int wise2_guess(const Board& b) { return board_color(b); }

bool neighborhood_is_rainbow(const Board& b) {
  std::uint64_t seen = 0;
  for (int cell = 0; cell < b.cell_count(); ++cell) {
    seen |= std::uint64_t{1} << board_color(b.toggled(cell));
  }
  return std::popcount(seen) == b.cell_count();
}

namespace {

using nlohmann::json;

ApiResponse reply(int status, const json& body) { return {status, body.dump()}; }

ApiResponse error(int status, const std::string& message) {
  return reply(status, json{{"error", message}});
}

int required_int(const json& request, const char* key) {
  if (!request.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
  const json& value = request.at(key);
  if (!value.is_number_integer()) {
    throw InvalidArgument(std::string("field '") + key + "' must be an integer");
  }
  const auto x = value.get<long long>();
  if (x < -(1LL << 30) || x > (1LL << 30)) {
    throw InvalidArgument(std::string("field '") + key + "' out of range");
  }
  return static_cast<int>(x);
}

Board board_of(const json& request) {
  const int k = required_int(request, "k");
  if (!request.contains("board") || !request.at("board").is_array()) {
    throw InvalidArgument("field 'board' must be an array of cell indices");
  }
  std::vector<int> cells;
  for (const json& cell : request.at("board")) {
    if (!cell.is_number_integer()) {
      throw InvalidArgument("board entries must be integers");
    }
    const auto x = cell.get<long long>();
    if (x < 0 || x >= 64) throw InvalidArgument("cell " + std::to_string(x) + " out of range");
    cells.push_back(static_cast<int>(x));
  }
  return Board(k, cells);
}

}  // namespace

ApiResponse handle_api(std::string_view method, std::string_view path, std::string_view body) {
  if (path == "/api/health") {
    if (method != "GET") return error(405, "use GET");
    return reply(200, json{{"ok", true}});
  }
  if (path != "/api/color" && path != "/api/flip" && path != "/api/guess") {
    return error(404, "no such endpoint");
  }
  if (method != "POST") return error(405, "use POST");

  json request;
  try {
    request = json::parse(body);
  } catch (const json::parse_error& e) {
    return error(400, std::string("malformed JSON: ") + e.what());
  }
  if (!request.is_object()) return error(400, "request body must be a JSON object");

  try {
    const Board board = board_of(request);
    if (path == "/api/color") {
      return reply(200, json{{"color", board_color(board)}});
    }
    if (path == "/api/flip") {
      const FlipResult result = wise1_flip(board, required_int(request, "target"));
      return reply(200, json{{"flip", result.flip}, {"board_after", result.after.cells()}});
    }
    return reply(200, json{{"guess", wise2_guess(board)}});
  } catch (const InvalidArgument& e) {
    return error(400, e.what());
  }
}

}  // namespace rainbowlab::puzzle
