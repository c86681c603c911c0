#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rainbowlab::puzzle {

inline constexpr int kMinBoardLog = 1;
inline constexpr int kMaxBoardLog = 6;

// 2^k cells, each holding a pebble or not. k = 6 is the chessboard.
class Board {
 public:
  // Throws InvalidArgument for k outside 1..6, an index outside
  // 0..2^k-1, or a repeated index.
  Board(int k, std::span<const int> occupied);
  static Board from_mask(int k, std::uint64_t mask);

  int log_size() const { return k_; }
  int cell_count() const { return 1 << k_; }
  std::uint64_t mask() const { return mask_; }
  bool occupied(int cell) const { return (mask_ >> cell) & 1U; }
  std::vector<int> cells() const;  // sorted

  Board toggled(int cell) const;

  friend bool operator==(const Board&, const Board&) = default;

 private:
  Board(int k, std::uint64_t mask, bool);

  int k_ = 1;
  std::uint64_t mask_ = 0;
};

// XOR of the occupied cell indices. Toggling cell i changes the color by
// i, so the 2^k boards adjacent to any board carry all 2^k colors once
// each: a rainbow coloring of the 2^k-regular hypercube of boards.
int board_color(const Board& b);

struct FlipResult {
  int flip = 0;
  Board after;
};

// The first player toggles the cell board_color(b) XOR target, after
// which the board's color is target. Throws InvalidArgument for a target
// out of range.
FlipResult wise1_flip(const Board& b, int target);

int wise2_guess(const Board& b);

// The colors of the 2^k single-toggle neighbors of b are a permutation of
// 0..2^k-1.
bool neighborhood_is_rainbow(const Board& b);

// Transport-independent handling of the JSON API:
//   POST /api/color  {"k","board"}          -> {"color"}
//   POST /api/flip   {"k","board","target"} -> {"flip","board_after"}
//   POST /api/guess  {"k","board"}          -> {"guess"}
//   GET  /api/health                        -> {"ok": true}
// Invalid input yields 400 with {"error": message}; unknown routes 404,
// wrong methods 405.
struct ApiResponse {
  int status = 200;
  std::string body;
};

ApiResponse handle_api(std::string_view method, std::string_view path, std::string_view body);

}  // namespace rainbowlab::puzzle
