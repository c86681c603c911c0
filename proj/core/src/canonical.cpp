#include "rainbowlab/canonical.hpp"

#include <array>
#include <string>

#include "rainbowlab/errors.hpp"

namespace rainbowlab {

namespace {

constexpr int kSlots = Graph::kMaxVertices + 1;

// Branch-and-bound for the lexicographically least column sequence.
// column[j] holds the adjacencies of the vertex at position j to positions
// 0..j-1, with position 0 in the most significant bit; comparing these
// integers position by position is comparing graph6 strings.
class LexMinSearch {
 public:
  // With stop_when_beaten set, the search only decides whether the seeded
  // bound can be improved.
  LexMinSearch(const Graph& g, bool stop_when_beaten)
      : g_(g), n_(g.order()), stop_when_beaten_(stop_when_beaten) {}

  // Full search; returns order[pos] = vertex.
  std::array<int, kSlots> run() {
    search(0, all_vertices(), State::Less);
    return best_order_;
  }

  // Seeds the bound with the identity labeling and stops as soon as any
  // labeling beats it.
  bool identity_is_least() {
    for (int j = 0; j < n_; ++j) {
      best_[j] = column_of(j, j, identity_order());
    }
    have_best_ = true;
    beaten_ = false;
    search(0, all_vertices(), State::Equal);
    return !beaten_;
  }

 private:
  enum class State { Equal, Less };

  VertexMask all_vertices() const {
    return n_ == 0 ? 0 : (n_ >= 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1);
  }

  static std::array<int, kSlots> identity_order() {
    std::array<int, kSlots> order{};
    for (int i = 0; i < kSlots; ++i) order[i] = i;
    return order;
  }

  std::uint64_t column_of(int v, int pos, const std::array<int, kSlots>& order) const {
    std::uint64_t col = 0;
    const VertexMask nbrs = g_.neighbors(v);
    for (int i = 0; i < pos; ++i) {
      col = (col << 1) | ((nbrs >> order[i]) & 1U);
    }
    return col;
  }

  bool twins(int u, int v) const {
    const VertexMask outside = ~(vertex_bit(u) | vertex_bit(v));
    return ((g_.neighbors(u) ^ g_.neighbors(v)) & outside) == 0;
  }

  void search(int pos, VertexMask remaining, State state) {
    if (beaten_) return;
    if (pos == n_) {
      if (!have_best_ || state == State::Less) {
        best_ = current_;
        best_order_ = order_;
        have_best_ = true;
        ++version_;
      }
      return;
    }

    std::array<std::uint64_t, kSlots> cols{};
    std::uint64_t least = ~std::uint64_t{0};
    for (VertexMask rest = remaining; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      cols[v] = column_of(v, pos, order_);
      if (cols[v] < least) least = cols[v];
    }

    if (have_best_ && state == State::Equal) {
      if (least > best_[pos]) return;
      if (least < best_[pos]) {
        if (stop_when_beaten_) {
          beaten_ = true;
          return;
        }
        state = State::Less;
      }
    }

    std::array<int, kSlots> tried{};
    int tried_count = 0;
    for (VertexMask rest = remaining; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (cols[v] != least) continue;
      bool redundant = false;
      for (int t = 0; t < tried_count && !redundant; ++t) {
        redundant = twins(tried[t], v);
      }
      if (redundant) continue;

      order_[pos] = v;
      current_[pos] = least;
      const std::uint64_t before = version_;
      search(pos + 1, remaining & ~vertex_bit(v), state);
      if (beaten_) return;
      // A new best was found below this node, so it shares our prefix.
      if (version_ != before) state = State::Equal;
      tried[tried_count++] = v;
    }
  }

  const Graph& g_;
  int n_;
  bool stop_when_beaten_;
  std::array<int, kSlots> order_{};
  std::array<std::uint64_t, kSlots> current_{};
  std::array<std::uint64_t, kSlots> best_{};
  std::array<int, kSlots> best_order_{};
  bool have_best_ = false;
  bool beaten_ = false;
  std::uint64_t version_ = 0;
};

void check_cap(const Graph& g, int cap) {
  if (g.order() > cap) {
    throw CapExceeded("canonical form: order " + std::to_string(g.order()) +
                      " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, int cap) {
  check_cap(g, cap);
  LexMinSearch search(g, false);
  const auto order = search.run();
  CanonicalLabeling out;
  out.new_label.resize(static_cast<std::size_t>(g.order()));
  for (int pos = 0; pos < g.order(); ++pos) out.new_label[order[pos]] = pos;
  out.graph = g.relabeled(out.new_label);
  return out;
}

Graph canonical_form(const Graph& g, int cap) { return canonical_labeling(g, cap).graph; }

bool is_canonical(const Graph& g, int cap) {
  check_cap(g, cap);
  LexMinSearch search(g, true);
  return search.identity_is_least();
}

bool are_isomorphic(const Graph& g, const Graph& h, int cap) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g, cap) == canonical_form(h, cap);
}

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h, int cap) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  const CanonicalLabeling cg = canonical_labeling(g, cap);
  const CanonicalLabeling ch = canonical_labeling(h, cap);
  if (cg.graph != ch.graph) return std::nullopt;
  // g --cg--> canonical <--ch-- h
  const std::vector<int> from_canonical = inverse_permutation(ch.new_label);
  std::vector<int> map(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) map[v] = from_canonical[cg.new_label[v]];
  return map;
}

}  // namespace rainbowlab
