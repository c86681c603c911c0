#include "rainbowlab/signed_matrix.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <string>

#include "rainbowlab/bijection.hpp"
#include "rainbowlab/errors.hpp"

namespace rainbowlab {

SignedMatrix::SignedMatrix(int m) : m_(m), entries_(static_cast<std::size_t>(m) * m, 0) {
  if (m < 0) throw InvalidArgument("negative matrix order");
}

SignedMatrix SignedMatrix::from_doubled(const std::vector<std::vector<int>>& rows) {
  SignedMatrix out(static_cast<int>(rows.size()));
  for (int i = 0; i < out.m_; ++i) {
    if (static_cast<int>(rows[i].size()) != out.m_) {
      throw InvalidArgument("matrix row " + std::to_string(i) + " has wrong length");
    }
    for (int j = 0; j < out.m_; ++j) out.set_doubled(i, j, rows[i][j]);
  }
  return out;
}

SignedMatrix SignedMatrix::from_integers(const std::vector<std::vector<int>>& rows) {
  SignedMatrix out = from_doubled(rows);
  for (int& x : out.entries_) x *= 2;
  return out;
}

SignedMatrix SignedMatrix::from_seidel(const SeidelMatrix& a) { return from_integers(a.rows()); }

SignedMatrix SignedMatrix::identity(int m) {
  SignedMatrix out(m);
  for (int i = 0; i < m; ++i) out.set_doubled(i, i, 2);
  return out;
}

SignedMatrix SignedMatrix::permutation(std::span<const int> image) {
  check_permutation(image, static_cast<int>(image.size()));
  SignedMatrix out(static_cast<int>(image.size()));
  for (int j = 0; j < out.m_; ++j) out.set_doubled(image[j], j, 2);
  return out;
}

int SignedMatrix::integer_at(int i, int j) const {
  const int d = doubled(i, j);
  if (d % 2 != 0) {
    throw InvalidArgument("entry (" + std::to_string(i) + "," + std::to_string(j) +
                          ") is not an integer");
  }
  return d / 2;
}

bool SignedMatrix::is_integral() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int d) { return d % 2 == 0; });
}

bool SignedMatrix::within_unit_range() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int d) { return d >= -2 && d <= 2; });
}

std::vector<std::vector<int>> SignedMatrix::doubled_rows() const {
  std::vector<std::vector<int>> out(m_, std::vector<int>(m_));
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) out[i][j] = doubled(i, j);
  }
  return out;
}

SignedMatrix SignedMatrix::transposed() const {
  SignedMatrix out(m_);
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) out.set_doubled(j, i, doubled(i, j));
  }
  return out;
}

SignedMatrix SignedMatrix::block(int row, int col, int size) const {
  if (row < 0 || col < 0 || size < 0 || row + size > m_ || col + size > m_) {
    throw InvalidArgument("block out of range");
  }
  SignedMatrix out(size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) out.set_doubled(i, j, doubled(row + i, col + j));
  }
  return out;
}

SignedMatrix SignedMatrix::operator-() const {
  SignedMatrix out = *this;
  for (int& x : out.entries_) x = -x;
  return out;
}

namespace {

void check_same_order(const SignedMatrix& a, const SignedMatrix& b) {
  if (a.order() != b.order()) {
    throw InvalidArgument("matrix orders " + std::to_string(a.order()) + " and " +
                          std::to_string(b.order()) + " differ");
  }
}

}  // namespace

SignedMatrix operator+(const SignedMatrix& a, const SignedMatrix& b) {
  check_same_order(a, b);
  SignedMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

SignedMatrix operator-(const SignedMatrix& a, const SignedMatrix& b) { return a + (-b); }

SignedMatrix operator*(const SignedMatrix& a, const SignedMatrix& b) {
  check_same_order(a, b);
  const int m = a.order();
  SignedMatrix out(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      // (a/2)(b/2) summed is a quarter-integer; its double must be an integer.
      long long quarters = 0;
      for (int l = 0; l < m; ++l) {
        quarters += static_cast<long long>(a.doubled(i, l)) * b.doubled(l, j);
      }
      if (quarters % 2 != 0) {
        throw InternalCheckFailed("matrix product leaves the half-integers");
      }
      out.set_doubled(i, j, static_cast<int>(quarters / 2));
    }
  }
  return out;
}

namespace {

struct LinePattern {
  int units = 0;   // entries equal to +-1
  int halves = 0;  // entries equal to +-1/2
  int other = 0;   // any other nonzero value
};

LinePattern row_pattern(const SignedMatrix& s, int i) {
  LinePattern p;
  for (int j = 0; j < s.order(); ++j) {
    const int d = std::abs(s.doubled(i, j));
    if (d == 2) ++p.units;
    else if (d == 1) ++p.halves;
    else if (d != 0) ++p.other;
  }
  return p;
}

LinePattern column_pattern(const SignedMatrix& s, int j) {
  LinePattern p;
  for (int i = 0; i < s.order(); ++i) {
    const int d = std::abs(s.doubled(i, j));
    if (d == 2) ++p.units;
    else if (d == 1) ++p.halves;
    else if (d != 0) ++p.other;
  }
  return p;
}

bool single_unit(const LinePattern& p) { return p.units == 1 && p.halves == 0 && p.other == 0; }
bool two_halves(const LinePattern& p) { return p.units == 0 && p.halves == 2 && p.other == 0; }

}  // namespace

bool is_permutation_matrix(const SignedMatrix& p) {
  for (int i = 0; i < p.order(); ++i) {
    for (int j = 0; j < p.order(); ++j) {
      if (p.doubled(i, j) != 0 && p.doubled(i, j) != 2) return false;
    }
  }
  return is_signed_permutation(p);
}

bool is_signed_permutation(const SignedMatrix& q) {
  for (int i = 0; i < q.order(); ++i) {
    if (!single_unit(row_pattern(q, i)) || !single_unit(column_pattern(q, i))) return false;
  }
  return true;
}

bool is_signed_half_permutation(const SignedMatrix& s) {
  for (int i = 0; i < s.order(); ++i) {
    const LinePattern r = row_pattern(s, i);
    const LinePattern c = column_pattern(s, i);
    if (!(single_unit(r) || two_halves(r)) || !(single_unit(c) || two_halves(c))) return false;
  }
  return true;
}

SignedPermutation::SignedPermutation(SignedMatrix q) : q_(std::move(q)) {
  if (!is_signed_permutation(q_)) {
    throw InvalidArgument("not a signed permutation matrix");
  }
}

SignedHalfPermutation::SignedHalfPermutation(SignedMatrix s) : s_(std::move(s)) {
  if (!is_signed_half_permutation(s_)) {
    throw InvalidArgument("not a signed half-permutation matrix");
  }
}

PermutationBlocks blocks_of_permutation(const SignedMatrix& p) {
  if (p.order() % 2 != 0) {
    throw InvalidArgument("permutation matrix has odd order " + std::to_string(p.order()));
  }
  if (!is_permutation_matrix(p)) {
    throw InvalidArgument("not a permutation matrix");
  }
  const int n = p.order() / 2;
  return {p.block(0, 0, n), p.block(0, n, n), p.block(n, 0, n), p.block(n, n, n)};
}

bool satisfies_block_identities(const PermutationBlocks& b) {
  const int n = b.p1.order();
  const SignedMatrix zero(n);
  const SignedMatrix id = SignedMatrix::identity(n);
  return b.p1 * b.p3.transposed() == zero && b.p2 * b.p4.transposed() == zero &&
         b.p3 * b.p1.transposed() == zero && b.p4 * b.p2.transposed() == zero &&
         b.p1 * b.p1.transposed() + b.p2 * b.p2.transposed() == id &&
         b.p3 * b.p3.transposed() + b.p4 * b.p4.transposed() == id;
}

SignedHalfPermutation z_from_permutation(const SignedMatrix& p) {
  const PermutationBlocks b = blocks_of_permutation(p);
  // Block entries are 0 or 1 (doubled 0 or 2); halving the doubled sum is
  // the same as reading the plain sum as a doubled value.
  const SignedMatrix sum = b.p1 - b.p2 - b.p3 + b.p4;
  SignedMatrix z(sum.order());
  for (int i = 0; i < z.order(); ++i) {
    for (int j = 0; j < z.order(); ++j) z.set_doubled(i, j, sum.doubled(i, j) / 2);
  }
  return SignedHalfPermutation(std::move(z));
}

SignedPermutation integrate(const SignedHalfPermutation& half) {
  const SignedMatrix& s = half.matrix();
  const int m = s.order();
  auto is_half = [&](int i, int j) { return std::abs(s.doubled(i, j)) == 1; };
  auto row_partner = [&](int i, int j) {
    for (int l = 0; l < m; ++l) {
      if (l != j && is_half(i, l)) return l;
    }
    throw InternalCheckFailed("half entry without a row partner");
  };
  auto column_partner = [&](int i, int j) {
    for (int l = 0; l < m; ++l) {
      if (l != i && is_half(l, j)) return l;
    }
    throw InternalCheckFailed("half entry without a column partner");
  };

  SignedMatrix t(m);
  std::vector<bool> visited(static_cast<std::size_t>(m) * m, false);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (std::abs(s.doubled(i, j)) == 2) t.set_doubled(i, j, s.doubled(i, j));
    }
  }
  for (int i0 = 0; i0 < m; ++i0) {
    for (int j0 = 0; j0 < m; ++j0) {
      if (!is_half(i0, j0) || visited[i0 * m + j0]) continue;
      int i = i0;
      int j = j0;
      while (true) {
        visited[i * m + j] = true;
        t.set_doubled(i, j, 2 * s.doubled(i, j));
        const int zeroed = row_partner(i, j);
        visited[i * m + zeroed] = true;
        const int next_row = column_partner(i, zeroed);
        if (next_row == i0 && zeroed == j0) break;
        i = next_row;
        j = zeroed;
      }
    }
  }
  return SignedPermutation(std::move(t));
}

bool is_integration(const SignedMatrix& s, const SignedMatrix& t) {
  if (s.order() != t.order()) {
    throw InvalidArgument("is_integration: orders " + std::to_string(s.order()) + " and " +
                          std::to_string(t.order()) + " differ");
  }
  if (!is_signed_half_permutation(s) || !is_signed_permutation(t)) return false;
  const int m = s.order();
  // Checks one row or column given an accessor for its entries.
  auto line_ok = [m](auto s_at, auto t_at) {
    int halves = 0;
    int kept = 0;
    for (int l = 0; l < m; ++l) {
      const int sd = s_at(l);
      const int td = t_at(l);
      if (std::abs(sd) == 2) {
        if (td != sd) return false;
      } else if (std::abs(sd) == 1) {
        ++halves;
        if (td == 2 * sd) ++kept;
        else if (td != 0) return false;
      } else if (td != 0) {
        return false;
      }
    }
    return halves == 0 || kept == 1;
  };
  for (int i = 0; i < m; ++i) {
    if (!line_ok([&](int l) { return s.doubled(i, l); }, [&](int l) { return t.doubled(i, l); })) {
      return false;
    }
    if (!line_ok([&](int l) { return s.doubled(l, i); }, [&](int l) { return t.doubled(l, i); })) {
      return false;
    }
  }
  return true;
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InternalCheckFailed(std::string("switching witness: ") + what);
}

}  // namespace

SwitchingWitness prove_switching(const SeidelMatrix& a, const SeidelMatrix& b,
                                 const SignedMatrix& p) {
  const int n = a.order();
  if (b.order() != n) {
    throw InvalidArgument("witness: Seidel matrices have orders " + std::to_string(n) + " and " +
                          std::to_string(b.order()));
  }
  if (p.order() != 2 * n || !is_permutation_matrix(p)) {
    throw InvalidArgument("witness: P must be a " + std::to_string(2 * n) + "x" +
                          std::to_string(2 * n) + " permutation matrix");
  }
  const SignedMatrix a_tilde = SignedMatrix::from_seidel(tilde_seidel(a));
  const SignedMatrix b_tilde = SignedMatrix::from_seidel(tilde_seidel(b));
  if (a_tilde != p * b_tilde * p.transposed()) {
    throw InvalidArgument("witness: P does not map the doubled matrix of B onto that of A");
  }

  SwitchingWitness w;
  w.blocks = blocks_of_permutation(p);
  require(satisfies_block_identities(w.blocks), "permutation block identities fail");

  const SignedMatrix id = SignedMatrix::identity(n);
  const SignedMatrix am = SignedMatrix::from_seidel(a);
  const SignedMatrix bm = SignedMatrix::from_seidel(b);

  // The four block equations, with X = P1 - P2 and Y = P4 - P3.
  const SignedMatrix x = w.blocks.p1 - w.blocks.p2;
  const SignedMatrix y = w.blocks.p4 - w.blocks.p3;
  require(am == x * bm * x.transposed() + id - x * x.transposed(), "A = XBX^T + I - XX^T fails");
  require(am == x * bm * y.transposed() + id - x * y.transposed(), "A = XBY^T + I - XY^T fails");
  require(am == y * bm * y.transposed() + id - y * y.transposed(), "A = YBY^T + I - YY^T fails");
  require(am == y * bm * x.transposed() + id - y * x.transposed(), "A = YBX^T + I - YX^T fails");

  SignedHalfPermutation z = [&] {
    try {
      return z_from_permutation(p);
    } catch (const InvalidArgument&) {
      throw InternalCheckFailed("switching witness: Z is not a signed half-permutation");
    }
  }();
  w.z = z.matrix();

  const SignedMatrix a_minus_i = am - id;
  const SignedMatrix b_minus_i = bm - id;
  require(a_minus_i == w.z * b_minus_i * w.z.transposed(), "A - I = Z(B - I)Z^T fails");

  w.m = w.z * b_minus_i;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      require(std::abs(w.m.doubled(i, j)) == 2, "Z(B - I) has an entry other than +-1");
    }
  }

  w.q = integrate(z).matrix();
  const SignedMatrix qt = w.q.transposed();
  require(is_integration(w.z.transposed(), qt), "Q^T does not integrate Z^T");
  require(w.m * qt == a_minus_i, "Z(B - I)Q^T = A - I fails");
  require(w.m == w.q * b_minus_i, "Z(B - I) = Q(B - I) fails");
  require(am == w.q * bm * qt, "A = QBQ^T fails");
  return w;
}

SignedPermutation witness_switching_q(const SeidelMatrix& a, const SeidelMatrix& b,
                                      const SignedMatrix& p) {
  return SignedPermutation(prove_switching(a, b, p).q);
}

namespace {

int parse_entry(std::string_view token) {
  const bool half = token.size() > 2 && token.substr(token.size() - 2) == "/2";
  std::string_view digits = half ? token.substr(0, token.size() - 2) : token;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  int value = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty()) {
    throw ParseError("matrix: bad entry '" + std::string(token) + "'");
  }
  return half ? value : 2 * value;
}

}  // namespace

SignedMatrix parse_signed_matrix(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), '\n', ';');
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream lines(normalized);
  std::string line;
  while (std::getline(lines, line, ';')) {
    std::istringstream tokens(line);
    std::vector<int> row;
    std::string token;
    while (tokens >> token) row.push_back(parse_entry(token));
    if (!row.empty()) rows.push_back(std::move(row));
  }
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw ParseError("matrix: not square (" + std::to_string(rows.size()) + " rows, a row of " +
                       std::to_string(row.size()) + ")");
    }
  }
  return SignedMatrix::from_doubled(rows);
}

std::string format_signed_matrix(const SignedMatrix& m) {
  std::ostringstream out;
  for (int i = 0; i < m.order(); ++i) {
    for (int j = 0; j < m.order(); ++j) {
      const int d = m.doubled(i, j);
      std::string cell = d % 2 == 0 ? std::to_string(d / 2) : std::to_string(d) + "/2";
      if (j > 0) out << ' ';
      out << std::string(cell.size() < 4 ? 4 - cell.size() : 0, ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace rainbowlab
