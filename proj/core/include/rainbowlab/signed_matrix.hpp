#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rainbowlab/seidel.hpp"

namespace rainbowlab {

// Square matrix over the half-integers, stored exactly as doubled integer
// entries (the value 1/2 is stored as 1, the value -1 as -2). Arithmetic
// never touches floating point; a product whose entries are not
// half-integers throws InternalCheckFailed.
class SignedMatrix {
 public:
  SignedMatrix() = default;
  explicit SignedMatrix(int m);  // zero matrix

  static SignedMatrix from_doubled(const std::vector<std::vector<int>>& rows);
  static SignedMatrix from_integers(const std::vector<std::vector<int>>& rows);
  static SignedMatrix from_seidel(const SeidelMatrix& a);
  static SignedMatrix identity(int m);
  // Column j has its single 1 in row image[j], so (P B P^T)[image[u]][image[v]]
  // equals B[u][v].
  static SignedMatrix permutation(std::span<const int> image);

  int order() const { return m_; }
  int doubled(int i, int j) const { return entries_[index(i, j)]; }
  void set_doubled(int i, int j, int value) { entries_[index(i, j)] = value; }
  // Throws InvalidArgument if the entry is not an integer.
  int integer_at(int i, int j) const;
  bool is_integral() const;
  // True iff every entry lies in {-1, -1/2, 0, 1/2, 1}.
  bool within_unit_range() const;

  std::vector<std::vector<int>> doubled_rows() const;

  SignedMatrix transposed() const;
  // The size x size block starting at (row, col).
  SignedMatrix block(int row, int col, int size) const;

  SignedMatrix operator-() const;
  friend SignedMatrix operator+(const SignedMatrix& a, const SignedMatrix& b);
  friend SignedMatrix operator-(const SignedMatrix& a, const SignedMatrix& b);
  friend SignedMatrix operator*(const SignedMatrix& a, const SignedMatrix& b);
  friend bool operator==(const SignedMatrix&, const SignedMatrix&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * m_ + j; }

  int m_ = 0;
  std::vector<int> entries_;
};

bool is_permutation_matrix(const SignedMatrix& p);
bool is_signed_permutation(const SignedMatrix& q);
bool is_signed_half_permutation(const SignedMatrix& s);

// Exactly one nonzero entry, +-1, in every row and column.
class SignedPermutation {
 public:
  explicit SignedPermutation(SignedMatrix q);  // throws InvalidArgument
  const SignedMatrix& matrix() const { return q_; }
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  SignedMatrix q_;
};

// Every row and every column holds either one +-1 or two +-1/2 entries.
class SignedHalfPermutation {
 public:
  explicit SignedHalfPermutation(SignedMatrix s);  // throws InvalidArgument
  const SignedMatrix& matrix() const { return s_; }
  friend bool operator==(const SignedHalfPermutation&, const SignedHalfPermutation&) = default;

 private:
  SignedMatrix s_;
};

// The n x n blocks of a 2n x 2n permutation matrix [P1, P2; P3, P4].
struct PermutationBlocks {
  SignedMatrix p1, p2, p3, p4;
};

// Throws InvalidArgument for a non-permutation or odd dimension.
PermutationBlocks blocks_of_permutation(const SignedMatrix& p);

// P1 P3^T = P2 P4^T = P3 P1^T = P4 P2^T = 0, P1 P1^T + P2 P2^T = I and
// P3 P3^T + P4 P4^T = I.
bool satisfies_block_identities(const PermutationBlocks& b);

// Z = (P1 - P2 - P3 + P4) / 2.
SignedHalfPermutation z_from_permutation(const SignedMatrix& p);

// Turns a signed half-permutation into a signed permutation by keeping one
// of the two half entries of every half row and column (doubled, sign
// preserved) and zeroing the other. Half entries form disjoint cycles that
// alternate between shared rows and shared columns; each cycle is walked
// from its least unvisited entry in row-major order, doubling that entry,
// zeroing its row partner, doubling that entry's column partner, and so on.
SignedPermutation integrate(const SignedHalfPermutation& s);

// Rows and columns of s with a single +-1 are copied verbatim into t; rows
// and columns with two half entries appear in t with exactly one of them
// doubled and the other zeroed; t is a signed permutation. Returns false
// (rather than throwing) if s is not a signed half-permutation. Throws
// InvalidArgument on a dimension mismatch.
bool is_integration(const SignedMatrix& s, const SignedMatrix& t);

// Everything computed while turning an isomorphism of doubled Seidel
// matrices into a switching witness.
struct SwitchingWitness {
  PermutationBlocks blocks;
  SignedMatrix z;  // (P1 - P2 - P3 + P4) / 2
  SignedMatrix m;  // Z (B - I); every entry is +-1
  SignedMatrix q;  // an integration of Z; A = Q B Q^T
};

// Given Seidel matrices A and B of equal order and a permutation matrix P
// with tilde(A) = P tilde(B) P^T, produce a signed permutation Q with
// A = Q B Q^T. The precondition is verified (InvalidArgument when it
// fails) and every intermediate identity of the derivation is checked
// (InternalCheckFailed):
//   A - I = Z (B - I) Z^T,
//   M = Z (B - I) has only +-1 entries,
//   Q^T integrates Z^T and M Q^T = A - I,
//   M = Q (B - I),
//   A = Q B Q^T.
SwitchingWitness prove_switching(const SeidelMatrix& a, const SeidelMatrix& b,
                                 const SignedMatrix& p);
SignedPermutation witness_switching_q(const SeidelMatrix& a, const SeidelMatrix& b,
                                      const SignedMatrix& p);

// Text form: rows separated by ';' or newlines, entries by spaces or
// commas; entries are integers or halves written "1/2", "-1/2".
SignedMatrix parse_signed_matrix(std::string_view text);
std::string format_signed_matrix(const SignedMatrix& m);

}  // namespace rainbowlab
