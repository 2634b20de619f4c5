#ifndef TAUT_DIAGONALS_HPP
#define TAUT_DIAGONALS_HPP

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "taut/rational.hpp"
#include "taut/taut_ring.hpp"

namespace taut {

// ---------------------------------------------------------------------------
// Classes on the symmetric product C_n
// ---------------------------------------------------------------------------

/// [delta_{i_1..i_r} + m*o]: the generalized diagonal {i_1 x_1 + .. + i_r x_r}
/// translated by m times a base point. Lives in C_n with n = sum(i_u) + m.
struct DiagonalTermClass {
  std::vector<long> multiplicities; // nondecreasing, entries >= 1
  long base_mult = 0;

  long degree() const;
  friend auto operator<=>(const DiagonalTermClass&, const DiagonalTermClass&) = default;
};

class SymmetricClassSum {
public:
  using Terms = std::map<DiagonalTermClass, Rational>;

  explicit SymmetricClassSum(long n) : n_(n) {}

  long n() const { return n_; }
  const Terms& terms() const { return terms_; }
  Rational coefficient(const DiagonalTermClass& t) const;

  /// Throws if the term's degree is not n or its multiplicities are not sorted positive.
  void add_term(const DiagonalTermClass& t, const Rational& c);

  SymmetricClassSum& operator*=(const Rational& c);
  friend SymmetricClassSum operator*(SymmetricClassSum a, const Rational& c) { return a *= c; }
  friend bool operator==(const SymmetricClassSum&, const SymmetricClassSum&) = default;

private:
  long n_;
  Terms terms_;
};

// ---------------------------------------------------------------------------
// Classes on the ordered product C^n
// ---------------------------------------------------------------------------

/// One block of a decorated set partition. A block without a label is a free
/// diagonal (all its coordinates equal an arbitrary point); a labelled block
/// pins all its coordinates to the point p_label of the fixed divisor.
struct PartitionBlock {
  std::vector<int> elements;
  std::optional<int> label;

  bool is_free() const { return !label.has_value(); }
  friend auto operator<=>(const PartitionBlock&, const PartitionBlock&) = default;
};

/// Set partition of {1..n} with decorated blocks, always held in canonical
/// form: blocks pinned to the same label merged, elements sorted, blocks
/// ordered by least element.
class DecoratedPartitionClass {
public:
  DecoratedPartitionClass(int n, std::vector<PartitionBlock> blocks);

  int n() const { return n_; }
  const std::vector<PartitionBlock>& blocks() const { return blocks_; }

  friend auto operator<=>(const DecoratedPartitionClass&, const DecoratedPartitionClass&) = default;

private:
  int n_;
  std::vector<PartitionBlock> blocks_;
};

class PartitionClassSum {
public:
  using Terms = std::map<DecoratedPartitionClass, Rational>;

  PartitionClassSum(int n, int d) : n_(n), d_(d) {}

  int n() const { return n_; }
  int d() const { return d_; }
  const Terms& terms() const { return terms_; }
  Rational coefficient(const DecoratedPartitionClass& c) const;

  /// Throws on a size mismatch or a label outside [1, d].
  void add_term(const DecoratedPartitionClass& c, const Rational& coeff);

  PartitionClassSum& operator+=(const PartitionClassSum& o);
  friend bool operator==(const PartitionClassSum&, const PartitionClassSum&) = default;

private:
  int n_;
  int d_;
  Terms terms_;
};

/// Ordered k-partition (A_1..A_k) of {1..n}.
using OrderedPartition = std::vector<std::vector<int>>;

/// All set partitions of {1..n} into exactly k nonempty blocks, each block
/// sorted, blocks ordered by least element.
std::vector<OrderedPartition> set_partitions(int n, int k);

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Class of the truncated linear system G_n of a g^r_d in C_n:
/// sum over 1 <= i_1 <= .. <= i_r with sum(i) <= n of
///   binom(d, n - sum(i)) prod_u (-1)^{i_u-1}/i_u [delta_i + (n - sum(i)) o].
/// Needs 1 <= r <= n <= d.
SymmetricClassSum truncated_system_class(long d, long r, long n);

/// Image in the tautological ring: each [delta_i + m o] goes to
/// (1/gamma(i)) (i_1)_*C * .. * (i_r)_*C; translates are dropped.
TautPolynomial jacobian_pushdown(const SymmetricClassSum& s, long g);

/// Pullback of [G_k] to C^k: r unordered free blocks of sizes i_u and pinned
/// singletons with pairwise distinct labels from {1..d}, each class weighted
/// by prod_u (-1)^{i_u-1} (i_u-1)!. Needs 1 <= r <= k <= d.
PartitionClassSum sigma_pullback_class(int d, int r, int k);

/// Pushforward along C^n -> C_n: free block sizes become the diagonal
/// multiplicities (weighted by gamma of that multiset), pinned coordinates
/// become the base-point multiplicity.
SymmetricClassSum sigma_pushforward(const PartitionClassSum& p);

/// Pushforward along Psi_P : C^k -> C^n. Block B of c maps to the union of
/// A_j over j in B; decorations are kept and the result is canonicalized.
DecoratedPartitionClass psi_pushforward(const OrderedPartition& partition,
                                        const DecoratedPartitionClass& c);

/// Pullback to C^n of the locus of n-tuples lying in a common hyperplane:
/// sum over positions a_1 < .. < a_{n-r} and labels (repetition allowed) of the
/// class pinning those positions, every other position a free singleton.
/// Needs 1 <= r <= n <= d.
PartitionClassSum hyperplane_pullback_class(int d, int r, int n);

/// sum_{k=r}^{n} (1/k!) sum over ordered k-partitions P of {1..n} of
/// Psi_P_*(sigma_k^*[G_k]).
PartitionClassSum recursion_rhs(int d, int r, int n);

inline constexpr int kDefaultRecursionMaxN = 5;

/// hyperplane_pullback_class(d, r, n) == recursion_rhs(d, r, n). Throws when
/// n exceeds max_n (the enumeration grows like the ordered Bell numbers).
bool verify_recursion(int d, int r, int n, int max_n = kDefaultRecursionMaxN);

nlohmann::json to_json(const SymmetricClassSum& s);
nlohmann::json to_json(const PartitionClassSum& p);

} // namespace taut

#endif // TAUT_DIAGONALS_HPP
