#pragma once

// Young diagrams, numberings, tabloids and the symmetric-group actions on
// them, plus the closed-form scalars attached to a diagram.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kzres {

/// Non-increasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts is non-empty, positive and
  /// non-increasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int row_length(int row) const { return parts_.at(row - 1); }
  Partition transpose() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Parses "3,2,1".
Partition parse_partition(const std::string& text);

/// 1-based row and column.
struct Box {
  int row;
  int col;
  friend auto operator<=>(const Box&, const Box&) = default;
};

/// Boxes in row-major reading order.
std::vector<Box> boxes(const Partition& shape);

/// Bijection from the boxes of a shape to 1..N, stored in reading order.
class Numbering {
 public:
  Numbering(Partition shape, std::vector<int> labels);

  const Partition& shape() const { return shape_; }
  const std::vector<int>& labels() const { return labels_; }
  int label(const Box& b) const;
  Box box_of(int label) const;
  bool is_standard() const;
  std::string to_string() const;

  friend bool operator==(const Numbering&, const Numbering&) = default;

 private:
  Partition shape_;
  std::vector<int> labels_;
  std::vector<int> offsets_;
};

/// Numbering with k in the k-th box of the reading order.
Numbering identity_numbering(const Partition& shape);

using Composition = std::vector<int>;

/// Row-equivalence class of numberings. Rows are stored sorted; the shape is
/// a composition since raising operators leave the partition lattice.
struct Tabloid {
  std::vector<std::vector<int>> rows;

  Composition shape() const;
  int size() const;
  /// Row (1-based) containing the label.
  int row_of(int label) const;
  std::string to_string() const;

  friend bool operator==(const Tabloid&, const Tabloid&) = default;
  friend auto operator<=>(const Tabloid&, const Tabloid&) = default;
};

Tabloid make_tabloid(std::vector<std::vector<int>> rows);
Tabloid tabloid_of(const Numbering& t);
/// Fills each row in ascending order. Requires a partition shape.
Numbering representative(const Tabloid& u);

/// Reverse-lexicographic: (3), (2,1), (1,1,1).
std::vector<Partition> enumerate_partitions(int n);

/// Lexicographic order of reading words.
std::vector<Numbering> standard_tableaux(const Partition& shape);

/// All tabloids of a composition, in lexicographic row-set order.
std::vector<Tabloid> tabloids(const Composition& shape);

struct SignedTabloid {
  int sign;
  Tabloid tabloid;
};

/// One entry per element of the column group of t; the first is (+1, {t}).
std::vector<SignedTabloid> column_expansion(const Numbering& t);

Tabloid act_transposition(const Tabloid& u, int i, int j);
/// Relabels every k by perm[k-1] (perm is a 1-based permutation).
Tabloid act_permutation(const Tabloid& u, std::span<const int> perm);
/// Moves one label from row s+1 to row s, one output per label.
std::vector<Tabloid> raise_row(const Tabloid& u, int s);

struct LevelProfile {
  std::vector<int> sizes;  // m_0 .. m_{n-1}
  int config_dim = 0;      // sum of m_1 .. m_{n-1}
};
LevelProfile level_profile(const Partition& shape);

/// Sum of contents c(b) - r(b), the eigenvalue of the sum of all
/// transpositions.
int content_sum(const Partition& shape);
std::int64_t hook_length_dimension(const Partition& shape);

struct DiagramStats {
  int f2 = 0;
  std::int64_t specht_dim = 0;
  std::int64_t d_plus = 0;
  Partition transpose;
  LevelProfile levels;
  std::int64_t solution_degree = 0;
};

/// Throws std::logic_error if the fixed-space dimension comes out
/// non-integral.
DiagramStats diagram_stats(const Partition& shape, int m);

/// Sign of a permutation given as a sequence of distinct integers.
int permutation_sign(std::span<const int> p);

}  // namespace kzres
