#include "kzres/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "kzres/exactalg.hpp"

namespace kzres {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition must have at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::transpose() const {
  std::vector<int> t(parts_.front(), 0);
  for (int len : parts_)
    for (int c = 0; c < len; ++c) ++t[c];
  return Partition(std::move(t));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s + ")";
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789 ") != std::string::npos) {
      throw std::invalid_argument("cannot parse partition '" + text + "'");
    }
    parts.push_back(std::stoi(item));
  }
  return Partition(std::move(parts));
}

std::vector<Box> boxes(const Partition& shape) {
  std::vector<Box> out;
  out.reserve(shape.size());
  for (int r = 1; r <= shape.rows(); ++r)
    for (int c = 1; c <= shape.row_length(r); ++c) out.push_back({r, c});
  return out;
}

Numbering::Numbering(Partition shape, std::vector<int> labels)
    : shape_(std::move(shape)), labels_(std::move(labels)) {
  const int n = shape_.size();
  if (static_cast<int>(labels_.size()) != n) throw std::invalid_argument("numbering size mismatch");
  std::vector<int> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < n; ++k) {
    if (sorted[k] != k + 1) throw std::invalid_argument("numbering is not a bijection onto 1..N");
  }
  offsets_.push_back(0);
  for (int len : shape_.parts()) offsets_.push_back(offsets_.back() + len);
}

int Numbering::label(const Box& b) const {
  if (b.row < 1 || b.row > shape_.rows() || b.col < 1 || b.col > shape_.row_length(b.row)) {
    throw std::out_of_range("box outside the diagram");
  }
  return labels_[offsets_[b.row - 1] + b.col - 1];
}

Box Numbering::box_of(int label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::out_of_range("label not in numbering");
  const int pos = static_cast<int>(it - labels_.begin());
  int row = 1;
  while (offsets_[row] <= pos) ++row;
  return {row, pos - offsets_[row - 1] + 1};
}

bool Numbering::is_standard() const {
  for (const Box& b : boxes(shape_)) {
    if (b.col > 1 && label({b.row, b.col - 1}) > label(b)) return false;
    if (b.row > 1 && label({b.row - 1, b.col}) > label(b)) return false;
  }
  return true;
}

std::string Numbering::to_string() const {
  std::string s;
  for (int r = 1; r <= shape_.rows(); ++r) {
    if (r > 1) s += "/";
    for (int c = 1; c <= shape_.row_length(r); ++c) s += (c > 1 ? "," : "") + std::to_string(label({r, c}));
  }
  return s;
}

Numbering identity_numbering(const Partition& shape) {
  std::vector<int> labels(shape.size());
  std::iota(labels.begin(), labels.end(), 1);
  return Numbering(shape, std::move(labels));
}

Composition Tabloid::shape() const {
  Composition c;
  for (const auto& r : rows) c.push_back(static_cast<int>(r.size()));
  return c;
}

int Tabloid::size() const {
  int n = 0;
  for (const auto& r : rows) n += static_cast<int>(r.size());
  return n;
}

int Tabloid::row_of(int label) const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (std::binary_search(rows[i].begin(), rows[i].end(), label)) return static_cast<int>(i) + 1;
  }
  throw std::out_of_range("label not in tabloid");
}

std::string Tabloid::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += "|";
    for (std::size_t k = 0; k < rows[i].size(); ++k) s += (k ? "," : "") + std::to_string(rows[i][k]);
  }
  return s + "}";
}

Tabloid make_tabloid(std::vector<std::vector<int>> rows) {
  std::vector<int> all;
  for (auto& r : rows) {
    std::sort(r.begin(), r.end());
    all.insert(all.end(), r.begin(), r.end());
  }
  std::sort(all.begin(), all.end());
  for (std::size_t k = 0; k < all.size(); ++k)
    if (all[k] != static_cast<int>(k) + 1) throw std::invalid_argument("tabloid rows must partition 1..N");
  return Tabloid{std::move(rows)};
}

Tabloid tabloid_of(const Numbering& t) {
  std::vector<std::vector<int>> rows(t.shape().rows());
  for (const Box& b : boxes(t.shape())) rows[b.row - 1].push_back(t.label(b));
  return make_tabloid(std::move(rows));
}

Numbering representative(const Tabloid& u) {
  std::vector<int> parts;
  std::vector<int> labels;
  for (const auto& r : u.rows) {
    parts.push_back(static_cast<int>(r.size()));
    labels.insert(labels.end(), r.begin(), r.end());
  }
  return Numbering(Partition(std::move(parts)), std::move(labels));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    current.push_back(k);
    partitions_rec(remaining - k, k, current, out);
    current.pop_back();
  }
}

void tableaux_rec(const std::vector<Box>& bx, std::size_t pos, std::vector<int>& labels,
                  std::vector<bool>& used, const Partition& shape, std::vector<Numbering>& out) {
  const int n = shape.size();
  if (static_cast<int>(pos) == n) {
    out.emplace_back(shape, labels);
    return;
  }
  const Box b = bx[pos];
  int lower = 0;
  if (b.col > 1) lower = std::max(lower, labels[pos - 1]);
  if (b.row > 1) {
    // The box above sits exactly one row-length earlier in reading order.
    lower = std::max(lower, labels[pos - shape.row_length(b.row - 1)]);
  }
  for (int k = lower + 1; k <= n; ++k) {
    if (used[k]) continue;
    used[k] = true;
    labels[pos] = k;
    tableaux_rec(bx, pos + 1, labels, used, shape, out);
    used[k] = false;
  }
}

void tabloids_rec(const Composition& shape, std::size_t row, std::vector<int>& remaining,
                  std::vector<std::vector<int>>& rows, std::vector<Tabloid>& out) {
  if (row == shape.size()) {
    out.push_back(Tabloid{rows});
    return;
  }
  const int k = shape[row];
  const int n = static_cast<int>(remaining.size());
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<int> chosen;
    std::vector<int> rest;
    std::size_t p = 0;
    for (int i = 0; i < n; ++i) {
      if (p < pick.size() && pick[p] == i) {
        chosen.push_back(remaining[i]);
        ++p;
      } else {
        rest.push_back(remaining[i]);
      }
    }
    rows[row] = chosen;
    tabloids_rec(shape, row + 1, rest, rows, out);
    // Next k-combination of 0..n-1 in lexicographic order.
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_partitions requires N >= 1");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

std::vector<Numbering> standard_tableaux(const Partition& shape) {
  std::vector<Numbering> out;
  std::vector<int> labels(shape.size(), 0);
  std::vector<bool> used(shape.size() + 1, false);
  tableaux_rec(boxes(shape), 0, labels, used, shape, out);
  return out;
}

std::vector<Tabloid> tabloids(const Composition& shape) {
  for (int s : shape) {
    if (s < 0) throw std::invalid_argument("negative row size in composition");
  }
  const int n = std::accumulate(shape.begin(), shape.end(), 0);
  std::vector<int> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 1);
  std::vector<std::vector<int>> rows(shape.size());
  std::vector<Tabloid> out;
  tabloids_rec(shape, 0, remaining, rows, out);
  return out;
}

int permutation_sign(std::span<const int> p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<SignedTabloid> column_expansion(const Numbering& t) {
  const Partition& shape = t.shape();
  const int ncols = shape.row_length(1);
  std::vector<std::vector<int>> columns(ncols);
  for (const Box& b : boxes(shape)) columns[b.col - 1].push_back(t.label(b));
  // order[c] is a permutation of the positions in column c.
  std::vector<std::vector<int>> order(ncols);
  for (int c = 0; c < ncols; ++c) {
    order[c].resize(columns[c].size());
    std::iota(order[c].begin(), order[c].end(), 0);
  }
  std::vector<SignedTabloid> out;
  while (true) {
    int sign = 1;
    std::vector<std::vector<int>> rows(shape.rows());
    for (int c = 0; c < ncols; ++c) {
      sign *= permutation_sign(order[c]);
      for (std::size_t r = 0; r < columns[c].size(); ++r) rows[r].push_back(columns[c][order[c][r]]);
    }
    out.push_back({sign, make_tabloid(std::move(rows))});
    int c = 0;
    while (c < ncols && !std::next_permutation(order[c].begin(), order[c].end())) ++c;
    if (c == ncols) break;
  }
  return out;
}

Tabloid act_transposition(const Tabloid& u, int i, int j) {
  const int n = u.size();
  if (i < 1 || j < 1 || i > n || j > n || i == j) throw std::invalid_argument("bad transposition labels");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::swap(perm[i - 1], perm[j - 1]);
  return act_permutation(u, perm);
}

Tabloid act_permutation(const Tabloid& u, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != u.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::vector<int>> rows = u.rows;
  for (auto& r : rows)
    for (int& k : r) k = perm[k - 1];
  return make_tabloid(std::move(rows));
}

std::vector<Tabloid> raise_row(const Tabloid& u, int s) {
  if (s < 1) throw std::invalid_argument("raise_row level out of range");
  std::vector<Tabloid> out;
  if (s >= static_cast<int>(u.rows.size())) return out;
  for (int k : u.rows[s]) {
    std::vector<std::vector<int>> rows = u.rows;
    rows[s].erase(std::find(rows[s].begin(), rows[s].end(), k));
    rows[s - 1].push_back(k);
    out.push_back(make_tabloid(std::move(rows)));
  }
  return out;
}

LevelProfile level_profile(const Partition& shape) {
  LevelProfile p;
  for (int s = 0; s < shape.rows(); ++s) {
    int below = 0;
    for (int r = s + 1; r <= shape.rows(); ++r) below += shape.row_length(r);
    p.sizes.push_back(below);
    if (s >= 1) p.config_dim += below;
  }
  return p;
}

int content_sum(const Partition& shape) {
  int f2 = 0;
  for (const Box& b : boxes(shape)) f2 += b.col - b.row;
  return f2;
}

std::int64_t hook_length_dimension(const Partition& shape) {
  const Partition t = shape.transpose();
  mpz_class num = 1;
  mpz_class den = 1;
  for (int k = 2; k <= shape.size(); ++k) num *= k;
  for (const Box& b : boxes(shape)) {
    const int arm = shape.row_length(b.row) - b.col;
    const int leg = t.row_length(b.col) - b.row;
    den *= arm + leg + 1;
  }
  return mpz_class(num / den).get_si();
}

DiagramStats diagram_stats(const Partition& shape, int m) {
  DiagramStats s;
  const int n = shape.size();
  s.f2 = content_sum(shape);
  s.specht_dim = hook_length_dimension(shape);
  s.transpose = shape.transpose();
  s.levels = level_profile(shape);
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (pairs == 0) {
    s.d_plus = s.specht_dim;
  } else {
    const std::int64_t scaled = s.f2 * s.specht_dim;
    if (scaled % pairs != 0) throw std::logic_error("transposition character is not an integer");
    const std::int64_t chi = scaled / pairs;
    if ((s.specht_dim + chi) % 2 != 0) throw std::logic_error("fixed-space dimension is not an integer");
    s.d_plus = (s.specht_dim + chi) / 2;
  }
  s.solution_degree = static_cast<std::int64_t>(m) * (s.f2 + pairs);
  return s;
}

}  // namespace kzres
