#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "crystal_poly/cartan.hpp"
#include "crystal_poly/crystal_z.hpp"
#include "crystal_poly/linear_form.hpp"

namespace crystal_poly {

// ---------------------------------------------------------------------------
// Extended Young diagrams

/// (y_r)_{r>=0}, nondecreasing, equal to the charge k from some r on.
/// Only the prefix of values below k is stored.
class Eyd {
 public:
  static Eyd ground(int k) { return Eyd(k, {}); }
  /// Throws std::invalid_argument unless the values are nondecreasing and <= k.
  static Eyd make(int k, std::vector<int> values);

  int k() const { return k_; }
  int at(int r) const { return r < static_cast<int>(y_.size()) ? y_[r] : k_; }
  const std::vector<int>& values() const { return y_; }
  long boxes() const;

  /// Columns i where y_i can drop by one (the concave corners).
  std::vector<int> addable() const;
  Eyd add_box(int i) const;
  /// Columns i where y_i can rise by one.
  std::vector<int> removable() const;
  Eyd remove_box(int i) const;

  std::string key() const;
  friend bool operator==(const Eyd& a, const Eyd& b) { return a.k_ == b.k_ && a.y_ == b.y_; }

 private:
  Eyd(int k, std::vector<int> y) : k_(k), y_(std::move(y)) {}
  int k_;
  std::vector<int> y_;
};

struct Corner {
  int i;
  int j;
  bool concave;
  friend bool operator==(const Corner&, const Corner&) = default;
};

std::vector<Corner> eyd_corners(const Eyd& t);
/// Index (s + P(i+j) + min{k-j, i}, pi(i+j)) of the corner variable.
std::pair<long, int> eyd_corner_index(const Context& ctx, int s, int k, int i, int j);
LinearForm L_eyd(const Context& ctx, int s, const Eyd& t);

// ---------------------------------------------------------------------------
// Revised extended Young diagrams (object family A2 or D2)

/// (y_t)_{t in Z}; stored as the deviation from the ground profile min(k, k+t).
class Reyd {
 public:
  static Reyd ground(Family variant, int n, int k);
  /// values[i] is y_{lo+i}; throws unless the step conditions hold.
  static Reyd make(Family variant, int n, int k, int lo, std::vector<int> values);

  Family variant() const { return variant_; }
  int n() const { return n_; }
  int k() const { return k_; }
  int at(long t) const;
  int ground_at(long t) const { return t < 0 ? static_cast<int>(k_ + t) : k_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(y_.size()) - 1; }
  bool is_ground() const { return y_.empty(); }
  long boxes() const;

  bool special(long t) const;
  /// Checks the step conditions on all t where the sequence deviates from ground.
  bool valid() const;

  /// Whether shifting y_t by delta keeps a valid diagram valid.
  bool can_shift(long t, int delta) const;
  /// Copy with y_t shifted by delta; the result may be invalid.
  Reyd shifted(long t, int delta) const;

  std::string key() const;
  friend bool operator==(const Reyd& a, const Reyd& b) {
    return a.variant_ == b.variant_ && a.n_ == b.n_ && a.k_ == b.k_ && a.lo_ == b.lo_ && a.y_ == b.y_;
  }

 private:
  Reyd(Family v, int n, int k) : variant_(v), n_(n), k_(k) {}
  void normalize();
  bool step_ok(long t, long d) const;
  Family variant_;
  int n_;
  int k_;
  int lo_ = 0;
  std::vector<int> y_;
};

enum class PointKind { SingleAdmissible, DoubleAdmissible, SingleRemovable, DoubleRemovable };
std::string point_kind_name(PointKind kind);

struct ShapePoint {
  PointKind kind;
  int i;
  int j;
  int color;
  friend bool operator==(const ShapePoint&, const ShapePoint&) = default;
};

/// Admissible and removable points, classified single or double.
std::vector<ShapePoint> reyd_points(const Reyd& t);
LinearForm L_reyd(const Context& ctx, int s, const Reyd& t);
/// Valid REYDs obtained by lowering one y_i (adding one box).
std::vector<Reyd> reyd_children(const Reyd& t);

// ---------------------------------------------------------------------------
// Young walls (object family A2 with ground Lambda_1, D2 with Lambda_1 or Lambda_n)

struct WallCell {
  int level;    // integer part l of the bottom
  int color;
  bool half;
  int bottom2;  // bottom in half units
  int top2;
};

class YoungWall {
 public:
  static YoungWall ground(Family variant, int n, int k);
  /// blocks[i] = number of blocks above the ground on column i (0 = rightmost).
  /// Throws unless the wall is a proper Young wall.
  static YoungWall make(Family variant, int n, int k, std::vector<int> blocks);

  Family variant() const { return variant_; }
  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<int>& blocks() const { return blocks_; }
  int blocks_at(int col) const { return col < static_cast<int>(blocks_.size()) ? blocks_[col] : 0; }
  long total_blocks() const;

  /// m-th block above the ground in any column (m >= 1); m = 0 is the ground.
  WallCell cell(int m) const;
  /// Top of column col in half units.
  int height2(int col) const;
  bool full(int col) const { return height2(col) % 2 == 0; }
  bool weakly_decreasing() const;
  bool proper() const;

  YoungWall with_blocks(int col, int count) const;

  std::string key() const;
  friend bool operator==(const YoungWall& a, const YoungWall& b) {
    return a.variant_ == b.variant_ && a.n_ == b.n_ && a.k_ == b.k_ && a.blocks_ == b.blocks_;
  }

 private:
  YoungWall(Family v, int n, int k) : variant_(v), n_(n), k_(k) {}
  bool half_color(int c) const;
  Family variant_;
  int n_;
  int k_;
  std::vector<int> blocks_;
};

struct WallPlace {
  bool slot;  // admissible slot (true) or removable block (false)
  bool dbl;
  int column;
  int level;
  int color;
  friend bool operator==(const WallPlace&, const WallPlace&) = default;
};

std::vector<WallPlace> yw_slots_blocks(const YoungWall& y);
LinearForm L_yw(const Context& ctx, int s, const YoungWall& y);
/// Proper walls obtained by adding a single block.
std::vector<YoungWall> yw_children(const YoungWall& y);

// ---------------------------------------------------------------------------
// Ladder functions and Comb sets

LinearForm boxed_r(const Context& ctx, int k, long r);
LinearForm boxed_r_tilde(const Context& ctx, int k, long r);

enum class CombCase { Singleton, Tilde, Boxed, Shapes };
std::string comb_case_name(CombCase c);
CombCase comb_case(const Context& ctx, int k);

struct ShapeFunction {
  std::string shape;
  LinearForm form;
};

struct ShapeFunctionSet {
  std::string tag;
  std::vector<ShapeFunction> items;
  bool complete = true;  // false when an enumeration cap was hit
  std::size_t shapes_visited = 0;

  /// Sorted, deduplicated forms.
  std::vector<LinearForm> forms() const;
};

constexpr std::size_t kShapeCap = 2000000;

/// Comb_k[lambda] restricted to forms whose variables all lie at positions <= R.
ShapeFunctionSet comb_lambda(const Context& ctx, int k, const WeightSpec& lambda, int R,
                             std::size_t cap = kShapeCap);
/// Comb[infinity] restricted to positions <= R.
ShapeFunctionSet comb_infinity(const Context& ctx, int R, std::size_t cap = kShapeCap);

/// Shapes of charge k whose L_{s,k} has every variable at a position <= R,
/// grown box by box from the empty shape; a branch is cut as soon as its
/// function leaves the window.
std::vector<Eyd> enumerate_eyd(const Context& ctx, int s, int k, int R, bool* complete = nullptr,
                               std::size_t cap = kShapeCap);
std::vector<Reyd> enumerate_reyd(const Context& ctx, int s, int k, int R, bool* complete = nullptr,
                                 std::size_t cap = kShapeCap);
std::vector<YoungWall> enumerate_yw(const Context& ctx, int s, int k, int R, bool* complete = nullptr,
                                    std::size_t cap = kShapeCap);

/// Largest s such that x_{s,c} sits at a position <= R for some color c.
int max_s_in_window(const Context& ctx, int R);

// Text renderings used by the CLI and debug output.
std::string render_eyd(const Eyd& t, int depth_limit = 12);
std::string render_yw(const YoungWall& y);
std::string describe(const Reyd& t);

}  // namespace crystal_poly
