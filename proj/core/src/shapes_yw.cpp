#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "crystal_poly/shapes.hpp"

namespace crystal_poly {

namespace {

void check_wall_variant(Family v, int n, int k) {
  if (v != Family::A2 && v != Family::D2) throw std::invalid_argument("Young wall variant must be A2 or D2");
  if (k < 1 || k > n || in_IX(v, n, k)) throw std::invalid_argument("Young wall ground state must be outside I_X");
}

}  // namespace

YoungWall YoungWall::ground(Family variant, int n, int k) {
  check_wall_variant(variant, n, k);
  return YoungWall(variant, n, k);
}

YoungWall YoungWall::make(Family variant, int n, int k, std::vector<int> blocks) {
  check_wall_variant(variant, n, k);
  YoungWall y(variant, n, k);
  for (int b : blocks)
    if (b < 0) throw std::invalid_argument("negative block count");
  while (!blocks.empty() && blocks.back() == 0) blocks.pop_back();
  y.blocks_ = std::move(blocks);
  if (!y.weakly_decreasing()) throw std::invalid_argument("column heights must weakly decrease to the left");
  if (!y.proper()) throw std::invalid_argument("two full columns share a height");
  return y;
}

bool YoungWall::half_color(int c) const { return c == 1 || (variant_ == Family::D2 && c == n_); }

WallCell YoungWall::cell(int m) const {
  WallCell c{k_, k_, true, 2 * k_, 2 * k_ + 1};
  int y2 = 2 * k_ + 1;
  for (int step = 1; step <= m; ++step) {
    const int level = y2 / 2;
    const int color = pi_prime(n_, level);
    const bool half = half_color(color);
    c = {level, color, half, y2, y2 + (half ? 1 : 2)};
    y2 = c.top2;
  }
  return c;
}

long YoungWall::total_blocks() const {
  long t = 0;
  for (int b : blocks_) t += b;
  return t;
}

int YoungWall::height2(int col) const { return cell(blocks_at(col)).top2; }

bool YoungWall::weakly_decreasing() const {
  const int len = static_cast<int>(blocks_.size());
  for (int c = 0; c < len; ++c)
    if (height2(c) < height2(c + 1)) return false;
  return true;
}

bool YoungWall::proper() const {
  std::vector<int> full_heights;
  for (int c = 0; c < static_cast<int>(blocks_.size()); ++c)
    if (full(c)) full_heights.push_back(height2(c));
  std::sort(full_heights.begin(), full_heights.end());
  return std::adjacent_find(full_heights.begin(), full_heights.end()) == full_heights.end();
}

YoungWall YoungWall::with_blocks(int col, int count) const {
  YoungWall y = *this;
  if (col >= static_cast<int>(y.blocks_.size())) y.blocks_.resize(col + 1, 0);
  y.blocks_[col] = count;
  while (!y.blocks_.empty() && y.blocks_.back() == 0) y.blocks_.pop_back();
  return y;
}

std::string YoungWall::key() const {
  std::ostringstream os;
  os << "yw:" << family_name(variant_) << ":" << k_ << ":";
  for (std::size_t i = 0; i < blocks_.size(); ++i) os << (i ? "," : "") << blocks_[i];
  return os.str();
}

std::vector<WallPlace> yw_slots_blocks(const YoungWall& y) {
  std::vector<WallPlace> out;
  auto ok = [](const YoungWall& w) { return w.weakly_decreasing() && w.proper(); };
  const int len = static_cast<int>(y.blocks().size());
  for (int col = 0; col <= len; ++col) {
    const int b = y.blocks_at(col);
    if (!ok(y.with_blocks(col, b + 1))) continue;
    const WallCell next = y.cell(b + 1);
    bool dbl = false;
    if (next.half && next.bottom2 % 2 == 0) {
      const WallCell second = y.cell(b + 2);
      dbl = second.half && second.level == next.level && ok(y.with_blocks(col, b + 2));
    }
    out.push_back({true, dbl, col, next.level, next.color});
  }
  for (int col = 0; col < len; ++col) {
    const int b = y.blocks_at(col);
    if (b < 1 || !ok(y.with_blocks(col, b - 1))) continue;
    const WallCell top = y.cell(b);
    bool dbl = false;
    if (top.half && top.bottom2 % 2 == 1 && b >= 2) {
      const WallCell below = y.cell(b - 1);
      dbl = below.half && below.level == top.level && ok(y.with_blocks(col, b - 2));
    }
    out.push_back({false, dbl, col, top.level, top.color});
  }
  return out;
}

LinearForm L_yw(const Context& ctx, int s, const YoungWall& y) {
  LinearForm f;
  for (const auto& p : yw_slots_blocks(y)) {
    const long base = static_cast<long>(s) + ctx.P(y.k(), p.level) + p.column;
    const long w = p.dbl ? 2 : 1;
    if (p.slot)
      f.add_term(ctx.pos(base, p.color), w);
    else
      f.add_term(ctx.pos(base + 1, p.color), -w);
  }
  return f;
}

std::vector<YoungWall> yw_children(const YoungWall& y) {
  std::vector<YoungWall> out;
  for (const auto& p : yw_slots_blocks(y))
    if (p.slot) out.push_back(y.with_blocks(p.column, y.blocks_at(p.column) + 1));
  return out;
}

std::string render_yw(const YoungWall& y) {
  // One text row per half unit, top row first; column 0 is printed rightmost.
  std::ostringstream os;
  const int len = static_cast<int>(y.blocks().size());
  const int cols = len + 1;
  int top = 2 * y.k() + 1;
  for (int c = 0; c < cols; ++c) top = std::max(top, y.height2(c));
  for (int h = top - 1; h >= 2 * y.k(); --h) {
    for (int c = cols - 1; c >= 0; --c) {
      char ch = '.';
      for (int m = 0; m <= y.blocks_at(c); ++m) {
        WallCell cell = y.cell(m);
        if (cell.bottom2 <= h && h < cell.top2) {
          ch = static_cast<char>('0' + cell.color % 10);
          break;
        }
      }
      os << ch;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace crystal_poly
