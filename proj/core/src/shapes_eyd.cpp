#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "crystal_poly/shapes.hpp"

namespace crystal_poly {

Eyd Eyd::make(int k, std::vector<int> values) {
  while (!values.empty() && values.back() == k) values.pop_back();
  for (std::size_t r = 0; r < values.size(); ++r) {
    if (values[r] > k) throw std::invalid_argument("EYD value above the charge");
    if (r + 1 < values.size() && values[r] > values[r + 1]) throw std::invalid_argument("EYD values must be nondecreasing");
  }
  return Eyd(k, std::move(values));
}

long Eyd::boxes() const {
  long b = 0;
  for (int v : y_) b += k_ - v;
  return b;
}

std::vector<int> Eyd::addable() const {
  std::vector<int> out;
  const int m = static_cast<int>(y_.size());
  for (int i = 0; i <= m; ++i)
    if (i == 0 || at(i - 1) < at(i)) out.push_back(i);
  return out;
}

Eyd Eyd::add_box(int i) const {
  std::vector<int> v = y_;
  if (i >= static_cast<int>(v.size())) v.resize(i + 1, k_);
  v[i] -= 1;
  return make(k_, std::move(v));
}

std::vector<int> Eyd::removable() const {
  std::vector<int> out;
  const int m = static_cast<int>(y_.size());
  for (int i = 0; i < m; ++i)
    if (at(i) < at(i + 1)) out.push_back(i);
  return out;
}

Eyd Eyd::remove_box(int i) const {
  std::vector<int> v = y_;
  v.at(i) += 1;
  return make(k_, std::move(v));
}

std::string Eyd::key() const {
  std::ostringstream os;
  os << "eyd:" << k_ << ":";
  for (std::size_t r = 0; r < y_.size(); ++r) os << (r ? "," : "") << y_[r];
  return os.str();
}

std::vector<Corner> eyd_corners(const Eyd& t) {
  std::vector<Corner> out;
  out.push_back({0, t.at(0), true});
  const int m = static_cast<int>(t.values().size());
  for (int r = 0; r < m; ++r) {
    if (t.at(r) < t.at(r + 1)) {
      out.push_back({r + 1, t.at(r), false});
      out.push_back({r + 1, t.at(r + 1), true});
    }
  }
  return out;
}

std::pair<long, int> eyd_corner_index(const Context& ctx, int s, int k, int i, int j) {
  const long t = static_cast<long>(i) + j;
  return {static_cast<long>(s) + ctx.P(k, t) + std::min(k - j, i), ctx.pi(t)};
}

LinearForm L_eyd(const Context& ctx, int s, const Eyd& t) {
  LinearForm f;
  for (const auto& c : eyd_corners(t)) {
    auto [idx, color] = eyd_corner_index(ctx, s, t.k(), c.i, c.j);
    f.add_term(ctx.pos(idx, color), c.concave ? 1 : -1);
  }
  return f;
}

std::string render_eyd(const Eyd& t, int depth_limit) {
  // Rows from y = k-1 downwards; '#' marks a box at column r when y_r <= row.
  std::ostringstream os;
  const int m = static_cast<int>(t.values().size());
  if (m == 0) return "(empty)\n";
  const int low = std::max(t.at(0), t.k() - depth_limit);
  for (int row = t.k() - 1; row >= low; --row) {
    for (int r = 0; r < m; ++r) os << (t.at(r) <= row ? '#' : '.');
    os << "  " << row << "\n";
  }
  if (low > t.at(0)) os << "...\n";
  return os.str();
}

}  // namespace crystal_poly
