#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "crystal_poly/shapes.hpp"

namespace crystal_poly {

namespace {

long floor_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

void check_variant(Family v, int n, int k) {
  if (v != Family::A2 && v != Family::D2) throw std::invalid_argument("REYD variant must be A2 or D2");
  if (!in_IX(v, n, k) || k < 1 || k > n) throw std::invalid_argument("REYD charge outside I_X");
}

}  // namespace

std::string point_kind_name(PointKind kind) {
  switch (kind) {
    case PointKind::SingleAdmissible: return "single-admissible";
    case PointKind::DoubleAdmissible: return "double-admissible";
    case PointKind::SingleRemovable: return "single-removable";
    case PointKind::DoubleRemovable: return "double-removable";
  }
  return "?";
}

Reyd Reyd::ground(Family variant, int n, int k) {
  check_variant(variant, n, k);
  return Reyd(variant, n, k);
}

Reyd Reyd::make(Family variant, int n, int k, int lo, std::vector<int> values) {
  check_variant(variant, n, k);
  Reyd t(variant, n, k);
  t.lo_ = lo;
  t.y_ = std::move(values);
  t.normalize();
  if (!t.valid()) throw std::invalid_argument("sequence violates the REYD step conditions");
  return t;
}

int Reyd::at(long t) const {
  if (!y_.empty() && t >= lo_ && t <= hi()) return y_[t - lo_];
  return ground_at(t);
}

void Reyd::normalize() {
  std::size_t b = 0;
  while (b < y_.size() && y_[b] == ground_at(lo_ + static_cast<long>(b))) ++b;
  std::size_t e = y_.size();
  while (e > b && y_[e - 1] == ground_at(lo_ + static_cast<long>(e) - 1)) --e;
  std::vector<int> kept(y_.begin() + b, y_.begin() + e);
  lo_ = kept.empty() ? 0 : lo_ + static_cast<int>(b);
  y_ = std::move(kept);
}

long Reyd::boxes() const {
  long b = 0;
  for (std::size_t i = 0; i < y_.size(); ++i) b += ground_at(lo_ + static_cast<long>(i)) - y_[i];
  return b;
}

bool Reyd::special(long t) const {
  if (variant_ == Family::A2) return floor_mod(k_ + t, 2L * n_ - 1) == 0;
  long m = floor_mod(k_ + t, 2L * n_);
  return m == 0 || m == n_;
}

bool Reyd::step_ok(long t, long d) const {
  if (!special(t) || t == 0) return d == 0 || d == 1;
  if (t > 0) return d >= 0;
  return d <= 1;
}

bool Reyd::valid() const {
  if (y_.empty()) return true;
  for (long t = lo_ - 1; t <= hi(); ++t)
    if (!step_ok(t, static_cast<long>(at(t + 1)) - at(t))) return false;
  return true;
}

bool Reyd::can_shift(long t, int delta) const {
  const long v = at(t) + delta;
  return step_ok(t - 1, v - at(t - 1)) && step_ok(t, at(t + 1) - v);
}

Reyd Reyd::shifted(long t, int delta) const {
  Reyd r = *this;
  if (r.y_.empty()) {
    r.lo_ = static_cast<int>(t);
    r.y_.push_back(ground_at(t));
  } else if (t < r.lo_) {
    std::vector<int> pre;
    for (long u = t; u < r.lo_; ++u) pre.push_back(ground_at(u));
    r.y_.insert(r.y_.begin(), pre.begin(), pre.end());
    r.lo_ = static_cast<int>(t);
  } else if (t > r.hi()) {
    for (long u = r.hi() + 1; u <= t; ++u) r.y_.push_back(ground_at(u));
  }
  r.y_[t - r.lo_] += delta;
  r.normalize();
  return r;
}

std::string Reyd::key() const {
  std::string out = std::to_string(lo_);
  out += ':';
  for (int v : y_) {
    out += std::to_string(v);
    out += ',';
  }
  return out;
}

std::vector<ShapePoint> reyd_points(const Reyd& t) {
  std::vector<ShapePoint> out;
  const int n = t.n();
  const int k = t.k();
  const bool a2 = t.variant() == Family::A2;
  const long mod = a2 ? 2L * n - 1 : 2L * n;
  long from = -2, to = 2;
  if (!t.is_ground()) {
    from = std::min<long>(from, t.lo() - 2);
    to = std::max<long>(to, t.hi() + 2);
  }
  auto pi = [&](long u) { return pi_X(t.variant(), n, u); };

  // Double point tables. For A2 the residues are {1, 0} and the color is 1;
  // for D2 each l in {0, n} contributes residues {l+1, l} and the color pi(l).
  std::vector<long> ells = a2 ? std::vector<long>{0} : std::vector<long>{0, n};

  for (long i = from; i <= to; ++i) {
    if (t.can_shift(i, -1)) {
      const bool shape = t.at(i - 1) < t.at(i) && t.at(i) == t.at(i + 1);
      int dcolor = 0;
      if (shape) {
        const long m = floor_mod(i + k, mod);
        for (long l : ells) {
          if ((m == floor_mod(l + 1, mod) && i < 0) || (m == l && i > 0)) dcolor = pi(l);
        }
      }
      if (dcolor)
        out.push_back({PointKind::DoubleAdmissible, static_cast<int>(i), t.at(i), dcolor});
      else
        out.push_back({PointKind::SingleAdmissible, static_cast<int>(i), t.at(i), pi(i + k)});
    }
  }
  for (long i = from; i <= to; ++i) {
    if (t.can_shift(i - 1, +1)) {
      const bool shape = t.at(i - 2) == t.at(i - 1) && t.at(i - 1) < t.at(i);
      int dcolor = 0;
      if (shape) {
        const long m = floor_mod(i + k - 1, mod);
        for (long l : ells) {
          if ((m == floor_mod(l + 1, mod) && i > 1) || (m == l && i < 1)) dcolor = pi(l);
        }
      }
      if (dcolor)
        out.push_back({PointKind::DoubleRemovable, static_cast<int>(i), t.at(i - 1), dcolor});
      else
        out.push_back({PointKind::SingleRemovable, static_cast<int>(i), t.at(i - 1), pi(i + k - 1)});
    }
  }
  return out;
}

LinearForm L_reyd(const Context& ctx, int s, const Reyd& t) {
  LinearForm f;
  const int k = t.k();
  for (const auto& p : reyd_points(t)) {
    const long i = p.i;
    const long j = p.j;
    switch (p.kind) {
      case PointKind::SingleAdmissible:
      case PointKind::DoubleAdmissible: {
        long idx = s + ctx.P(k, i + k) + std::min(i, 0L) + k - j;
        long w = p.kind == PointKind::DoubleAdmissible ? 2 : 1;
        f.add_term(ctx.pos(idx, ctx.pi(i + k)), w);
        break;
      }
      case PointKind::SingleRemovable:
      case PointKind::DoubleRemovable: {
        long idx = s + ctx.P(k, i + k - 1) + std::min(i - 1, 0L) + k - j;
        long w = p.kind == PointKind::DoubleRemovable ? 2 : 1;
        f.add_term(ctx.pos(idx, ctx.pi(i + k - 1)), -w);
        break;
      }
    }
  }
  return f;
}

std::vector<Reyd> reyd_children(const Reyd& t) {
  std::vector<Reyd> out;
  for (const auto& p : reyd_points(t)) {
    if (p.kind == PointKind::SingleAdmissible || p.kind == PointKind::DoubleAdmissible)
      out.push_back(t.shifted(p.i, -1));
  }
  return out;
}

std::string describe(const Reyd& t) {
  std::ostringstream os;
  os << "REYD " << family_name(t.variant()) << " n=" << t.n() << " k=" << t.k() << ": ";
  if (t.is_ground()) {
    os << "ground";
  } else {
    for (long u = t.lo(); u <= t.hi(); ++u) os << (u == t.lo() ? "" : ", ") << "y" << u << "=" << t.at(u);
  }
  os << "\n";
  for (const auto& p : reyd_points(t))
    os << "  " << point_kind_name(p.kind) << " (" << p.i << "," << p.j << ") color " << p.color << "\n";
  return os.str();
}

}  // namespace crystal_poly
