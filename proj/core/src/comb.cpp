#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_set>

#include "crystal_poly/inequality_engine.hpp"
#include "crystal_poly/shapes.hpp"

namespace crystal_poly {

namespace {

bool is_twisted(Family x) { return x == Family::A2 || x == Family::D2; }

template <class Shape>
std::vector<std::pair<Shape, LinearForm>> grow(const Shape& root, const std::function<std::vector<Shape>(const Shape&)>& children,
                                               const std::function<LinearForm(const Shape&)>& L, int R, std::size_t cap,
                                               bool* complete, std::size_t* visited) {
  std::vector<std::pair<Shape, LinearForm>> out;
  std::unordered_set<std::string> seen{root.key()};
  std::deque<Shape> queue{root};
  std::size_t count = 0;
  bool done = true;
  while (!queue.empty()) {
    if (++count > cap) {
      done = false;
      break;
    }
    Shape cur = std::move(queue.front());
    queue.pop_front();
    LinearForm f = L(cur);
    if (f.max_pos() > R) continue;
    for (auto& ch : children(cur))
      if (seen.insert(ch.key()).second) queue.push_back(std::move(ch));
    out.emplace_back(std::move(cur), std::move(f));
  }
  if (complete) *complete = done;
  if (visited) *visited += count;
  return out;
}

template <class Shape>
std::vector<Shape> shapes_only(std::vector<std::pair<Shape, LinearForm>>&& v) {
  std::vector<Shape> out;
  out.reserve(v.size());
  for (auto& p : v) out.push_back(std::move(p.first));
  return out;
}

std::vector<std::pair<Eyd, LinearForm>> grow_eyd(const Context& ctx, int s, int k, int R, std::size_t cap, bool* complete,
                                                 std::size_t* visited) {
  return grow<Eyd>(
      Eyd::ground(k),
      [](const Eyd& t) {
        std::vector<Eyd> out;
        for (int i : t.addable()) out.push_back(t.add_box(i));
        return out;
      },
      [&](const Eyd& t) { return L_eyd(ctx, s, t); }, R, cap, complete, visited);
}

std::vector<std::pair<Reyd, LinearForm>> grow_reyd(const Context& ctx, int s, int k, int R, std::size_t cap,
                                                   bool* complete, std::size_t* visited) {
  return grow<Reyd>(
      Reyd::ground(ctx.object_family(), ctx.n(), k), [](const Reyd& t) { return reyd_children(t); },
      [&](const Reyd& t) { return L_reyd(ctx, s, t); }, R, cap, complete, visited);
}

std::vector<std::pair<YoungWall, LinearForm>> grow_yw(const Context& ctx, int s, int k, int R, std::size_t cap,
                                                      bool* complete, std::size_t* visited) {
  return grow<YoungWall>(
      YoungWall::ground(ctx.object_family(), ctx.n(), k), [](const YoungWall& y) { return yw_children(y); },
      [&](const YoungWall& y) { return L_yw(ctx, s, y); }, R, cap, complete, visited);
}

std::string join_values(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string label(const Eyd& t) { return "EYD(" + join_values(t.values()) + ")"; }
std::string label(const Reyd& t) {
  std::string s = "REYD(";
  for (long u = t.lo(); !t.is_ground() && u <= t.hi(); ++u)
    s += (u == t.lo() ? "" : ",") + std::to_string(u) + ":" + std::to_string(t.at(u));
  return s + ")";
}
std::string label(const YoungWall& y) { return "YW(" + join_values(y.blocks()) + ")"; }

/// Appends L_{s,k} for every shape of charge k in the window.
void append_shapes(const Context& ctx, int s, int k, int R, std::size_t cap, long constant, ShapeFunctionSet& set) {
  bool complete = true;
  auto push = [&](auto&& items) {
    for (auto& [shape, form] : items) {
      LinearForm f = form;
      f.set_constant(constant);
      set.items.push_back({label(shape) + " s=" + std::to_string(s) + " k=" + std::to_string(k), std::move(f)});
    }
  };
  if (ctx.uses_wall(k)) {
    push(grow_yw(ctx, s, k, R, cap, &complete, &set.shapes_visited));
  } else if (is_twisted(ctx.object_family())) {
    push(grow_reyd(ctx, s, k, R, cap, &complete, &set.shapes_visited));
  } else {
    push(grow_eyd(ctx, s, k, R, cap, &complete, &set.shapes_visited));
  }
  set.complete = set.complete && complete;
}

}  // namespace

LinearForm boxed_r(const Context& ctx, int k, long r) {
  const int a = ctx.pi(r);
  const int b = ctx.pi(r - 1);
  const Family x = ctx.object_family();
  long ca = 1, cb = 1;
  if (is_twisted(x) && a != b) {
    if (!in_IX(x, ctx.n(), a))
      ca = 2;
    else if (!in_IX(x, ctx.n(), b))
      cb = 2;
  }
  LinearForm f;
  f.add_term(ctx.pos(ctx.P(k, r), a), ca);
  f.add_term(ctx.pos(1 + ctx.P(k, r - 1), b), -cb);
  return f;
}

LinearForm boxed_r_tilde(const Context& ctx, int k, long r) {
  const int a = ctx.pi(r - 1);
  const int b = ctx.pi(r);
  const Family x = ctx.object_family();
  long ca = 1, cb = 1;
  if (is_twisted(x) && a != b) {
    if (!in_IX(x, ctx.n(), a))
      ca = 2;
    else if (!in_IX(x, ctx.n(), b))
      cb = 2;
  }
  LinearForm f;
  f.add_term(ctx.pos(ctx.P(k, r - 1), a), ca);
  f.add_term(ctx.pos(1 + ctx.P(k, r), b), -cb);
  return f;
}

std::string comb_case_name(CombCase c) {
  switch (c) {
    case CombCase::Singleton: return "singleton";
    case CombCase::Tilde: return "tilde-ladder";
    case CombCase::Boxed: return "ladder";
    case CombCase::Shapes: return "shapes";
  }
  return "?";
}

CombCase comb_case(const Context& ctx, int k) {
  const auto& seq = ctx.seq();
  const int fk = seq.first(k);
  if (ctx.uses_wall(k)) {
    return fk < seq.first(pi_prime(ctx.n(), k + 1)) ? CombCase::Singleton : CombCase::Shapes;
  }
  const bool before_plus = fk < seq.first(ctx.pi(k + 1));
  const bool before_minus = fk < seq.first(ctx.pi(k - 1));
  if (before_plus && before_minus) return CombCase::Singleton;
  if (before_plus) return CombCase::Tilde;
  if (before_minus) return CombCase::Boxed;
  return CombCase::Shapes;
}

int max_s_in_window(const Context& ctx, int R) {
  std::vector<int> count(ctx.n() + 1, 0);
  for (int r = 1; r <= R; ++r) ++count[ctx.seq().color(r)];
  return *std::max_element(count.begin(), count.end());
}

std::vector<LinearForm> ShapeFunctionSet::forms() const {
  std::vector<LinearForm> out;
  out.reserve(items.size());
  for (const auto& it : items) out.push_back(it.form);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ShapeFunctionSet comb_lambda(const Context& ctx, int k, const WeightSpec& lambda, int R, std::size_t cap) {
  ShapeFunctionSet set;
  const CombCase c = comb_case(ctx, k);
  set.tag = "Comb_" + std::to_string(k) + "[" + lambda.str() + "] (" + comb_case_name(c) + ")";
  const long h = lambda(k);
  const int max_s = max_s_in_window(ctx, R);
  switch (c) {
    case CombCase::Singleton: {
      if (ctx.pos(1, k) <= R) {
        LinearForm f(h);
        f.add_term(ctx.pos(1, k), -1);
        set.items.push_back({"singleton", f});
      }
      break;
    }
    case CombCase::Boxed: {
      for (long r = k + 1; ctx.P(k, r) <= max_s; ++r) {
        LinearForm f = boxed_r(ctx, k, r);
        if (f.max_pos() > R) continue;
        f.set_constant(h);
        set.items.push_back({"box[" + std::to_string(r) + "]", f});
      }
      break;
    }
    case CombCase::Tilde: {
      for (long r = k; ctx.P(k, r - 1) <= max_s; --r) {
        LinearForm f = boxed_r_tilde(ctx, k, r);
        if (f.max_pos() > R) continue;
        f.set_constant(h);
        set.items.push_back({"box~[" + std::to_string(r) + "]", f});
      }
      break;
    }
    case CombCase::Shapes: {
      ShapeFunctionSet tmp;
      append_shapes(ctx, 0, k, R, cap, h, tmp);
      // The empty shape is the BFS root and is not part of the set.
      for (std::size_t i = 1; i < tmp.items.size(); ++i) set.items.push_back(std::move(tmp.items[i]));
      set.complete = tmp.complete;
      set.shapes_visited = tmp.shapes_visited;
      break;
    }
  }
  return set;
}

ShapeFunctionSet comb_infinity(const Context& ctx, int R, std::size_t cap) {
  ShapeFunctionSet set;
  set.tag = "Comb[inf]";
  const int max_s = max_s_in_window(ctx, R);
  for (int k = 1; k <= ctx.n(); ++k)
    for (int s = 1; s <= max_s; ++s)
      if (ctx.pos(s, k) <= R) append_shapes(ctx, s, k, R, cap, 0, set);
  return set;
}

std::vector<Eyd> enumerate_eyd(const Context& ctx, int s, int k, int R, bool* complete, std::size_t cap) {
  return shapes_only(grow_eyd(ctx, s, k, R, cap, complete, nullptr));
}

std::vector<Reyd> enumerate_reyd(const Context& ctx, int s, int k, int R, bool* complete, std::size_t cap) {
  return shapes_only(grow_reyd(ctx, s, k, R, cap, complete, nullptr));
}

std::vector<YoungWall> enumerate_yw(const Context& ctx, int s, int k, int R, bool* complete, std::size_t cap) {
  return shapes_only(grow_yw(ctx, s, k, R, cap, complete, nullptr));
}

long epsilon_star_forms(const Context& ctx, const ZVector& x, int k, int margin) {
  const int period = ctx.period();
  const int W = (x.max_pos() + period - 1) / period + margin;
  auto set = comb_lambda(ctx, k, WeightSpec::zero(ctx.n()), W * period);
  return epsilon_star_from(x, set.forms());
}

long EpsilonStarForms::operator()(const ZVector& x, int k) {
  const int period = ctx_->period();
  const int W = (x.max_pos() + period - 1) / period + margin_;
  auto it = cache_.find({k, W});
  if (it == cache_.end()) {
    auto set = comb_lambda(*ctx_, k, WeightSpec::zero(ctx_->n()), W * period);
    it = cache_.emplace(std::make_pair(k, W), set.forms()).first;
  }
  return epsilon_star_from(x, it->second);
}

}  // namespace crystal_poly
