#include "crystal_poly/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <iterator>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "crystal_poly/inequality_engine.hpp"
#include "crystal_poly/parallel.hpp"
#include "crystal_poly/shapes.hpp"

namespace crystal_poly {

std::vector<std::vector<ZVector>> image_levels(const Crystal& c, int depth) {
  std::vector<std::vector<ZVector>> levels;
  levels.push_back({ZVector{}});
  const int n = c.ctx().n();
  for (int d = 1; d <= depth; ++d) {
    const auto& prev = levels.back();
    std::vector<std::vector<ZVector>> produced(std::max(1, worker_count()));
    parallel_chunks(prev.size(), [&](std::size_t b, std::size_t e, int w) {
      for (std::size_t i = b; i < e; ++i)
        for (int k = 1; k <= n; ++k)
          if (auto next = c.f(k, prev[i])) produced[w].push_back(std::move(*next));
    });
    std::unordered_set<ZVector, ZVectorHash> seen;
    std::vector<ZVector> level;
    for (auto& chunk : produced)
      for (auto& z : chunk)
        if (seen.insert(z).second) level.push_back(std::move(z));
    std::sort(level.begin(), level.end());
    levels.push_back(std::move(level));
  }
  return levels;
}

std::vector<ZVector> generate_image(const Crystal& c, int depth) {
  std::vector<ZVector> out;
  for (auto& level : image_levels(c, depth)) out.insert(out.end(), level.begin(), level.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool in_image(const Crystal& c, const ZVector& x) {
  if (!x.nonnegative()) return false;
  ZVector cur = x;
  const int n = c.ctx().n();
  while (!cur.is_zero()) {
    bool moved = false;
    for (int k = 1; k <= n && !moved; ++k) {
      if (auto prev = c.e(k, cur)) {
        cur = std::move(*prev);
        moved = true;
      }
    }
    if (!moved) return false;
  }
  return true;
}

long epsilon_star_oracle(const Context& ctx, const ZVector& x, int k) {
  const int n = ctx.n();
  if (!in_image(Crystal(ctx, WeightSpec::inf(n)), x))
    throw std::invalid_argument("epsilon_star_oracle: vector is not in the image of B(infinity)");
  // epsilon*_j(x) never exceeds the number of f~ needed to reach x, which is
  // N = |x|, so N copies of every other Lambda_j never obstruct membership
  // and m = N always succeeds.
  const int N = static_cast<int>(x.total());
  for (int m = 0; m <= N; ++m) {
    WeightSpec lam = WeightSpec::zero(n);
    for (int j = 1; j <= n; ++j) lam.add(j, j == k ? m : N);
    if (in_image(Crystal(ctx, lam), x)) return m;
  }
  throw std::logic_error("epsilon_star_oracle: no m <= |x| admits x");
}

std::vector<LinearForm> comb_all(const Context& ctx, const WeightSpec& lambda, int R, bool* complete) {
  bool ok = true;
  auto inf = comb_infinity(ctx, R);
  ok = ok && inf.complete;
  std::vector<LinearForm> forms = inf.forms();
  if (!lambda.infinity) {
    for (int k = 1; k <= ctx.n(); ++k) {
      auto set = comb_lambda(ctx, k, lambda, R);
      ok = ok && set.complete;
      auto f = set.forms();
      forms.insert(forms.end(), f.begin(), f.end());
    }
  }
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  // Short forms first: most infeasible vectors fail on a two-term inequality.
  std::stable_sort(forms.begin(), forms.end(),
                   [](const LinearForm& a, const LinearForm& b) { return a.terms().size() < b.terms().size(); });
  if (complete) *complete = ok;
  return forms;
}

namespace {

void diff_sets(const std::vector<LinearForm>& bfs, const std::vector<LinearForm>& comb, ProcedureReport& rep) {
  std::set<LinearForm> a(bfs.begin(), bfs.end());
  std::set<LinearForm> b(comb.begin(), comb.end());
  rep.zero_in_bfs = a.erase(LinearForm{}) > 0;
  rep.bfs_size = static_cast<long>(a.size());
  rep.comb_size = static_cast<long>(b.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(rep.only_bfs));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(rep.only_comb));
}

}  // namespace

std::vector<ProcedureReport> procedure_vs_closed(const Context& ctx, const WeightSpec& lambda, int R) {
  std::vector<ProcedureReport> out;
  {
    ProcedureReport rep;
    auto gen = generate_xi_infinity(ctx, R);
    auto comb = comb_infinity(ctx, R);
    rep.bfs_converged = gen.converged;
    rep.comb_complete = comb.complete;
    diff_sets(gen.forms, comb.forms(), rep);
    out.push_back(std::move(rep));
  }
  if (lambda.infinity) return out;
  for (int k = 1; k <= ctx.n(); ++k) {
    ProcedureReport rep;
    rep.k = k;
    auto gen = generate_xi_lambda_k(ctx, lambda, k, R);
    auto comb = comb_lambda(ctx, k, lambda, R);
    rep.bfs_converged = gen.converged;
    rep.comb_complete = comb.complete;
    diff_sets(gen.forms, comb.forms(), rep);
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<ZVector> vectors_up_to(int R, int D) {
  std::vector<ZVector> out;
  std::vector<int> cur(R, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == R) {
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, D);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<ZVector> feasible_among(const std::vector<ZVector>& candidates, const std::vector<LinearForm>& forms) {
  std::vector<char> ok(candidates.size(), 0);
  parallel_chunks(candidates.size(), [&](std::size_t b, std::size_t e, int) {
    // Forms that rejected a recent candidate are tried first; neighbouring
    // candidates in lexicographic order tend to fail on the same inequality.
    std::vector<std::size_t> hot;
    for (std::size_t i = b; i < e; ++i) {
      const ZVector& z = candidates[i];
      bool feasible = true;
      for (std::size_t h = 0; h < hot.size() && feasible; ++h) {
        if (forms[hot[h]].eval(z) < 0) {
          std::rotate(hot.begin(), hot.begin() + static_cast<long>(h), hot.begin() + static_cast<long>(h) + 1);
          feasible = false;
        }
      }
      for (std::size_t f = 0; f < forms.size() && feasible; ++f) {
        if (forms[f].eval(z) < 0) {
          feasible = false;
          hot.insert(hot.begin(), f);
          if (hot.size() > 32) hot.pop_back();
        }
      }
      ok[i] = feasible ? 1 : 0;
    }
  });
  std::vector<ZVector> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (ok[i]) out.push_back(candidates[i]);
  return out;
}

}  // namespace

CrosscheckReport crosscheck_membership(const Context& ctx, const WeightSpec& lambda, int depth, int form_periods) {
  const auto t0 = std::chrono::steady_clock::now();
  CrosscheckReport rep;
  rep.type = display_name(ctx.type());
  rep.word = ctx.seq().word();
  rep.lambda = lambda.str();
  rep.depth = depth;
  const int period = ctx.period();
  if (form_periods <= 0) form_periods = std::max(depth, 1);
  rep.vector_window = depth * period;
  rep.form_window = form_periods * period;

  Crystal crystal(ctx, lambda);
  auto closure = generate_image(crystal, depth);
  rep.closure_size = static_cast<long>(closure.size());

  bool complete = true;
  auto forms = comb_all(ctx, lambda, rep.form_window, &complete);
  rep.forms_complete = complete;
  rep.forms_used = static_cast<long>(forms.size());

  auto candidates = vectors_up_to(rep.vector_window, depth);
  rep.checked = static_cast<long>(candidates.size());
  auto feasible = feasible_among(candidates, forms);
  rep.feasible_size = static_cast<long>(feasible.size());

  std::set<ZVector> closure_set(closure.begin(), closure.end());
  std::set<ZVector> feasible_set(feasible.begin(), feasible.end());
  for (const auto& z : feasible_set)
    if (!closure_set.count(z)) rep.mismatches.push_back({z, "feasible-not-reachable"});
  for (const auto& z : closure_set)
    if (!feasible_set.count(z)) rep.mismatches.push_back({z, "reachable-not-feasible"});

  if (!rep.mismatches.empty()) {
    // Depth-D vectors can need forms spanning D periods, so never re-check below that.
    auto wider = comb_all(ctx, lambda, std::max(form_periods + 2, depth) * period);
    std::vector<ZVector> again;
    for (const auto& m : rep.mismatches) again.push_back(m.vector);
    auto still = feasible_among(again, wider);
    std::set<ZVector> still_set(still.begin(), still.end());
    bool vanish = true;
    for (const auto& m : rep.mismatches) {
      const bool feas = still_set.count(m.vector) > 0;
      const bool reach = closure_set.count(m.vector) > 0;
      if (feas != reach) vanish = false;
    }
    rep.window_sensitive = vanish;
  }
  rep.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace crystal_poly
