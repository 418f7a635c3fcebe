#include "crystal_poly/inequality_engine.hpp"

#include <algorithm>
#include <unordered_set>

#include "crystal_poly/parallel.hpp"

namespace crystal_poly {

LinearForm beta(const Context& ctx, int r) {
  LinearForm b;
  if (r < 1) return b;
  const auto& seq = ctx.seq();
  const int c = seq.color(r);
  const int rp = seq.next_same(r);
  b.add_term(r, 1);
  for (int j = r + 1; j < rp; ++j) b.add_term(j, ctx.a(c, seq.color(j)));
  b.add_term(rp, 1);
  return b;
}

LinearForm beta_pair(const Context& ctx, int s, int k) {
  LinearForm b;
  b.add_term(ctx.pos(s, k), 1);
  b.add_term(ctx.pos(s + 1, k), 1);
  for (int j = 1; j <= ctx.n(); ++j) {
    if (j == k || ctx.a(k, j) >= 0) continue;
    b.add_term(ctx.pos(s + ctx.p()(j, k), j), ctx.a(k, j));
  }
  return b;
}

LinearForm beta_minus(const Context& ctx, int r, const WeightSpec& lambda) {
  const auto& seq = ctx.seq();
  const int rm = seq.prev_same(r);
  if (rm > 0) return beta(ctx, rm);
  const int c = seq.color(r);
  LinearForm b(-static_cast<long>(lambda(c)));
  for (int j = 1; j < r; ++j) b.add_term(j, ctx.a(c, seq.color(j)));
  b.add_term(r, 1);
  return b;
}

LinearForm S_prime(const Context& ctx, int r, const LinearForm& phi) {
  const long c = phi.coeff(r);
  if (c > 0) return phi - beta(ctx, r);
  if (c < 0) return phi + beta(ctx, ctx.seq().prev_same(r));
  return phi;
}

LinearForm S_hat_prime(const Context& ctx, int r, const LinearForm& phi, const WeightSpec& lambda) {
  const long c = phi.coeff(r);
  if (c > 0) return phi - beta(ctx, r);
  if (c < 0) return phi + beta_minus(ctx, r, lambda);
  return phi;
}

LinearForm lambda_k(const Context& ctx, const WeightSpec& lambda, int k) {
  LinearForm f = xi_k(ctx, k);
  f.set_constant(lambda(k));
  return f;
}

LinearForm xi_k(const Context& ctx, int k) {
  const auto& seq = ctx.seq();
  const int first = seq.first(k);
  LinearForm f;
  for (int j = 1; j < first; ++j) f.add_term(j, -ctx.a(k, seq.color(j)));
  f.add_term(first, -1);
  return f;
}

GenResult generate_xi(const Context& ctx, const std::vector<LinearForm>& seeds, Mode mode, int R,
                      const WeightSpec* lambda, std::size_t cap) {
  GenResult res;
  res.window = R;
  WeightSpec lam = lambda ? *lambda : WeightSpec::zero(ctx.n());
  std::unordered_set<LinearForm, LinearFormHash> seen;
  std::vector<LinearForm> frontier;
  for (const auto& s : seeds) {
    if (s.max_pos() > R) {
      ++res.pruned;
      continue;
    }
    if (seen.insert(s).second) frontier.push_back(s);
  }
  const int workers = worker_count();
  while (!frontier.empty()) {
    if (res.visits >= cap) {
      res.converged = false;
      break;
    }
    res.visits += frontier.size();
    std::vector<std::vector<LinearForm>> produced(std::max(workers, 1));
    std::vector<std::size_t> pruned(std::max(workers, 1), 0);
    parallel_chunks(frontier.size(), [&](std::size_t b, std::size_t e, int w) {
      auto& out = produced[w];
      for (std::size_t i = b; i < e; ++i) {
        const LinearForm& phi = frontier[i];
        for (const auto& term : phi.terms()) {
          const int r = term.first;
          LinearForm psi = mode == Mode::SPrime ? S_prime(ctx, r, phi) : S_hat_prime(ctx, r, phi, lam);
          if (psi.max_pos() > R) {
            ++pruned[w];
            continue;
          }
          out.push_back(std::move(psi));
        }
      }
    });
    std::vector<LinearForm> next;
    for (std::size_t w = 0; w < produced.size(); ++w) {
      res.pruned += pruned[w];
      for (auto& psi : produced[w])
        if (seen.insert(psi).second) next.push_back(std::move(psi));
    }
    frontier = std::move(next);
  }
  res.forms.assign(seen.begin(), seen.end());
  std::sort(res.forms.begin(), res.forms.end());
  return res;
}

GenResult generate_xi_infinity(const Context& ctx, int R, std::size_t cap) {
  std::vector<LinearForm> seeds;
  for (int r = 1; r <= R; ++r) seeds.push_back(LinearForm::var(r));
  return generate_xi(ctx, seeds, Mode::SPrime, R, nullptr, cap);
}

GenResult generate_xi_lambda_k(const Context& ctx, const WeightSpec& lambda, int k, int R, std::size_t cap) {
  return generate_xi(ctx, {lambda_k(ctx, lambda, k)}, Mode::SHat, R, &lambda, cap);
}

GenResult generate_xi_k(const Context& ctx, int k, int R, std::size_t cap) {
  return generate_xi(ctx, {xi_k(ctx, k)}, Mode::SPrime, R, nullptr, cap);
}

namespace {

CheckReport first_negative_at_start(const Context& ctx, const LinearForm& f) {
  for (int k = 1; k <= ctx.n(); ++k) {
    const int r = ctx.seq().first(k);
    if (f.coeff(r) < 0) return {false, f, r};
  }
  return {};
}

}  // namespace

CheckReport check_positivity(const Context& ctx, const std::vector<LinearForm>& forms) {
  for (const auto& f : forms) {
    auto rep = first_negative_at_start(ctx, f);
    if (!rep.ok) return rep;
  }
  return {};
}

CheckReport check_strict_positivity(const Context& ctx, const std::vector<std::vector<LinearForm>>& xi_k_sets,
                                    const std::vector<LinearForm>& xi_inf) {
  for (std::size_t idx = 0; idx < xi_k_sets.size(); ++idx) {
    const int k = static_cast<int>(idx) + 1;
    const LinearForm seed = xi_k(ctx, k);
    for (const auto& f : xi_k_sets[idx]) {
      if (f == seed) continue;
      auto rep = first_negative_at_start(ctx, f);
      if (!rep.ok) return rep;
    }
  }
  return check_positivity(ctx, xi_inf);
}

CheckReport check_ample(const std::vector<LinearForm>& forms) {
  for (const auto& f : forms)
    if (f.constant() < 0) return {false, f, 0};
  return {};
}

MembershipResult membership(const ZVector& a, const std::vector<LinearForm>& forms) {
  for (const auto& f : forms)
    if (f.eval(a) < 0) return {false, f};
  return {};
}

long epsilon_star_from(const ZVector& x, const std::vector<LinearForm>& forms) {
  long best = 0;
  for (const auto& f : forms) best = std::max(best, -f.eval(x));
  return best;
}

}  // namespace crystal_poly
