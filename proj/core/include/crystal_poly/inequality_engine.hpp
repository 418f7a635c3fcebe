#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "crystal_poly/cartan.hpp"
#include "crystal_poly/crystal_z.hpp"
#include "crystal_poly/linear_form.hpp"

namespace crystal_poly {

/// beta_r = x_r + sum_{r<j<r+} a_{i_r,i_j} x_j + x_{r+}; beta_0 = 0.
LinearForm beta(const Context& ctx, int r);
/// beta_{s,k} from the (s,k) expansion with p_{j,k}.
LinearForm beta_pair(const Context& ctx, int s, int k);
/// beta_r^(-): beta_{r-} when r- > 0, otherwise the sigma_0 - sigma_r variant.
LinearForm beta_minus(const Context& ctx, int r, const WeightSpec& lambda);

LinearForm S_prime(const Context& ctx, int r, const LinearForm& phi);
LinearForm S_hat_prime(const Context& ctx, int r, const LinearForm& phi, const WeightSpec& lambda);

LinearForm lambda_k(const Context& ctx, const WeightSpec& lambda, int k);
LinearForm xi_k(const Context& ctx, int k);

enum class Mode { SPrime, SHat };

struct GenResult {
  std::vector<LinearForm> forms;  // sorted, deduplicated
  bool converged = true;
  std::size_t pruned = 0;  // candidates dropped for leaving the window (with multiplicity)
  std::size_t visits = 0;
  int window = 0;  // R
};

constexpr std::size_t kDefaultCap = 1000000;

/// BFS fixpoint of S' (or S-hat') applied at every position in the support.
/// Forms with a variable beyond R are pruned. converged=false when the cap is hit.
GenResult generate_xi(const Context& ctx, const std::vector<LinearForm>& seeds, Mode mode, int R,
                      const WeightSpec* lambda = nullptr, std::size_t cap = kDefaultCap);

/// S'-closure of {x_r : r <= R}.
GenResult generate_xi_infinity(const Context& ctx, int R, std::size_t cap = kDefaultCap);
/// S-hat'-closure of {lambda^(k)}.
GenResult generate_xi_lambda_k(const Context& ctx, const WeightSpec& lambda, int k, int R,
                               std::size_t cap = kDefaultCap);
/// S'-closure of {xi^(k)}.
GenResult generate_xi_k(const Context& ctx, int k, int R, std::size_t cap = kDefaultCap);

struct CheckReport {
  bool ok = true;
  std::optional<LinearForm> witness;
  int position = 0;
};

/// Coefficients at every (1,k) are >= 0.
CheckReport check_positivity(const Context& ctx, const std::vector<LinearForm>& forms);
/// Same test on (Xi'^(k) minus xi^(k)) for every k, together with Xi'.
CheckReport check_strict_positivity(const Context& ctx, const std::vector<std::vector<LinearForm>>& xi_k_sets,
                                    const std::vector<LinearForm>& xi_inf);
/// phi(0) >= 0 for every form.
CheckReport check_ample(const std::vector<LinearForm>& forms);

struct MembershipResult {
  bool member = true;
  std::optional<LinearForm> witness;
};

MembershipResult membership(const ZVector& a, const std::vector<LinearForm>& forms);

/// max(0, max{-phi(x)}) over the supplied forms.
long epsilon_star_from(const ZVector& x, const std::vector<LinearForm>& forms);
/// epsilon*_k(x) from the closed-form set Comb_k[0]. The window is chosen from
/// the support of x plus `margin` periods.
long epsilon_star_forms(const Context& ctx, const ZVector& x, int k, int margin = 2);

/// epsilon_star_forms with the Comb_k[0] sets cached per (k, window).
/// Not thread-safe.
class EpsilonStarForms {
 public:
  explicit EpsilonStarForms(const Context& ctx, int margin = 2) : ctx_(&ctx), margin_(margin) {}
  long operator()(const ZVector& x, int k);

 private:
  const Context* ctx_;
  int margin_;
  std::map<std::pair<int, int>, std::vector<LinearForm>> cache_;
};

}  // namespace crystal_poly
