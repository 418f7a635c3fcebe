#pragma once

#include <string>
#include <vector>

#include "crystal_poly/cartan.hpp"
#include "crystal_poly/crystal_z.hpp"
#include "crystal_poly/linear_form.hpp"

namespace crystal_poly {

/// levels[d] = elements reached from 0 by exactly d Kashiwara operators
/// (each f~ adds one to the total, so this is the grading by |a|).
std::vector<std::vector<ZVector>> image_levels(const Crystal& c, int depth);
/// All elements of depth <= D, 0 included, sorted.
std::vector<ZVector> generate_image(const Crystal& c, int depth);

/// Membership of x in the f~-closure of 0, decided by walking back with e~:
/// the image is stable under e~ and f~_k e~_k x = x, so x is reachable iff
/// repeated e~ (any choice) ends at 0.
bool in_image(const Crystal& c, const ZVector& x);

/// min m such that x lies in the image for m*Lambda_k + N*sum_{j!=k} Lambda_j,
/// N = |x|. Throws std::invalid_argument if x is not in the B(infinity) image.
long epsilon_star_oracle(const Context& ctx, const ZVector& x, int k);

struct Mismatch {
  ZVector vector;
  std::string kind;  // "feasible-not-reachable" or "reachable-not-feasible"
};

struct CrosscheckReport {
  std::string type;
  std::vector<int> word;
  std::string lambda;
  int depth = 0;
  int form_window = 0;    // R used for the inequality sets
  int vector_window = 0;  // positions allowed in candidate vectors
  long checked = 0;       // candidate vectors examined
  long closure_size = 0;
  long feasible_size = 0;
  long forms_used = 0;
  bool forms_complete = true;
  std::vector<Mismatch> mismatches;
  bool window_sensitive = false;  // mismatches vanish with a wider form window
  double runtime_s = 0;
};

/// Compares {a >= 0 : |a| <= D, all windowed Comb forms >= 0} with the
/// f~-closure of depth D. Candidate vectors live on positions <= D * period
/// (one f~ never reaches more than one period past the support);
/// form_periods = 0 uses the same window for the forms.
CrosscheckReport crosscheck_membership(const Context& ctx, const WeightSpec& lambda, int depth, int form_periods = 0);

struct ProcedureReport {
  int k = 0;  // 0 for the B(infinity) pair (S' closure of all x_r vs Comb[inf])
  long bfs_size = 0;
  long comb_size = 0;
  bool bfs_converged = true;
  bool comb_complete = true;
  bool zero_in_bfs = false;
  std::vector<LinearForm> only_bfs;
  std::vector<LinearForm> only_comb;
  bool ok() const { return only_bfs.empty() && only_comb.empty() && bfs_converged && comb_complete; }
};

/// Windowed comparison of the rewriting closures with the closed-form sets:
/// S' closure of {x_r} against Comb[inf], and for finite lambda the S-hat'
/// closure of lambda^(k) (zero form removed) against Comb_k[lambda].
std::vector<ProcedureReport> procedure_vs_closed(const Context& ctx, const WeightSpec& lambda, int R);

/// All windowed Comb forms relevant for lambda: Comb[inf] and, unless lambda is
/// infinity, Comb_k[lambda] for every k.
std::vector<LinearForm> comb_all(const Context& ctx, const WeightSpec& lambda, int R, bool* complete = nullptr);

/// All nonnegative vectors with support in 1..R and total <= D.
std::vector<ZVector> vectors_up_to(int R, int D);

}  // namespace crystal_poly
