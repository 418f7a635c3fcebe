#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystal_poly/cartan.hpp"
#include "crystal_poly/zvector.hpp"

namespace crystal_poly {

/// Dominant weight by multiplicities <h_k, lambda>, or the B(infinity) mode.
struct WeightSpec {
  bool infinity = false;
  std::vector<int> m;  // m[k] for k = 1..n, m[0] unused

  static WeightSpec inf(int n);
  static WeightSpec zero(int n);
  /// mult * Lambda_k
  static WeightSpec fundamental(int n, int k, int mult = 1);
  int n() const { return static_cast<int>(m.size()) - 1; }
  /// <h_k, lambda>; 0 in B(infinity) mode.
  int operator()(int k) const { return infinity ? 0 : m[k]; }
  WeightSpec& add(int k, int mult);
  std::string str() const;
};

/// Weight as lambda - sum_i alpha_coeff[i] alpha_i.
struct Weight {
  bool infinity = false;
  std::vector<int> lambda;
  std::vector<long> alpha;
};

/// The crystal Z^infty_iota[lambda] (or Z^infty_iota when lambda is infinity).
class Crystal {
 public:
  Crystal(const Context& ctx, WeightSpec lambda);

  const Context& ctx() const { return *ctx_; }
  const WeightSpec& lambda() const { return lambda_; }
  bool infinity() const { return lambda_.infinity; }

  long sigma_r(const ZVector& a, int r) const;
  /// sigma_0^(k); nullopt stands for -infinity.
  std::optional<long> sigma0(const ZVector& a, int k) const;

  struct KInfo {
    long sigma = 0;   // sigma^(k)
    int min_arg = 0;  // min M^(k)
    int max_arg = 0;  // max M^(k) inside the scan window (meaningful when sigma > 0)
  };
  KInfo k_info(const ZVector& a, int k) const;

  std::optional<ZVector> f(int k, const ZVector& a) const;
  std::optional<ZVector> e(int k, const ZVector& a) const;

  Weight wt(const ZVector& a) const;
  /// <h_k, wt(a)>
  long wt_pairing(int k, const ZVector& a) const;
  long epsilon(int k, const ZVector& a) const;
  long phi(int k, const ZVector& a) const;

  /// Applies word[0] first, then word[1], ...; nullopt once any step is 0.
  std::optional<ZVector> apply_word(const std::vector<int>& word, ZVector a) const;

 private:
  std::vector<long> all_sigmas(const ZVector& a, int upto) const;

  const Context* ctx_;
  WeightSpec lambda_;
};

/// Accepts "[a1,a2,...]", a bare "a1 a2 ..." or "{(s,k):v, ...}".
ZVector parse_zvector(const std::string& text, const AdaptedSequence& seq);
std::string format_flat(const ZVector& a);
std::string format_pairs(const ZVector& a, const AdaptedSequence& seq);

}  // namespace crystal_poly
