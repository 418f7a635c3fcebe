#pragma once

#include <string>
#include <utility>
#include <vector>

namespace crystal_poly {

/// The four affine families: A1 = A^(1)_{n-1}, C1 = C^(1)_{n-1},
/// A2 = A^(2)_{2n-2}, D2 = D^(2)_n. Index set is always {1..n}.
enum class Family { A1, C1, A2, D2 };

struct AffineType {
  Family family = Family::A1;
  int n = 2;
};

std::string family_name(Family f);
Family parse_family(const std::string& name);
std::string display_name(const AffineType& t);

/// Throws std::invalid_argument when n is below the family minimum.
void validate(const AffineType& t);

/// Family of the Langlands dual, which labels the combinatorial objects.
Family dual_family(Family g);

int pi_period(Family x, int n);
/// Folding map pi_X : Z -> I.
int pi_X(Family x, int n, long t);
/// pi' : Z_{>=1} -> I, period 2n-2. Throws for l < 1.
int pi_prime(int n, long l);
/// Membership in I_X: every k for A1/C1, k != 1 for A2, k not in {1,n} for D2.
bool in_IX(Family x, int n, int k);

class CartanData {
 public:
  explicit CartanData(const AffineType& t);

  int n() const { return n_; }
  /// a_{i,j} = <h_i, alpha_j>, 1-based.
  int operator()(int i, int j) const { return a_[(i - 1) * n_ + (j - 1)]; }
  std::vector<std::vector<int>> rows() const;

 private:
  int n_;
  std::vector<int> a_;
};

CartanData cartan_matrix(const AffineType& t);

struct AdaptedReport {
  bool ok = true;
  std::string reason;
  int i = 0;
  int j = 0;
};

/// Checks condition (i_r != i_{r+1}, every index occurs) and adaptedness of
/// the periodic word. Never throws.
AdaptedReport check_adapted(const std::vector<int>& word, const CartanData& a);

/// Periodic sequence iota. word[0] is i_1, word[1] is i_2, and so on.
class AdaptedSequence {
 public:
  AdaptedSequence(std::vector<int> word, int n);

  int length() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }
  int n() const { return n_; }

  /// i_r for r >= 1.
  int color(int r) const { return word_[(r - 1) % length()]; }
  /// Position of the s-th occurrence of k (s >= 1).
  int pos_of(int s, int k) const;
  /// Inverse of pos_of.
  std::pair<int, int> pair_of(int r) const;
  /// r^(+): next position with the same color.
  int next_same(int r) const;
  /// r^(-): previous position with the same color, 0 if none.
  int prev_same(int r) const;
  /// iota^(k) = pos_of(1, k).
  int first(int k) const { return pos_of(1, k); }
  int per_period(int k) const { return static_cast<int>(occ_[k].size()); }

 private:
  std::vector<int> word_;
  int n_;
  std::vector<std::vector<int>> occ_;
  std::vector<int> index_in_occ_;
};

/// p_{i,j} for an adapted sequence; p_{j,j} = 0.
class PMatrix {
 public:
  PMatrix() = default;
  PMatrix(const AdaptedSequence& seq, const CartanData& a);
  int operator()(int i, int j) const { return p_[(i - 1) * n_ + (j - 1)]; }

 private:
  int n_ = 0;
  std::vector<int> p_;
};

PMatrix p_matrix(const AdaptedSequence& seq, const CartanData& a);

/// Everything that depends on (type, iota): Cartan data, positions, p, pi and
/// the P^X_k tables. Immutable after construction.
class Context {
 public:
  Context(AffineType type, std::vector<int> word);

  const AffineType& type() const { return type_; }
  int n() const { return type_.n; }
  const CartanData& cartan() const { return cartan_; }
  const AdaptedSequence& seq() const { return seq_; }
  const PMatrix& p() const { return p_; }
  Family object_family() const { return x_; }

  int a(int i, int j) const { return cartan_(i, j); }
  int period() const { return seq_.length(); }

  int pi(long t) const { return pi_X(x_, type_.n, t); }
  /// True when k is handled by Young walls (k outside I_{X^L}).
  bool uses_wall(int k) const { return !in_IX(x_, type_.n, k); }
  /// Color used by the P recursion for charge k: pi' on the wall branch.
  int color_for(int k, long t) const;
  /// P^{X^L}_k(t). On the wall branch t must be >= k.
  int P(int k, long t) const;

  /// Flat position of x_{s,k}; 0 when s < 1 (the zero variable).
  int pos(long s, int k) const;

 private:
  struct Table {
    int period = 1;
    std::vector<int> up;
    std::vector<int> down;
    bool wall = false;
  };

  AffineType type_;
  CartanData cartan_;
  AdaptedSequence seq_;
  PMatrix p_;
  Family x_;
  std::vector<Table> tables_;
};

}  // namespace crystal_poly
