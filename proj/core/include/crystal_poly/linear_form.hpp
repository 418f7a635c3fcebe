#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "crystal_poly/cartan.hpp"
#include "crystal_poly/zvector.hpp"

namespace crystal_poly {

/// phi = c + sum_r phi_r x_r with exact integer coefficients. Terms are kept
/// sorted by position with no zero coefficients; x_r for r < 1 is dropped.
class LinearForm {
 public:
  using Term = std::pair<int, long>;

  LinearForm() = default;
  explicit LinearForm(long c) : constant_(c) {}
  static LinearForm var(int r, long c = 1);

  long constant() const { return constant_; }
  void set_constant(long c) { constant_ = c; }
  const std::vector<Term>& terms() const { return terms_; }

  long coeff(int r) const;
  void add_term(int r, long c);
  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  LinearForm operator-() const;
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  LinearForm scaled(long k) const;

  /// 0 when there are no terms.
  int max_pos() const { return terms_.empty() ? 0 : terms_.back().first; }
  int min_pos() const { return terms_.empty() ? 0 : terms_.front().first; }
  bool is_zero() const { return constant_ == 0 && terms_.empty(); }
  bool homogeneous_zero() const { return terms_.empty(); }

  long eval(const ZVector& a) const;

  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.constant_ == b.constant_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LinearForm& a, const LinearForm& b) { return !(a == b); }
  /// Output order: by max position, then lexicographically by terms, then constant.
  friend bool operator<(const LinearForm& a, const LinearForm& b);

 private:
  void merge(const LinearForm& o, long sign);

  long constant_ = 0;
  std::vector<Term> terms_;
};

struct LinearFormHash {
  std::size_t operator()(const LinearForm& f) const noexcept;
};

/// "2*x[1,2] - x[1,1] + 1" with (s,k) labels.
std::string to_string(const LinearForm& f, const AdaptedSequence& seq);
/// Same with flat positions "x3".
std::string to_string_flat(const LinearForm& f);

/// Builds a form from (s, k, coeff) triples; s < 1 terms vanish.
LinearForm form_from_pairs(const Context& ctx, long constant,
                           const std::vector<std::tuple<long, int, long>>& terms);

}  // namespace crystal_poly
