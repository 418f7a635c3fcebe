#include "crystal_poly/cartan.hpp"

#include <algorithm>
#include <stdexcept>

namespace crystal_poly {

namespace {

long floor_mod(long t, long m) {
  long r = t % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A1: return "A1";
    case Family::C1: return "C1";
    case Family::A2: return "A2";
    case Family::D2: return "D2";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "A1") return Family::A1;
  if (name == "C1") return Family::C1;
  if (name == "A2") return Family::A2;
  if (name == "D2") return Family::D2;
  throw std::invalid_argument("unknown family '" + name + "' (expected A1, C1, A2 or D2)");
}

std::string display_name(const AffineType& t) {
  switch (t.family) {
    case Family::A1: return "A_" + std::to_string(t.n - 1) + "^(1)";
    case Family::C1: return "C_" + std::to_string(t.n - 1) + "^(1)";
    case Family::A2: return "A_" + std::to_string(2 * t.n - 2) + "^(2)";
    case Family::D2: return "D_" + std::to_string(t.n) + "^(2)";
  }
  return "?";
}

void validate(const AffineType& t) {
  int min_n = t.family == Family::A1 ? 2 : 3;
  if (t.n < min_n) {
    throw std::invalid_argument("rank n=" + std::to_string(t.n) + " below minimum " +
                                std::to_string(min_n) + " for family " + family_name(t.family));
  }
}

Family dual_family(Family g) {
  switch (g) {
    case Family::A1: return Family::A1;
    case Family::C1: return Family::D2;
    case Family::A2: return Family::A2;
    case Family::D2: return Family::C1;
  }
  return g;
}

int pi_period(Family x, int n) {
  switch (x) {
    case Family::A1: return n;
    case Family::C1: return 2 * n - 2;
    case Family::A2: return 2 * n - 1;
    case Family::D2: return 2 * n;
  }
  return n;
}

int pi_X(Family x, int n, long t) {
  const long T = pi_period(x, n);
  const int m = static_cast<int>(floor_mod(t - 1, T)) + 1;
  if (m <= n) return m;
  switch (x) {
    case Family::A1: return m;
    case Family::C1: return 2 * n - m;
    case Family::A2: return 2 * n - m;
    case Family::D2: return 2 * n + 1 - m;
  }
  return m;
}

int pi_prime(int n, long l) {
  if (l < 1) throw std::invalid_argument("pi' is defined for l >= 1 only");
  return pi_X(Family::C1, n, l);
}

bool in_IX(Family x, int n, int k) {
  switch (x) {
    case Family::A1:
    case Family::C1: return true;
    case Family::A2: return k != 1;
    case Family::D2: return k != 1 && k != n;
  }
  return true;
}

CartanData::CartanData(const AffineType& t) : n_(t.n), a_(t.n * t.n, 0) {
  validate(t);
  const int n = t.n;
  auto set = [&](int i, int j, int v) { a_[(i - 1) * n + (j - 1)] = v; };
  for (int i = 1; i <= n; ++i) set(i, i, 2);
  if (t.family == Family::A1) {
    if (n == 2) {
      set(1, 2, -2);
      set(2, 1, -2);
    } else {
      for (int i = 1; i <= n; ++i) {
        int j = i % n + 1;
        set(i, j, -1);
        set(j, i, -1);
      }
    }
    return;
  }
  for (int i = 1; i < n; ++i) {
    set(i, i + 1, -1);
    set(i + 1, i, -1);
  }
  // An arrow i => j in the diagram puts the 2 in row j: a_{j,i} = -2.
  switch (t.family) {
    case Family::C1:  // 1 => 2 - ... - n-1 <= n
      set(2, 1, -2);
      set(n - 1, n, -2);
      break;
    case Family::A2:  // 1 => 2 - ... - n-1 => n
      set(2, 1, -2);
      set(n, n - 1, -2);
      break;
    case Family::D2:  // 1 <= 2 - ... - n-1 => n
      set(1, 2, -2);
      set(n, n - 1, -2);
      break;
    default: break;
  }
}

std::vector<std::vector<int>> CartanData::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i][j] = a_[i * n_ + j];
  return out;
}

CartanData cartan_matrix(const AffineType& t) { return CartanData(t); }

AdaptedReport check_adapted(const std::vector<int>& word, const CartanData& a) {
  const int n = a.n();
  const int L = static_cast<int>(word.size());
  AdaptedReport rep;
  if (L == 0) return {false, "empty word", 0, 0};
  for (int v : word) {
    if (v < 1 || v > n) return {false, "index " + std::to_string(v) + " outside 1.." + std::to_string(n), v, 0};
  }
  for (int k = 1; k <= n; ++k) {
    if (std::find(word.begin(), word.end(), k) == word.end())
      return {false, "index " + std::to_string(k) + " never occurs", k, 0};
  }
  for (int r = 0; r < L; ++r) {
    if (word[r] == word[(r + 1) % L])
      return {false, "consecutive repetition i_r = i_{r+1} = " + std::to_string(word[r]), word[r], word[r]};
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (a(i, j) >= 0) continue;
      std::vector<int> sub;
      for (int v : word)
        if (v == i || v == j) sub.push_back(v);
      const int m = static_cast<int>(sub.size());
      for (int r = 0; r < m; ++r) {
        if (sub[r] == sub[(r + 1) % m])
          return {false, "subsequence on {" + std::to_string(i) + "," + std::to_string(j) + "} does not alternate", i, j};
      }
    }
  }
  return rep;
}

AdaptedSequence::AdaptedSequence(std::vector<int> word, int n)
    : word_(std::move(word)), n_(n), occ_(n + 1), index_in_occ_(word_.size()) {
  if (word_.empty()) throw std::invalid_argument("empty iota word");
  for (int r = 0; r < length(); ++r) {
    int k = word_[r];
    if (k < 1 || k > n) throw std::invalid_argument("iota word entry out of range");
    index_in_occ_[r] = static_cast<int>(occ_[k].size());
    occ_[k].push_back(r);
  }
  for (int k = 1; k <= n; ++k)
    if (occ_[k].empty()) throw std::invalid_argument("index " + std::to_string(k) + " missing from iota word");
  for (int r = 0; r < length(); ++r)
    if (word_[r] == word_[(r + 1) % length()]) throw std::invalid_argument("iota has i_r = i_{r+1}");
}

int AdaptedSequence::pos_of(int s, int k) const {
  const int c = per_period(k);
  return ((s - 1) / c) * length() + occ_[k][(s - 1) % c] + 1;
}

std::pair<int, int> AdaptedSequence::pair_of(int r) const {
  const int q = (r - 1) / length();
  const int off = (r - 1) % length();
  const int k = word_[off];
  return {q * per_period(k) + index_in_occ_[off] + 1, k};
}

int AdaptedSequence::next_same(int r) const {
  auto [s, k] = pair_of(r);
  return pos_of(s + 1, k);
}

int AdaptedSequence::prev_same(int r) const {
  auto [s, k] = pair_of(r);
  return s > 1 ? pos_of(s - 1, k) : 0;
}

PMatrix::PMatrix(const AdaptedSequence& seq, const CartanData& a) : n_(a.n()), p_(a.n() * a.n(), 0) {
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (i != j) p_[(i - 1) * n_ + (j - 1)] = seq.first(i) < seq.first(j) ? 1 : 0;
}

PMatrix p_matrix(const AdaptedSequence& seq, const CartanData& a) {
  auto rep = check_adapted(seq.word(), a);
  if (!rep.ok) throw std::invalid_argument("p_matrix on non-adapted sequence: " + rep.reason);
  return PMatrix(seq, a);
}

Context::Context(AffineType type, std::vector<int> word)
    : type_(type), cartan_(type), seq_(std::move(word), type.n), x_(dual_family(type.family)) {
  auto rep = check_adapted(seq_.word(), cartan_);
  if (!rep.ok) throw std::invalid_argument("iota is not adapted: " + rep.reason);
  p_ = PMatrix(seq_, cartan_);
  const int n = type_.n;
  tables_.resize(n + 1);
  for (int k = 1; k <= n; ++k) {
    Table& tb = tables_[k];
    tb.wall = uses_wall(k);
    tb.period = tb.wall ? 2 * n - 2 : pi_period(x_, n);
    tb.up.assign(tb.period + 1, 0);
    for (int d = 1; d <= tb.period; ++d) {
      long t = k + d;
      tb.up[d] = tb.up[d - 1] + p_(color_for(k, t), color_for(k, t - 1));
    }
    if (!tb.wall) {
      tb.down.assign(tb.period + 1, 0);
      for (int d = 1; d <= tb.period; ++d) {
        long t = k - d;
        tb.down[d] = tb.down[d - 1] + p_(pi(t), pi(t + 1));
      }
    }
  }
}

int Context::color_for(int k, long t) const {
  return uses_wall(k) ? pi_prime(type_.n, t) : pi(t);
}

int Context::P(int k, long t) const {
  const Table& tb = tables_[k];
  const long T = tb.period;
  if (t >= k) {
    long d = t - k;
    return static_cast<int>((d / T) * tb.up[T] + tb.up[d % T]);
  }
  if (tb.wall) throw std::invalid_argument("P on the wall branch needs t >= k");
  long d = k - t;
  return static_cast<int>((d / T) * tb.down[T] + tb.down[d % T]);
}

int Context::pos(long s, int k) const {
  if (s < 1) return 0;
  return seq_.pos_of(static_cast<int>(s), k);
}

}  // namespace crystal_poly
