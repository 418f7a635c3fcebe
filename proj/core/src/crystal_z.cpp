#include "crystal_poly/crystal_z.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace crystal_poly {

WeightSpec WeightSpec::inf(int n) {
  WeightSpec w;
  w.infinity = true;
  w.m.assign(n + 1, 0);
  return w;
}

WeightSpec WeightSpec::zero(int n) {
  WeightSpec w;
  w.m.assign(n + 1, 0);
  return w;
}

WeightSpec WeightSpec::fundamental(int n, int k, int mult) { return zero(n).add(k, mult); }

WeightSpec& WeightSpec::add(int k, int mult) {
  if (k < 1 || k > n()) throw std::invalid_argument("weight index out of range");
  if (m[k] + mult < 0) throw std::invalid_argument("weight must be dominant");
  m[k] += mult;
  return *this;
}

std::string WeightSpec::str() const {
  if (infinity) return "inf";
  std::string s;
  for (int k = 1; k <= n(); ++k) {
    if (m[k] == 0) continue;
    if (!s.empty()) s += "+";
    if (m[k] != 1) s += std::to_string(m[k]) + "*";
    s += "L" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

Crystal::Crystal(const Context& ctx, WeightSpec lambda) : ctx_(&ctx), lambda_(std::move(lambda)) {
  if (lambda_.n() != ctx.n()) throw std::invalid_argument("weight rank does not match type");
}

std::vector<long> Crystal::all_sigmas(const ZVector& a, int upto) const {
  const int n = ctx_->n();
  const auto& seq = ctx_->seq();
  std::vector<long> sig(upto + 1, 0);
  std::vector<long> tail(n + 1, 0);  // tail[c] = sum_{j>r} a_{c,i_j} a_j
  for (int r = upto; r >= 1; --r) {
    const int c = seq.color(r);
    const int ar = a[r];
    sig[r] = ar + tail[c];
    if (ar != 0)
      for (int d = 1; d <= n; ++d) tail[d] += static_cast<long>(ctx_->a(d, c)) * ar;
  }
  return sig;
}

long Crystal::sigma_r(const ZVector& a, int r) const {
  long s = a[r];
  const int c = ctx_->seq().color(r);
  for (int j = r + 1; j <= a.max_pos(); ++j) s += static_cast<long>(ctx_->a(c, ctx_->seq().color(j))) * a[j];
  return s;
}

std::optional<long> Crystal::sigma0(const ZVector& a, int k) const {
  if (lambda_.infinity) return std::nullopt;
  long s = -lambda_(k);
  for (int j = 1; j <= a.max_pos(); ++j) s += static_cast<long>(ctx_->a(k, ctx_->seq().color(j))) * a[j];
  return s;
}

Crystal::KInfo Crystal::k_info(const ZVector& a, int k) const {
  // Beyond max_pos every sigma_r is 0, and one extra period reaches every color.
  const int upto = a.max_pos() + ctx_->period();
  auto sig = all_sigmas(a, upto);
  const auto& seq = ctx_->seq();
  KInfo info;
  info.sigma = std::numeric_limits<long>::min();
  for (int r = 1; r <= upto; ++r) {
    if (seq.color(r) != k) continue;
    if (sig[r] > info.sigma) {
      info.sigma = sig[r];
      info.min_arg = r;
      info.max_arg = r;
    } else if (sig[r] == info.sigma) {
      info.max_arg = r;
    }
  }
  return info;
}

std::optional<ZVector> Crystal::f(int k, const ZVector& a) const {
  KInfo info = k_info(a, k);
  auto s0 = sigma0(a, k);
  if (s0 && !(info.sigma > *s0)) return std::nullopt;
  ZVector b = a;
  b.add(info.min_arg, 1);
  return b;
}

std::optional<ZVector> Crystal::e(int k, const ZVector& a) const {
  KInfo info = k_info(a, k);
  if (info.sigma <= 0) return std::nullopt;
  auto s0 = sigma0(a, k);
  if (s0 && info.sigma < *s0) return std::nullopt;
  ZVector b = a;
  b.add(info.max_arg, -1);
  return b;
}

Weight Crystal::wt(const ZVector& a) const {
  Weight w;
  w.infinity = lambda_.infinity;
  w.lambda = lambda_.m;
  w.alpha.assign(ctx_->n() + 1, 0);
  for (int j = 1; j <= a.max_pos(); ++j) w.alpha[ctx_->seq().color(j)] += a[j];
  return w;
}

long Crystal::wt_pairing(int k, const ZVector& a) const {
  long s = lambda_(k);
  for (int j = 1; j <= a.max_pos(); ++j) s -= static_cast<long>(ctx_->a(k, ctx_->seq().color(j))) * a[j];
  return s;
}

long Crystal::epsilon(int k, const ZVector& a) const {
  long s = k_info(a, k).sigma;
  auto s0 = sigma0(a, k);
  return s0 && *s0 > s ? *s0 : s;
}

long Crystal::phi(int k, const ZVector& a) const { return wt_pairing(k, a) + epsilon(k, a); }

std::optional<ZVector> Crystal::apply_word(const std::vector<int>& word, ZVector a) const {
  for (int k : word) {
    auto b = f(k, a);
    if (!b) return std::nullopt;
    a = std::move(*b);
  }
  return a;
}

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

long read_int(const std::string& s, std::size_t& i) {
  skip_ws(s, i);
  std::size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (start == i || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
    throw std::invalid_argument("expected integer in vector text at offset " + std::to_string(start));
  return std::stol(s.substr(start, i - start));
}

void expect(const std::string& s, std::size_t& i, char c) {
  skip_ws(s, i);
  if (i >= s.size() || s[i] != c)
    throw std::invalid_argument(std::string("expected '") + c + "' in vector text at offset " + std::to_string(i));
  ++i;
}

}  // namespace

ZVector parse_zvector(const std::string& text, const AdaptedSequence& seq) {
  std::size_t i = 0;
  skip_ws(text, i);
  if (i >= text.size()) throw std::invalid_argument("empty vector text");
  std::vector<int> flat;
  if (text[i] == '[') {
    ++i;
    skip_ws(text, i);
    if (i < text.size() && text[i] == ']') return ZVector{};
    while (true) {
      flat.push_back(static_cast<int>(read_int(text, i)));
      skip_ws(text, i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      expect(text, i, ']');
      break;
    }
  } else if (text[i] == '{') {
    ++i;
    skip_ws(text, i);
    if (i < text.size() && text[i] == '}') return ZVector{};
    while (true) {
      expect(text, i, '(');
      long s = read_int(text, i);
      expect(text, i, ',');
      long k = read_int(text, i);
      expect(text, i, ')');
      expect(text, i, ':');
      long v = read_int(text, i);
      if (s < 1 || k < 1 || k > seq.n()) throw std::invalid_argument("bad (s,k) label in vector text");
      int r = seq.pos_of(static_cast<int>(s), static_cast<int>(k));
      if (r > static_cast<int>(flat.size())) flat.resize(r, 0);
      flat[r - 1] += static_cast<int>(v);
      skip_ws(text, i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      expect(text, i, '}');
      break;
    }
  } else {
    // Bare flat list: "a1 a2 ..." (spaces or commas).
    while (i < text.size()) {
      flat.push_back(static_cast<int>(read_int(text, i)));
      skip_ws(text, i);
      if (i < text.size() && text[i] == ',') ++i;
      skip_ws(text, i);
    }
  }
  for (int v : flat)
    if (v < 0) throw std::invalid_argument("vector entries must be nonnegative");
  return ZVector(std::move(flat));
}

std::string format_flat(const ZVector& a) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.flat().size(); ++i) os << (i ? "," : "") << a.flat()[i];
  os << "]";
  return os.str();
}

std::string format_pairs(const ZVector& a, const AdaptedSequence& seq) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int r = 1; r <= a.max_pos(); ++r) {
    if (a[r] == 0) continue;
    auto [s, k] = seq.pair_of(r);
    os << (first ? "" : ", ") << "(" << s << "," << k << "):" << a[r];
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace crystal_poly
