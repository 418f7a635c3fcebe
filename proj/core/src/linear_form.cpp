#include "crystal_poly/linear_form.hpp"

#include <algorithm>
#include <sstream>

namespace crystal_poly {

ZVector::ZVector(std::vector<int> flat) : v_(std::move(flat)) { trim(); }

void ZVector::trim() {
  while (!v_.empty() && v_.back() == 0) v_.pop_back();
}

void ZVector::add(int r, int delta) {
  if (r < 1) return;
  if (r > static_cast<int>(v_.size())) v_.resize(r, 0);
  v_[r - 1] += delta;
  trim();
}

long ZVector::total() const {
  long s = 0;
  for (int x : v_) s += x;
  return s;
}

bool ZVector::nonnegative() const {
  return std::all_of(v_.begin(), v_.end(), [](int x) { return x >= 0; });
}

bool operator<(const ZVector& a, const ZVector& b) {
  if (a.v_.size() != b.v_.size()) return a.v_.size() < b.v_.size();
  return a.v_ < b.v_;
}

std::size_t ZVectorHash::operator()(const ZVector& z) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : z.flat()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

LinearForm LinearForm::var(int r, long c) {
  LinearForm f;
  f.add_term(r, c);
  return f;
}

long LinearForm::coeff(int r) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), r,
                             [](const Term& t, int p) { return t.first < p; });
  return it != terms_.end() && it->first == r ? it->second : 0;
}

void LinearForm::add_term(int r, long c) {
  if (r < 1 || c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), r,
                             [](const Term& t, int p) { return t.first < p; });
  if (it != terms_.end() && it->first == r) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {r, c});
  }
}

void LinearForm::merge(const LinearForm& o, long sign) {
  constant_ += sign * o.constant_;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == terms_.end() || j->first < i->first) {
      out.emplace_back(j->first, sign * j->second);
      ++j;
    } else {
      long c = i->second + sign * j->second;
      if (c != 0) out.emplace_back(i->first, c);
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  merge(o, 1);
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
  merge(o, -1);
  return *this;
}

LinearForm LinearForm::operator-() const { return scaled(-1); }

LinearForm LinearForm::scaled(long k) const {
  LinearForm f;
  if (k == 0) return f;
  f.constant_ = constant_ * k;
  f.terms_ = terms_;
  for (auto& t : f.terms_) t.second *= k;
  return f;
}

long LinearForm::eval(const ZVector& a) const {
  long v = constant_;
  for (const auto& [r, c] : terms_) v += c * a[r];
  return v;
}

bool operator<(const LinearForm& a, const LinearForm& b) {
  if (a.max_pos() != b.max_pos()) return a.max_pos() < b.max_pos();
  if (a.terms_ != b.terms_) return a.terms_ < b.terms_;
  return a.constant_ < b.constant_;
}

std::size_t LinearFormHash::operator()(const LinearForm& f) const noexcept {
  std::size_t h = std::hash<long>{}(f.constant());
  for (const auto& [r, c] : f.terms()) {
    h ^= std::hash<long>{}(static_cast<long>(r) * 1000003L + c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

template <class Label>
std::string render(const LinearForm& f, Label label) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, c] : f.terms()) {
    long m = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (m != 1) os << m << "*";
    os << label(r);
    first = false;
  }
  if (f.constant() != 0 || first) {
    if (first) {
      os << f.constant();
    } else {
      os << (f.constant() < 0 ? " - " : " + ") << (f.constant() < 0 ? -f.constant() : f.constant());
    }
  }
  return os.str();
}

}  // namespace

std::string to_string(const LinearForm& f, const AdaptedSequence& seq) {
  return render(f, [&](int r) {
    auto [s, k] = seq.pair_of(r);
    return "x[" + std::to_string(s) + "," + std::to_string(k) + "]";
  });
}

std::string to_string_flat(const LinearForm& f) {
  return render(f, [](int r) { return "x" + std::to_string(r); });
}

LinearForm form_from_pairs(const Context& ctx, long constant,
                           const std::vector<std::tuple<long, int, long>>& terms) {
  LinearForm f(constant);
  for (const auto& [s, k, c] : terms) f.add_term(ctx.pos(s, k), c);
  return f;
}

}  // namespace crystal_poly
