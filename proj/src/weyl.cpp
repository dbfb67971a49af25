#include "qorb/weyl.hpp"

#include <sstream>

namespace qorb {

YDeg deg_add(const YDeg& a, const YDeg& b) {
  YDeg r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

int cap_shift(int cap, int delta) {
  if (cap == kUncapped) return kUncapped;
  long s = static_cast<long>(cap) + delta;
  return s >= kUncapped ? kUncapped : static_cast<int>(s);
}

int product_cap(int cap_a, int wmin_a, int cap_b, int wmin_b) {
  return std::min(cap_shift(cap_a, wmin_b), cap_shift(cap_b, wmin_a));
}

SymplecticSpace::SymplecticSpace(const Mat& form) : dim(form.rows()), B(form), omega() {
  if (form.rows() != form.cols() || form.rows() % 2 != 0)
    throw Error(ErrorKind::NonSymplectic, "form matrix must be square of even dimension");
  if (form.transpose() != -form)
    throw Error(ErrorKind::NonSymplectic, "form matrix must be antisymmetric");
  auto inv = form.inverse();
  if (!inv) throw Error(ErrorKind::NonSymplectic, "form matrix must be invertible");
  omega = *inv;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (!B.at(i, j).is_zero()) b_entries.emplace_back(i, j, B.at(i, j));
}

SpacePtr make_space(const Mat& B) { return std::make_shared<const SymplecticSpace>(B); }

SpacePtr standard_space(int n) {
  Mat B(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    B.at(2 * k, 2 * k + 1) = Cyc(1L);
    B.at(2 * k + 1, 2 * k) = Cyc(-1L);
  }
  return make_space(B);
}

namespace {
void check_same_space(const Weyl& a, const Weyl& b) {
  if (!a.space() || !b.space()) {
    if (a.is_zero() || b.is_zero()) return;
    throw Error(ErrorKind::DimensionMismatch, "weyl element without a space");
  }
  if (a.space() != b.space() && a.space()->B != b.space()->B)
    throw Error(ErrorKind::DimensionMismatch, "weyl elements live on different spaces");
}
}  // namespace

Weyl Weyl::scalar(SpacePtr sp, const Cyc& c, int hbar, int cap) {
  Weyl w(std::move(sp), cap);
  w.add_term(hbar, YDeg(w.dim(), 0), c);
  return w;
}

Weyl Weyl::monomial(SpacePtr sp, int hbar, YDeg deg, const Cyc& c, int cap) {
  Weyl w(std::move(sp), cap);
  if (static_cast<int>(deg.size()) != w.dim())
    throw Error(ErrorKind::DimensionMismatch, "multidegree length mismatch");
  w.add_term(hbar, deg, c);
  return w;
}

Weyl Weyl::coordinate(SpacePtr sp, int i) {
  Weyl w(std::move(sp));
  YDeg d(w.dim(), 0);
  d.at(i) = 1;
  w.add_term(0, d, Cyc(1L));
  return w;
}

Weyl Weyl::linear(SpacePtr sp, const std::vector<Cyc>& v) {
  Weyl w(std::move(sp));
  if (static_cast<int>(v.size()) != w.dim())
    throw Error(ErrorKind::DimensionMismatch, "linear coefficient length mismatch");
  for (int i = 0; i < w.dim(); ++i) {
    YDeg d(w.dim(), 0);
    d[i] = 1;
    w.add_term(0, d, v[i]);
  }
  return w;
}

int Weyl::weight() const {
  int w = kUncapped;
  for (const auto& [k, c] : t_) w = std::min(w, 2 * k.first + deg_total(k.second));
  return w;
}

Cyc Weyl::coeff(int hbar, const YDeg& deg) const {
  auto it = t_.find({hbar, deg});
  return it == t_.end() ? Cyc() : it->second;
}

void Weyl::add_term(int hbar, const YDeg& deg, const Cyc& c) {
  if (c.is_zero()) return;
  if (cap_ != kUncapped && 2 * hbar + deg_total(deg) >= cap_) return;
  Key k{hbar, deg};
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(std::move(k), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Weyl Weyl::operator-() const {
  Weyl r = *this;
  for (auto& [k, c] : r.t_) c = -c;
  return r;
}

Weyl Weyl::operator+(const Weyl& o) const {
  check_same_space(*this, o);
  Weyl r(sp_ ? sp_ : o.sp_, std::min(cap_, o.cap_));
  for (const auto& [k, c] : t_) r.add_term(k.first, k.second, c);
  for (const auto& [k, c] : o.t_) r.add_term(k.first, k.second, c);
  return r;
}

Weyl Weyl::operator-(const Weyl& o) const { return *this + (-o); }

Weyl Weyl::operator*(const Cyc& c) const {
  Weyl r(sp_, cap_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : t_) r.t_[k] = v * c;
  return r;
}

Weyl Weyl::shifted_hbar(int k) const {
  Weyl r(sp_, cap_shift(cap_, 2 * k));
  for (const auto& [key, c] : t_) r.t_[{key.first + k, key.second}] = c;
  return r;
}

Weyl Weyl::truncated(int cap) const {
  Weyl r(sp_, std::min(cap_, cap));
  for (const auto& [k, c] : t_) r.add_term(k.first, k.second, c);
  return r;
}

Weyl Weyl::with_cap(int cap) const {
  Weyl r = truncated(cap);
  r.cap_ = cap;
  return r;
}

bool Weyl::equal_below(const Weyl& o, int bound) const {
  auto below = [bound](const std::map<Key, Cyc>& m, const std::map<Key, Cyc>& other) {
    for (const auto& [k, c] : m) {
      if (2 * k.first + deg_total(k.second) >= bound) continue;
      auto it = other.find(k);
      if (it == other.end() ? !c.is_zero() : it->second != c) return false;
    }
    return true;
  };
  return below(t_, o.t_) && below(o.t_, t_);
}

std::string Weyl::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")";
    if (k.first != 0) os << "h^" << k.first;
    for (size_t i = 0; i < k.second.size(); ++i)
      if (k.second[i] > 0) {
        os << "y" << (i + 1);
        if (k.second[i] > 1) os << "^" << k.second[i];
      }
    first = false;
  }
  if (first) os << "0";
  if (cap_ != kUncapped) os << " [w<" << cap_ << "]";
  return os.str();
}

void moyal_contract(const SymplecticSpace& sp, const YDeg& left, const YDeg& right,
                    const std::function<void(int, const Cyc&, const YDeg&, const YDeg&)>& emit) {
  YDeg a = left, b = right;
  std::function<void(size_t, int, const Cyc&)> rec = [&](size_t idx, int t, const Cyc& coeff) {
    if (idx == sp.b_entries.size()) {
      emit(t, coeff, a, b);
      return;
    }
    const auto& [i, j, bij] = sp.b_entries[idx];
    rec(idx + 1, t, coeff);  // no contraction through this entry
    Cyc c = coeff;
    int theta = 0;
    while (a[i] > 0 && b[j] > 0) {
      ++theta;
      // one more derivative pair: falling factorials a[i], b[j]; running
      // (1/2)^t and 1/theta! via the factor 1/(2 theta)
      c *= bij * Cyc(rat(static_cast<long>(a[i]) * b[j], 2L * theta));
      --a[i];
      --b[j];
      rec(idx + 1, t + theta, c);
    }
    a[i] += theta;
    b[j] += theta;
  };
  rec(0, 0, Cyc(1L));
}

Weyl moyal(const Weyl& a, const Weyl& b) {
  check_same_space(a, b);
  const SpacePtr& sp = a.space() ? a.space() : b.space();
  Weyl r(sp, product_cap(a.cap(), a.weight(), b.cap(), b.weight()));
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Cyc prod = ca * cb;
      moyal_contract(*sp, ka.second, kb.second,
                     [&](int t, const Cyc& c, const YDeg& ya, const YDeg& yb) {
                       r.add_term(ka.first + kb.first + t, deg_add(ya, yb), prod * c);
                     });
    }
  return r;
}

Weyl cmul(const Weyl& a, const Weyl& b) {
  check_same_space(a, b);
  const SpacePtr& sp = a.space() ? a.space() : b.space();
  Weyl r(sp, product_cap(a.cap(), a.weight(), b.cap(), b.weight()));
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      r.add_term(ka.first + kb.first, deg_add(ka.second, kb.second), ca * cb);
  return r;
}

Weyl moyal_comm(const Weyl& a, const Weyl& b) { return moyal(a, b) - moyal(b, a); }

Weyl dy(const Weyl& a, int i) {
  Weyl r(a.space(), cap_shift(a.cap(), -1));
  for (const auto& [k, c] : a.terms()) {
    if (k.second[i] == 0) continue;
    YDeg d = k.second;
    Cyc f = Cyc(static_cast<long>(d[i]));
    --d[i];
    r.add_term(k.first, d, c * f);
  }
  return r;
}

Weyl subst(const Weyl& a, const Mat& S) {
  if (S.rows() != a.dim() || S.cols() != a.dim())
    throw Error(ErrorKind::DimensionMismatch, "substitution matrix shape mismatch");
  int n = a.dim();
  // images of the coordinates: y^i -> sum_k S_{ik} y^k
  std::vector<Weyl> img(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Cyc> row(n);
    for (int k = 0; k < n; ++k) row[k] = S.at(i, k);
    img[i] = Weyl::linear(a.space(), row);
  }
  Weyl r(a.space(), a.cap());
  for (const auto& [key, c] : a.terms()) {
    Weyl term = Weyl::scalar(a.space(), c, key.first);
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < key.second[i]; ++e) term = cmul(term, img[i]);
    r += term.with_cap(a.cap());
  }
  return r;
}

Weyl act_on_weyl(const Mat& g, const Weyl& a) { return subst(a, g.transpose()); }

Weyl random_weyl(std::mt19937_64& rng, const SpacePtr& sp, int maxdeg, int nterms, long cmax) {
  std::uniform_int_distribution<int> pick_deg(0, maxdeg);
  std::uniform_int_distribution<int> pick_var(0, sp->dim - 1);
  std::uniform_int_distribution<long> pick_coeff(-cmax, cmax);
  Weyl r(sp);
  for (int t = 0; t < nterms; ++t) {
    YDeg d(sp->dim, 0);
    int deg = pick_deg(rng);
    for (int e = 0; e < deg; ++e) ++d[pick_var(rng)];
    r.add_term(0, d, Cyc(pick_coeff(rng)));
  }
  return r;
}

}  // namespace qorb
