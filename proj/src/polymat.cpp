#include "g2chev/polymat.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2chev {

Poly2 Poly2::monomial(int deg_t, int deg_u, const Rational& c) {
  if (deg_t < 0 || deg_u < 0) throw std::invalid_argument("Poly2: negative degree");
  Poly2 p;
  if (!c.is_zero()) p.terms_.push_back({key(deg_t, deg_u), c});
  return p;
}

bool Poly2::is_integral() const {
  for (const auto& [k, c] : terms_)
    if (!c.is_integer()) return false;
  return true;
}

Rational Poly2::coeff(int deg_t, int deg_u) const {
  std::uint32_t k = key(deg_t, deg_u);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const auto& term, std::uint32_t kk) { return term.first < kk; });
  if (it != terms_.end() && it->first == k) return it->second;
  return 0;
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
  Poly2 out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
      out.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->first < ia->first) {
      out.terms_.push_back(*ib++);
    } else {
      Rational c = ia->second + ib->second;
      if (!c.is_zero()) out.terms_.push_back({ia->first, c});
      ++ia;
      ++ib;
    }
  }
  return out;
}

Poly2 Poly2::operator-() const {
  Poly2 out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

Poly2 operator-(const Poly2& a, const Poly2& b) { return a + (-b); }

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 out;
  for (const auto& [ka, ca] : a.terms_) {
    Poly2 partial;
    partial.terms_.reserve(b.terms_.size());
    for (const auto& [kb, cb] : b.terms_) partial.terms_.push_back({ka + kb, ca * cb});
    out = out + partial;  // degree keys add componentwise: both fields stay small
  }
  return out;
}

Poly2 operator*(const Rational& a, const Poly2& p) {
  if (a.is_zero()) return {};
  Poly2 out = p;
  for (auto& [k, c] : out.terms_) c = a * c;
  return out;
}

Poly2 Poly2::pow(int k) const {
  Poly2 out(1);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::string Poly2::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    int dt = static_cast<int>(k >> 16), du = static_cast<int>(k & 0xffff);
    Rational mag = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    bool has_vars = dt > 0 || du > 0;
    if (!has_vars || !(mag == Rational(1))) out += mag.to_string();
    auto var = [&](const char* name, int d) {
      if (d == 0) return;
      out += name;
      if (d > 1) out += "^" + std::to_string(d);
    };
    var("t", dt);
    var("u", du);
  }
  return out;
}

PolyMatrix PolyMatrix::identity(int n) {
  PolyMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Poly2(1);
  return m;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : a_)
    if (!p.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_integral() const {
  for (const auto& p : a_)
    if (!p.is_integral()) return false;
  return true;
}

PolyMatrix operator+(const PolyMatrix& x, const PolyMatrix& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
  PolyMatrix out(x.n_);
  for (size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = x.a_[i] + y.a_[i];
  return out;
}

PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("PolyMatrix: dimension mismatch");
  int n = x.n_;
  PolyMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Poly2& xik = x.at(i, k);
      if (xik.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        const Poly2& ykj = y.at(k, j);
        if (ykj.is_zero()) continue;
        out.at(i, j) += xik * ykj;
      }
    }
  return out;
}

PolyMatrix operator*(const Poly2& s, const PolyMatrix& x) {
  PolyMatrix out(x.n_);
  for (size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = s * x.a_[i];
  return out;
}

PolyMatrix exp_nilpotent(const PolyMatrix& nil, const Poly2& f, int bound) {
  int n = nil.dim();
  PolyMatrix out(n);
  PolyMatrix power = PolyMatrix::identity(n);  // nil^k
  Rational factorial = 1;
  Poly2 fk(1);  // f^k
  for (int k = 0; k < bound; ++k) {
    if (k > 0) {
      power = power * nil;
      factorial *= k;
      fk *= f;
    }
    out = out + (Rational(1) / factorial) * (fk * power);
  }
  if (!(power * nil).is_zero())
    throw std::logic_error("exp_nilpotent: matrix is not nilpotent of order " + std::to_string(bound));
  return out;
}

}  // namespace g2chev
