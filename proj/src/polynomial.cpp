#include "skewsign/polynomial.hpp"

#include <numeric>

#include "skewsign/errors.hpp"

namespace skewsign {

int Monomial::x_degree() const { return std::accumulate(x.begin(), x.end(), 0); }
int Monomial::y_degree() const { return std::accumulate(y.begin(), y.end(), 0); }

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.x_degree() + a.y_degree();
  const int db = b.x_degree() + b.y_degree();
  if (da != db) return da < db;
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.s < b.s;
}

TruncatedPolynomial::TruncatedPolynomial(int num_x, int num_y, int cap_x, int cap_y)
    : num_x_(num_x), num_y_(num_y), cap_x_(cap_x), cap_y_(cap_y) {
  if (num_x < 0 || num_y < 0 || cap_x < 0 || cap_y < 0)
    throw CapMismatch("variable counts and degree caps must be non-negative");
}

TruncatedPolynomial TruncatedPolynomial::constant(int num_x, int num_y, int cap_x, int cap_y,
                                                  const Coeff& value) {
  TruncatedPolynomial p(num_x, num_y, cap_x, cap_y);
  p.add_term(p.unit_monomial(), value);
  return p;
}

Coeff TruncatedPolynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Coeff(0) : it->second;
}

void TruncatedPolynomial::require_arity(const Monomial& m) const {
  if (static_cast<int>(m.x.size()) != num_x_ || static_cast<int>(m.y.size()) != num_y_)
    throw CapMismatch("monomial arity does not match the polynomial ring");
}

void TruncatedPolynomial::add_term(const Monomial& m, const Coeff& c) {
  require_arity(m);
  if (c == 0) return;
  if (m.x_degree() > cap_x_ || m.y_degree() > cap_y_) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Monomial TruncatedPolynomial::unit_monomial() const {
  Monomial m;
  m.x.assign(static_cast<std::size_t>(num_x_), 0);
  m.y.assign(static_cast<std::size_t>(num_y_), 0);
  return m;
}

TruncatedPolynomial TruncatedPolynomial::with_axes_swapped() const {
  TruncatedPolynomial out(num_y_, num_x_, cap_y_, cap_x_);
  for (const auto& [m, c] : terms_) {
    Monomial swapped;
    swapped.x = m.y;
    swapped.y = m.x;
    swapped.s = m.s;
    out.add_term(swapped, c);
  }
  return out;
}

void TruncatedPolynomial::require_same_ring(const TruncatedPolynomial& other) const {
  if (num_x_ != other.num_x_ || num_y_ != other.num_y_ || cap_x_ != other.cap_x_ ||
      cap_y_ != other.cap_y_)
    throw CapMismatch("polynomial rings differ in variable counts or degree caps");
}

TruncatedPolynomial operator+(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
  a.require_same_ring(b);
  TruncatedPolynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

TruncatedPolynomial operator-(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
  a.require_same_ring(b);
  TruncatedPolynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
  return out;
}

TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
  a.require_same_ring(b);
  TruncatedPolynomial out(a.num_x_, a.num_y_, a.cap_x_, a.cap_y_);
  for (const auto& [ma, ca] : a.terms_) {
    const int xa = ma.x_degree();
    const int ya = ma.y_degree();
    for (const auto& [mb, cb] : b.terms_) {
      if (xa + mb.x_degree() > a.cap_x_ || ya + mb.y_degree() > a.cap_y_) continue;
      Monomial m = ma;
      for (std::size_t i = 0; i < m.x.size(); ++i) m.x[i] += mb.x[i];
      for (std::size_t i = 0; i < m.y.size(); ++i) m.y[i] += mb.y[i];
      m.s += mb.s;
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

bool operator==(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
  a.require_same_ring(b);
  return a.terms_ == b.terms_;
}

}  // namespace skewsign
