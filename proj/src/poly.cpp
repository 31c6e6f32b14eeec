#include "unimod/poly.hpp"

#include <algorithm>
#include <sstream>

namespace unimod {

Polynomial Polynomial::constant(const Rat& c) {
  Polynomial p;
  p.add({}, c);
  return p;
}

Polynomial Polynomial::var(int index) {
  Polynomial p;
  p.add({index}, 1);
  return p;
}

void Polynomial::add(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add(m, c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.add(m, -c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m;
      std::merge(m1.begin(), m1.end(), m2.begin(), m2.end(), std::back_inserter(m));
      r.add(m, c1 * c2);
    }
  return r;
}

int Polynomial::degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

Polynomial Polynomial::substitute(const std::map<int, Rat>& values) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    Monomial rest;
    Rat coeff = c;
    for (int v : m) {
      auto it = values.find(v);
      if (it == values.end())
        rest.push_back(v);
      else
        coeff *= it->second;
    }
    r.add(rest, coeff);
  }
  return r;
}

std::map<Polynomial::Monomial, Polynomial> Polynomial::collect(const std::function<bool(int)>& outer) const {
  std::map<Monomial, Polynomial> out;
  for (const auto& [m, c] : terms_) {
    Monomial key, inner;
    for (int v : m) (outer(v) ? key : inner).push_back(v);
    out[key].add(inner, c);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::string Polynomial::str(const std::function<std::string(int)>& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const Rat mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    const bool show = mag != 1 || m.empty();
    if (show) os << mag.get_str();
    for (std::size_t k = 0; k < m.size(); ++k) os << (k || show ? "*" : "") << name(m[k]);
    first = false;
  }
  return os.str();
}

}  // namespace unimod
