#include "thl/laurent.hpp"

#include <sstream>

#include "thl/errors.hpp"

namespace thl {

LaurentPoly LaurentPoly::monomial(Coeff c, int a_exp, int z_exp) {
  LaurentPoly p;
  if (c != 0) p.terms_[{a_exp, z_exp}] = std::move(c);
  return p;
}

LaurentPoly LaurentPoly::loop_value() {
  LaurentPoly p;
  p.terms_[{1, -1}] = 1;
  p.terms_[{-1, -1}] = -1;
  return p;
}

Coeff LaurentPoly::coefficient(int a_exp, int z_exp) const {
  auto it = terms_.find({a_exp, z_exp});
  return it == terms_.end() ? Coeff(0) : it->second;
}

void LaurentPoly::trim() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [key, c] : o.terms_) terms_[key] += c;
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [key, c] : o.terms_) terms_[key] -= c;
  trim();
  return *this;
}

LaurentPoly operator*(const LaurentPoly& l, const LaurentPoly& r) {
  LaurentPoly out;
  for (const auto& [lk, lc] : l.terms_)
    for (const auto& [rk, rc] : r.terms_)
      out.terms_[{lk.first + rk.first, lk.second + rk.second}] += lc * rc;
  out.trim();
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::shifted(int da, int dz) const {
  LaurentPoly out;
  for (const auto& [key, c] : terms_)
    out.terms_[{key.first + da, key.second + dz}] = c;
  return out;
}

LaurentPoly LaurentPoly::scaled(const Coeff& c) const {
  LaurentPoly out;
  if (c == 0) return out;
  for (const auto& [key, coeff] : terms_) out.terms_[key] = coeff * c;
  return out;
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) throw NotApplicable("negative polynomial power");
  LaurentPoly out = one();
  LaurentPoly base = *this;
  for (; n > 0; n >>= 1) {
    if (n & 1) out *= base;
    if (n > 1) base *= base;
  }
  return out;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly out;
  for (const auto& [key, c] : terms_) {
    Coeff flipped = (key.second % 2 != 0) ? Coeff(-c) : c;
    out.terms_[{-key.first, key.second}] = std::move(flipped);
  }
  return out;
}

std::string LaurentPoly::text() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    Coeff mag = c < 0 ? Coeff(-c) : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;

    std::string vars;
    for (auto [name, e] : {std::pair{'a', key.first}, {'z', key.second}}) {
      if (e == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += name;
      if (e != 1) vars += '^' + std::to_string(e);
    }
    if (vars.empty())
      out << mag.str();
    else if (mag == 1)
      out << vars;
    else
      out << mag.str() << '*' << vars;
  }
  return out.str();
}

}  // namespace thl
