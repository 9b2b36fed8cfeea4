#include "osctab/laurent.hpp"

#include <stdexcept>

namespace osctab {

LaurentPoly LaurentPoly::constant(int nvars, std::int64_t c) {
  LaurentPoly p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<int> exponents, std::int64_t c) {
  LaurentPoly p(static_cast<int>(exponents.size()));
  p.add_term(exponents, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int index, int power) {
  if (index < 1 || index > nvars)
    throw std::invalid_argument("variable index out of range");
  std::vector<int> exps(nvars, 0);
  exps[index - 1] = power;
  return monomial(std::move(exps), 1);
}

std::int64_t LaurentPoly::coeff(const std::vector<int>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(const std::vector<int>& exponents, std::int64_t c) {
  if (static_cast<int>(exponents.size()) != nvars_)
    throw std::invalid_argument("exponent vector length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.nvars_ != nvars_)
    throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (other.nvars_ != nvars_)
    throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_)
    throw std::invalid_argument("variable count mismatch");
  LaurentPoly out(a.nvars_);
  std::vector<int> e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly out = constant(nvars_, 1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1u) out = out * base;
    base = base * base;
    e >>= 1u;
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += c >= 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    std::int64_t a = c >= 0 ? c : -c;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out += std::to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += std::to_string(a) + "*" + mono;
  }
  return out;
}

}  // namespace osctab
