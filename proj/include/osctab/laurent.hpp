#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace osctab {

// Sparse multivariate Laurent polynomial with exact 64-bit integer
// coefficients.  Exponent vectors have fixed length nvars and may be
// negative; zero coefficients are never stored.
class LaurentPoly {
 public:
  explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}

  static LaurentPoly constant(int nvars, std::int64_t c);
  static LaurentPoly monomial(std::vector<int> exponents, std::int64_t c);
  // x_index^power, index 1-based.
  static LaurentPoly variable(int nvars, int index, int power = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(const std::vector<int>& exponents) const;
  const std::map<std::vector<int>, std::int64_t>& terms() const {
    return terms_;
  }

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly pow(unsigned e) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

 private:
  void add_term(const std::vector<int>& exponents, std::int64_t c);

  int nvars_ = 0;
  std::map<std::vector<int>, std::int64_t> terms_;
};

}  // namespace osctab
