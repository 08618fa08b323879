#pragma once

#include <vector>

namespace vswap {

// Finite linear combinations of exponentials.  The Ornstein-Uhlenbeck
// moment kernels are all of this shape, so per-interval single and
// double integrals can be carried out exactly (no quadrature error).

// sum_k c_k * e^{alpha_k * s}
class ExpSum1 {
 public:
  ExpSum1() = default;
  static ExpSum1 constant(double c);
  static ExpSum1 term(double c, double alpha);

  ExpSum1& add(double c, double alpha);
  ExpSum1& operator+=(const ExpSum1& other);
  ExpSum1& operator*=(double factor);

  ExpSum1 operator+(const ExpSum1& other) const;
  ExpSum1 operator*(const ExpSum1& other) const;  // convolution of exponents
  ExpSum1 operator*(double factor) const;

  double eval(double s) const;
  double integral(double a, double b) const;  // int_a^b, stable

  std::size_t size() const { return terms_.size(); }

  struct Term {
    double c;
    double alpha;
  };
  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;
};

// sum_k c_k * e^{alpha_k * s + beta_k * u}
class ExpSum2 {
 public:
  ExpSum2() = default;

  ExpSum2& add(double c, double alpha, double beta);
  ExpSum2& operator+=(const ExpSum2& other);
  ExpSum2& operator*=(double factor);

  // Treat an ExpSum1 as a function of s (beta = 0) or of u (alpha = 0).
  static ExpSum2 of_s(const ExpSum1& f);
  static ExpSum2 of_u(const ExpSum1& f);

  // Multiply by e^{alpha*s + beta*u}.
  ExpSum2 shifted(double alpha, double beta) const;

  double eval(double s, double u) const;

  // int_a^b du int_a^u ds f(s, u): the ordered triangle s <= u.
  double ordered_integral(double a, double b) const;

  std::size_t size() const { return terms_.size(); }

  struct Term {
    double c;
    double alpha;
    double beta;
  };
  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;
};

}  // namespace vswap
