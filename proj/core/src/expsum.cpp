#include "vswap/expsum.hpp"

#include <cmath>

#include "vswap/numerics.hpp"

namespace vswap {

namespace {
bool close(double a, double b) {
  return std::abs(a - b) <= 1e-12 * (1.0 + std::max(std::abs(a), std::abs(b)));
}
}  // namespace

ExpSum1 ExpSum1::constant(double c) { return term(c, 0.0); }

ExpSum1 ExpSum1::term(double c, double alpha) {
  ExpSum1 f;
  f.add(c, alpha);
  return f;
}

ExpSum1& ExpSum1::add(double c, double alpha) {
  if (c == 0.0) return *this;
  for (auto& t : terms_) {
    if (close(t.alpha, alpha)) {
      t.c += c;
      return *this;
    }
  }
  terms_.push_back({c, alpha});
  return *this;
}

ExpSum1& ExpSum1::operator+=(const ExpSum1& other) {
  for (const auto& t : other.terms_) add(t.c, t.alpha);
  return *this;
}

ExpSum1& ExpSum1::operator*=(double factor) {
  for (auto& t : terms_) t.c *= factor;
  return *this;
}

ExpSum1 ExpSum1::operator+(const ExpSum1& other) const {
  ExpSum1 out = *this;
  out += other;
  return out;
}

ExpSum1 ExpSum1::operator*(const ExpSum1& other) const {
  ExpSum1 out;
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      out.add(a.c * b.c, a.alpha + b.alpha);
    }
  }
  return out;
}

ExpSum1 ExpSum1::operator*(double factor) const {
  ExpSum1 out = *this;
  out *= factor;
  return out;
}

double ExpSum1::eval(double s) const {
  double sum = 0.0;
  for (const auto& t : terms_) sum += t.c * std::exp(t.alpha * s);
  return sum;
}

double ExpSum1::integral(double a, double b) const {
  double sum = 0.0;
  for (const auto& t : terms_) sum += t.c * exp_integral(t.alpha, a, b);
  return sum;
}

ExpSum2& ExpSum2::add(double c, double alpha, double beta) {
  if (c == 0.0) return *this;
  for (auto& t : terms_) {
    if (close(t.alpha, alpha) && close(t.beta, beta)) {
      t.c += c;
      return *this;
    }
  }
  terms_.push_back({c, alpha, beta});
  return *this;
}

ExpSum2& ExpSum2::operator+=(const ExpSum2& other) {
  for (const auto& t : other.terms_) add(t.c, t.alpha, t.beta);
  return *this;
}

ExpSum2& ExpSum2::operator*=(double factor) {
  for (auto& t : terms_) t.c *= factor;
  return *this;
}

ExpSum2 ExpSum2::of_s(const ExpSum1& f) {
  ExpSum2 out;
  for (const auto& t : f.terms()) out.add(t.c, t.alpha, 0.0);
  return out;
}

ExpSum2 ExpSum2::of_u(const ExpSum1& f) {
  ExpSum2 out;
  for (const auto& t : f.terms()) out.add(t.c, 0.0, t.alpha);
  return out;
}

ExpSum2 ExpSum2::shifted(double alpha, double beta) const {
  ExpSum2 out;
  for (const auto& t : terms_) out.add(t.c, t.alpha + alpha, t.beta + beta);
  return out;
}

double ExpSum2::eval(double s, double u) const {
  double sum = 0.0;
  for (const auto& t : terms_) sum += t.c * std::exp(t.alpha * s + t.beta * u);
  return sum;
}

double ExpSum2::ordered_integral(double a, double b) const {
  const double delta = b - a;
  double sum = 0.0;
  for (const auto& t : terms_) {
    sum += t.c * std::exp((t.alpha + t.beta) * a) *
           exp_double_integral(t.alpha, t.beta, delta);
  }
  return sum;
}

}  // namespace vswap
