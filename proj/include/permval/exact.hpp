#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace permval::exact {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RatVector = std::vector<Rational>;

inline std::string str(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

inline std::string str(const Int& z) {
  std::ostringstream os;
  os << z;
  return os.str();
}

inline Rational parse_rational(const std::string& text) {
  if (text.empty())
    throw std::runtime_error("permval::parse_rational: cannot parse ''");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw std::runtime_error("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::runtime_error("permval::parse_rational: cannot parse '" + text + "'");
  }
}

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Rational inner_product(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size())
    throw std::runtime_error("permval::inner_product: dimension mismatch");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Unique polynomial of degree < nodes.size() through all (node, value) pairs,
// coefficients ascending. Newton divided differences, exact.
inline std::vector<Rational> solve_vandermonde(const std::vector<Rational>& nodes,
                                               const std::vector<Rational>& values) {
  if (nodes.size() != values.size())
    throw std::runtime_error("permval::solve_vandermonde: nodes/values size mismatch");
  if (nodes.empty())
    throw std::runtime_error("permval::solve_vandermonde: empty input");
  const size_t d = nodes.size() - 1;
  std::vector<Rational> dd = values;
  for (size_t j = 1; j <= d; ++j) {
    for (size_t i = d; i >= j; --i) {
      Rational gap = nodes[i] - nodes[i - j];
      if (gap == 0)
        throw std::runtime_error("permval::solve_vandermonde: repeated nodes");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
      if (i == j) break;
    }
  }
  // expand dd[0] + dd[1](t-x0) + dd[2](t-x0)(t-x1) + ...
  std::vector<Rational> coeffs(d + 1, Rational(0));
  std::vector<Rational> basis{Rational(1)};
  for (size_t k = 0; k <= d; ++k) {
    for (size_t i = 0; i < basis.size(); ++i) coeffs[i] += dd[k] * basis[i];
    if (k == d) break;
    std::vector<Rational> next(basis.size() + 1, Rational(0));
    for (size_t i = 0; i < basis.size(); ++i) {
      next[i + 1] += basis[i];
      next[i] -= nodes[k] * basis[i];
    }
    basis = std::move(next);
  }
  return coeffs;
}

inline Rational evaluate_polynomial(const std::vector<Rational>& coeffs, const Rational& t) {
  Rational v = 0;
  for (size_t i = coeffs.size(); i-- > 0;) v = v * t + coeffs[i];
  return v;
}

// v minus its orthogonal projection onto span(basis); exact Gram-Schmidt.
inline RatVector project_orthogonal(const RatVector& v, const std::vector<RatVector>& basis) {
  std::vector<RatVector> ortho;
  ortho.reserve(basis.size());
  for (const auto& b : basis) {
    RatVector w = b;
    if (w.size() != v.size())
      throw std::runtime_error("permval::project_orthogonal: dimension mismatch");
    for (const auto& o : ortho) {
      Rational c = inner_product(w, o) / inner_product(o, o);
      for (size_t i = 0; i < w.size(); ++i) w[i] -= c * o[i];
    }
    if (inner_product(w, w) == 0)
      throw std::runtime_error("permval::project_orthogonal: dependent basis");
    ortho.push_back(std::move(w));
  }
  RatVector r = v;
  for (const auto& o : ortho) {
    Rational c = inner_product(r, o) / inner_product(o, o);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= c * o[i];
  }
  return r;
}

}  // namespace permval::exact
