// Exact scalar types: arbitrary-precision rationals, Gaussian rationals,
// and univariate polynomial utilities (gcd, square-free part, rational
// root extraction) used by the spectral routines.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "liedual/error.hpp"

namespace liedual {

using Rat = mpq_class;
using Int = mpz_class;

// Construct a canonicalized rational from machine integers.
Rat rat_of(long num, long den = 1);

// Parse "a", "-a", "a/b"; requires canonical form (gcd(a,b)=1, b>0) when
// strict, otherwise canonicalizes. Throws MALFORMED on syntax errors or,
// in strict mode, on non-canonical fractions.
Rat parse_rat(const std::string& s, bool strict = false);

// Canonical rendering: "a" when the denominator is 1, otherwise "a/b".
std::string rat_str(const Rat& q);

bool is_integer(const Rat& q);
// Exact square root of a non-negative rational if it exists.
bool rat_sqrt(const Rat& q, Rat& out);

struct GaussRat {
  Rat re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(const Rat& r) : re(r), im(0) {}
  GaussRat(long r) : re(rat_of(r)), im(0) {}
  GaussRat(const Rat& r, const Rat& i) : re(r), im(i) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussRat conj() const { return GaussRat(re, Rat(-im)); }
  // |z|^2 = re^2 + im^2, a non-negative rational.
  Rat norm() const { return re * re + im * im; }

  GaussRat operator-() const { return GaussRat(Rat(-re), Rat(-im)); }
  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    require(!o.is_zero(), Err::SINGULAR, "division by zero");
    Rat n = o.norm();
    Rat r = (re * o.re + im * o.im) / n;
    Rat i = (im * o.re - re * o.im) / n;
    re = r;
    im = i;
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) {
    return !(a == b);
  }
};

// The imaginary unit.
GaussRat gauss_i();
std::string gauss_str(const GaussRat& z);

// ---------------------------------------------------------------------------
// Polynomials over Rat, coefficients stored lowest degree first.
// ---------------------------------------------------------------------------
using Poly = std::vector<Rat>;

Poly poly_trim(Poly p);
int poly_deg(const Poly& p);  // -1 for the zero polynomial
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
// Division with remainder over the field of rationals.
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly poly_monic(Poly p);
Poly poly_gcd(Poly a, Poly b);  // monic gcd
Poly poly_derivative(const Poly& p);
Poly poly_squarefree(const Poly& p);  // p / gcd(p, p')
Rat poly_eval(const Poly& p, const Rat& x);

// Deterministic integer factorization (trial division + Brent's cycle
// method with Miller-Rabin); returns prime factors with multiplicity,
// sorted ascending.
std::vector<Int> factor_int(Int n);
// All positive divisors, sorted ascending.
std::vector<Int> divisors(const Int& n);

// All rational roots of p (each listed once), sorted ascending.
std::vector<Rat> rational_roots(const Poly& p);

}  // namespace liedual
