#include "borel/hilbert.hpp"

#include <algorithm>
#include <cassert>

namespace borel {

void QPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat QPoly::evaluate(const Int& z) const {
  Rat acc(0);
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * z + c[i];
  }
  return acc;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  QPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  QPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly{};
  QPoly r;
  r.c.resize(a.c.size() + b.c.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      r.c[i + j] += a.c[i] * b.c[j];
    }
  }
  r.trim();
  return r;
}

Int binom(const Int& top, unsigned long k) {
  Int num(1);
  for (unsigned long t = 0; t < k; ++t) num *= top - static_cast<long>(t);
  if (k > 1) {
    Int kfac;
    mpz_fac_ui(kfac.get_mpz_t(), k);
    // the product of k consecutive integers is divisible by k!
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), kfac.get_mpz_t());
  }
  return num;
}

QPoly binom_poly(const Int& shift, unsigned long k) {
  QPoly r;
  r.c = {Rat(1)};
  for (unsigned long t = 0; t < k; ++t) {
    QPoly factor;
    factor.c = {Rat(shift - static_cast<long>(t)), Rat(1)};
    r = r * factor;
  }
  if (k > 1) {
    Int kfac;
    mpz_fac_ui(kfac.get_mpz_t(), k);
    for (Rat& x : r.c) x /= kfac;
  }
  return r;
}

std::vector<Int> HilbertPolynomial::a_vector() const {
  std::vector<Int> a(b.size());
  for (std::size_t i = 0; i + 1 < b.size(); ++i) a[i] = b[i] - b[i + 1];
  if (!b.empty()) a.back() = b.back();
  return a;
}

namespace {

// C(z+i, i+1) - C(z+i-b, i+1), the contribution of one b-vector entry.
QPoly gotzmann_summand(int i, const Int& b) {
  return binom_poly(Int(i), static_cast<unsigned long>(i) + 1) -
         binom_poly(Int(i) - b, static_cast<unsigned long>(i) + 1);
}

[[noreturn]] void fail_decompose(int i, const std::string& what) {
  throw PolynomialError("no Gotzmann representation: b_" + std::to_string(i) +
                        " " + what);
}

// Converts the rational b_i candidate, reporting which condition broke.
Int accept_b_entry(int i, const Rat& value,
                   const std::vector<Int>& b, int d) {
  if (value.get_den() != 1) {
    fail_decompose(i, "= " + value.get_str() + " is not an integer");
  }
  Int bi = value.get_num();
  if (bi <= 0) {
    fail_decompose(i, "= " + bi.get_str() + " must be positive");
  }
  if (i < d && bi < b[i + 1]) {
    fail_decompose(i, "= " + bi.get_str() + " < b_" + std::to_string(i + 1) +
                          " = " + b[i + 1].get_str() +
                          " breaks the decreasing chain");
  }
  return bi;
}

}  // namespace

HilbertPolynomial decompose(const QPoly& p) {
  if (p.is_zero()) return HilbertPolynomial{};
  int d = p.degree();
  std::vector<Int> b(d + 1);
  QPoly work = p;
  // Peel from the top: the i-th difference of the tail determines b_i, since
  // the summand for b_i has leading term (b_i / i!) z^i and lower summands
  // have degree < i.
  for (int i = d; i >= 1; --i) {
    Int ifac;
    mpz_fac_ui(ifac.get_mpz_t(), static_cast<unsigned long>(i));
    b[i] = accept_b_entry(i, work.coeff(i) * Rat(ifac), b, d);
    work = work - gotzmann_summand(i, b[i]);
    assert(work.degree() < i);
  }
  b[0] = accept_b_entry(0, work.coeff(0), b, d);
  return HilbertPolynomial{std::move(b)};
}

QPoly to_qpoly(const HilbertPolynomial& p) {
  QPoly r;
  for (std::size_t i = 0; i < p.b.size(); ++i) {
    r = r + gotzmann_summand(static_cast<int>(i), p.b[i]);
  }
  return r;
}

Int evaluate(const HilbertPolynomial& p, const Int& z) {
  Int acc(0);
  for (std::size_t i = 0; i < p.b.size(); ++i) {
    unsigned long k = static_cast<unsigned long>(i) + 1;
    acc += binom(z + static_cast<long>(i), k);
    acc -= binom(z + static_cast<long>(i) - p.b[i], k);
  }
  return acc;
}

HilbertPolynomial difference(const HilbertPolynomial& p, int j) {
  assert(j >= 0);
  if (j > p.degree()) return HilbertPolynomial{};
  return HilbertPolynomial{
      std::vector<Int>(p.b.begin() + j, p.b.end())};
}

HilbertPolynomial drop_constant_to_doubly_saturated(
    const HilbertPolynomial& p) {
  if (p.degree() <= 0) return HilbertPolynomial{};
  std::vector<Int> b;
  b.reserve(p.b.size());
  b.push_back(p.b[1]);
  b.insert(b.end(), p.b.begin() + 1, p.b.end());
  return HilbertPolynomial{std::move(b)};
}

namespace {

int exponent_from(const Int& v) {
  if (!v.fits_sint_p()) {
    throw PolynomialError("generator exponent " + v.get_str() +
                          " does not fit a machine integer");
  }
  return static_cast<int>(v.get_si());
}

}  // namespace

StronglyStableIdeal lex_ideal(const HilbertPolynomial& p, AmbientRing ring) {
  int nv = ring.num_vars;
  int n = ring.n();
  if (p.is_zero()) {
    return StronglyStableIdeal{ring, {Monomial::unit(nv)}};
  }
  int d = p.degree();
  if (d == n && std::all_of(p.b.begin(), p.b.end(),
                            [](const Int& x) { return x == 1; })) {
    return StronglyStableIdeal{ring, {}};  // the zero ideal's polynomial
  }
  if (d > n - 1) {
    throw RingTooSmallError("deg p = " + std::to_string(d) + " needs at least " +
                            std::to_string(d + 2) + " variables, have " +
                            std::to_string(nv));
  }
  std::vector<Int> a = p.a_vector();
  std::vector<Monomial> gens;
  for (int i = 0; i <= n - d - 2; ++i) {
    gens.push_back(Monomial::var_power(nv, i));
  }
  for (int k = 0; k <= d; ++k) {
    std::vector<int> e(nv, 0);
    for (int t = 0; t < k; ++t) {
      e[n - d - 1 + t] = exponent_from(a[d - t]);
    }
    if (k < d) {
      e[n - d - 1 + k] = exponent_from(a[d - k]) + 1;
    } else {
      e[n - 1] = exponent_from(a[0]);
    }
    gens.emplace_back(std::move(e));
  }
  return make_ideal(ring, std::move(gens));
}

QPoly quotient_hilbert_qpoly(const StronglyStableIdeal& I) {
  if (I.is_unit()) return QPoly{};
  int n = I.ring.n();
  QPoly p = binom_poly(Int(n), static_cast<unsigned long>(n));
  for (const Monomial& g : I.gens) {
    int l = g.max_index();
    p = p - binom_poly(Int(n - g.degree() - l),
                       static_cast<unsigned long>(n - l));
  }
  return p;
}

HilbertPolynomial hilbert_polynomial_of(const StronglyStableIdeal& I) {
  return decompose(quotient_hilbert_qpoly(I));
}

void SeriesNumerator::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

SeriesNumerator series_numerator_of(const StronglyStableIdeal& I) {
  if (I.is_unit()) return SeriesNumerator{};
  SeriesNumerator g;
  g.c = {Int(1)};
  for (const Monomial& m : I.gens) {
    int l = m.max_index();
    int d = m.degree();
    if (static_cast<int>(g.c.size()) < d + l + 1) g.c.resize(d + l + 1, Int(0));
    for (int k = 0; k <= l; ++k) {
      Int term = binom(Int(l), static_cast<unsigned long>(k));
      if (k % 2 == 1) term = -term;
      g.c[d + k] -= term;
    }
  }
  g.trim();
  return g;
}

Int h_from_numerator(const SeriesNumerator& g, int n, long j) {
  Int acc(0);
  long top_i = std::min<long>(j, g.degree());
  for (long i = 0; i <= top_i; ++i) {
    acc += g.c[i] * binom(Int(j - i + n), static_cast<unsigned long>(n));
  }
  return acc;
}

QPoly numerator_to_polynomial(const SeriesNumerator& g, int n) {
  QPoly p;
  for (std::size_t i = 0; i < g.c.size(); ++i) {
    QPoly term = binom_poly(Int(n) - static_cast<long>(i),
                            static_cast<unsigned long>(n));
    for (Rat& x : term.c) x *= Rat(g.c[i]);
    term.trim();
    p = p + term;
  }
  return p;
}

std::vector<Int> betti_numbers(const StronglyStableIdeal& I) {
  if (I.is_zero()) return {};
  if (I.is_unit()) return {Int(1)};
  int max_l = 0;
  for (const Monomial& g : I.gens) max_l = std::max(max_l, g.max_index());
  std::vector<Int> beta(max_l + 1, Int(0));
  for (const Monomial& g : I.gens) {
    int l = g.max_index();
    for (int j = 0; j <= l; ++j) {
      beta[j] += binom(Int(l), static_cast<unsigned long>(j));
    }
  }
  return beta;
}

int regularity(const StronglyStableIdeal& I) {
  return I.is_zero() ? 0 : I.gens.back().degree();
}

Int stability_threshold(const HilbertPolynomial& p) {
  assert(!p.is_zero());
  return p.b[0] + p.degree() - 1;
}

namespace {

unsigned long small_index_from(const Int& v, const char* what) {
  if (v < 0 || !v.fits_ulong_p()) {
    throw PolynomialError(std::string(what) + " " + v.get_str() +
                          " is out of range for the bound computation");
  }
  return v.get_ui();
}

}  // namespace

Int count_upper_bound(const HilbertPolynomial& p, int n) {
  assert(!p.is_zero());
  int d = p.degree();
  Int c = p.b[0] + d - 1;
  if (Int(n) < c) c = n;
  unsigned long b0_minus_1 = small_index_from(p.b[0] - 1, "b_0 - 1");
  std::vector<Int> a = p.a_vector();
  Int prod(1);
  for (int j = 0; j <= d; ++j) {
    Int choices = binom(c - j + p.b[0] - 1, b0_minus_1) + 1;
    prod *= binom(choices, small_index_from(a[j], "a_j"));
  }
  return prod;
}

}  // namespace borel
