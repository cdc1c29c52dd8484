#pragma once

// Brute-force reference implementations, written independently of the
// library routines they are compared against.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "qfock/fock_vector.hpp"
#include "qfock/qpolynomial.hpp"
#include "qfock/scalar.hpp"

namespace oracle {

using qfock::FockVector;
using qfock::Scalar;
using qfock::Word;

inline Scalar power(const Scalar& q, long n) {
  Scalar r(1);
  for (long i = 0; i < n; ++i) r *= q;
  return r;
}

inline long count_inversions(const std::vector<int>& p) {
  long inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  }
  return inv;
}

// sum over sigma of q^{inv sigma} prod_k delta(u_k, v_{sigma(k)})
inline Scalar word_inner(const Word& u, const Word& v, const Scalar& q) {
  if (u.length() != v.length()) return Scalar(0);
  std::vector<int> p(static_cast<std::size_t>(u.length()));
  std::iota(p.begin(), p.end(), 0);
  Scalar total(0);
  do {
    bool match = true;
    for (int k = 0; k < u.length() && match; ++k) match = u[k] == v[p[static_cast<std::size_t>(k)]];
    if (match) total += power(q, count_inversions(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline Scalar inner(const FockVector& u, const FockVector& v, const Scalar& q) {
  Scalar total(0);
  for (const auto& [a, ca] : u) {
    for (const auto& [b, cb] : v) {
      if (a.length() == b.length()) total += ca * cb * word_inner(a, b, q);
    }
  }
  return total;
}

// Gaussian binomial as the inversion generating function of 0/1 words with
// m ones among n letters.
inline qfock::QPolynomial binomial(int n, int m) {
  if (m < 0 || m > n) return {};
  std::vector<mpz_class> c(static_cast<std::size_t>(m * (n - m) + 1), 0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    long inv = 0;
    int ones = 0;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) {
        ++ones;
      } else {
        inv += ones;
      }
    }
    c[static_cast<std::size_t>(inv)] += 1;
  }
  return qfock::QPolynomial(c);
}

// a(e_i) removes a letter i at 0-based position p with weight q^p; the
// right version uses q^{n-1-p}.
inline FockVector annihilate(bool right, qfock::Letter i, const FockVector& v, const Scalar& q) {
  FockVector out;
  for (const auto& [w, c] : v) {
    const int n = w.length();
    for (int p = 0; p < n; ++p) {
      if (w[p] != i) continue;
      std::vector<qfock::Letter> rest;
      for (int k = 0; k < n; ++k) {
        if (k != p) rest.push_back(w[k]);
      }
      out.add(Word(rest), c * power(q, right ? n - 1 - p : p));
    }
  }
  return out;
}

inline FockVector random_vector(std::mt19937_64& rng, int dim, int max_len, int terms) {
  FockVector v;
  for (int t = 0; t < terms; ++t) {
    const int n = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
    std::vector<qfock::Letter> letters;
    for (int k = 0; k < n; ++k) letters.push_back(static_cast<qfock::Letter>(rng() % static_cast<unsigned>(dim)));
    v.add(Word(letters), Scalar(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1));
  }
  return v;
}

}  // namespace oracle
