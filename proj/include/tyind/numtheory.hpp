#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "tyind/error.hpp"

namespace tyind {

using Int = mpz_class;
using Rat = mpq_class;

int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64(int64_t a, int64_t b);

// Canonical representative in [0, m).
int64_t mod_norm(int64_t a, int64_t m);

int64_t mod_pow(int64_t base, int64_t exp, int64_t m);

// Inverse of a modulo m; requires gcd(a, m) = 1.
int64_t mod_inv(int64_t a, int64_t m);

// (prime, multiplicity) pairs, ascending. Trial division; inputs are tiny.
std::vector<std::pair<int64_t, int>> factorize(int64_t n);

std::vector<int64_t> divisors(int64_t n);  // ascending

int64_t euler_phi(int64_t n);

bool is_prime(int64_t n);

// n = s^2 * m0 with m0 squarefree; returns (s, m0).
std::pair<int64_t, int64_t> squarefree_decompose(int64_t n);

// Returns true and sets *root if n is a perfect square.
bool is_square(int64_t n, int64_t* root = nullptr);

Rat rat_pow(const Rat& x, int64_t e);  // e may be negative (x != 0)

}  // namespace tyind
