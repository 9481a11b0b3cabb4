#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gps {

using Int = std::int64_t;

// Checked arithmetic. All throw std::overflow_error instead of wrapping.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);

// Floor division and the matching nonnegative remainder (m > 0).
Int floor_div(Int a, Int m);
Int mod_floor(Int a, Int m);

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

struct ExtGcd {
    Int g;  // nonnegative
    Int x;  // g == x * a + y * b
    Int y;
};

ExtGcd ext_gcd(Int a, Int b);

// Trial-division factorization of n >= 1, primes ascending.
std::vector<std::pair<Int, int>> factorize(Int n);
std::vector<Int> prime_divisors(Int n);
// Positive divisors of n >= 1, ascending.
std::vector<Int> divisors(Int n);
bool is_prime(Int n);
// Product of the distinct primes dividing n; radical(0) == 0.
Int squarefree_kernel(Int n);

}  // namespace gps
