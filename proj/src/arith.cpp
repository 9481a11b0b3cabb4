#include "gps/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace gps {

Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

Int checked_neg(Int a) { return checked_sub(0, a); }

Int floor_div(Int a, Int m)
{
    Int q = a / m;
    if ((a % m != 0) && ((a < 0) != (m < 0)))
        --q;
    return q;
}

Int mod_floor(Int a, Int m)
{
    Int r = a % m;
    if (r < 0)
        r += m;
    return r;
}

Int gcd(Int a, Int b)
{
    a = a < 0 ? checked_neg(a) : a;
    b = b < 0 ? checked_neg(b) : b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int lcm(Int a, Int b)
{
    if (a == 0 || b == 0)
        return 0;
    Int g = gcd(a, b);
    Int r = checked_mul(a / g, b);
    return r < 0 ? checked_neg(r) : r;
}

ExtGcd ext_gcd(Int a, Int b)
{
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = checked_sub(old_r, checked_mul(q, r));
        old_r = r;
        r = tmp;
        tmp = checked_sub(old_s, checked_mul(q, s));
        old_s = s;
        s = tmp;
        tmp = checked_sub(old_t, checked_mul(q, t));
        old_t = t;
        t = tmp;
    }
    if (old_r < 0)
        return {checked_neg(old_r), checked_neg(old_s), checked_neg(old_t)};
    return {old_r, old_s, old_t};
}

std::vector<std::pair<Int, int>> factorize(Int n)
{
    if (n < 1)
        throw std::invalid_argument("factorize: argument must be positive");
    std::vector<std::pair<Int, int>> out;
    for (Int p = 2; p <= n / p; ++p) {
        if (n % p != 0)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::vector<Int> prime_divisors(Int n)
{
    std::vector<Int> out;
    for (auto [p, e] : factorize(n))
        out.push_back(p);
    return out;
}

std::vector<Int> divisors(Int n)
{
    std::vector<Int> out{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_prime(Int n)
{
    if (n < 2)
        return false;
    auto f = factorize(n);
    return f.size() == 1 && f[0].second == 1;
}

Int squarefree_kernel(Int n)
{
    if (n == 0)
        return 0;
    Int r = 1;
    for (Int p : prime_divisors(n < 0 ? -n : n))
        r *= p;
    return r;
}

}  // namespace gps
