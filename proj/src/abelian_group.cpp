#include "chipfire/abelian_group.hpp"

#include <algorithm>
#include <map>

#include "chipfire/errors.hpp"

namespace chipfire {

CriticalGroup CriticalGroup::from_diagonal(const std::vector<BigInt>& diagonal) {
    CriticalGroup g;
    for (const BigInt& d : diagonal) {
        if (d == 0) throw InputError("group has a free summand (zero invariant factor)");
        const BigInt mag = abs(d);
        if (mag == 1) continue;
        if (!g.factors_.empty() && !big_divides(g.factors_.back(), mag))
            throw InputError("invariant factors do not form a divisibility chain");
        g.factors_.push_back(mag);
    }
    return g;
}

CriticalGroup CriticalGroup::cyclic(const BigInt& order) {
    if (order <= 0) throw InputError("cyclic group order must be positive");
    return from_diagonal({order});
}

BigInt CriticalGroup::order() const {
    BigInt n = 1;
    for (const BigInt& d : factors_) n *= d;
    return n;
}

std::string CriticalGroup::to_string() const {
    if (factors_.empty()) return "0";
    std::string out;
    for (const BigInt& d : factors_) {
        if (!out.empty()) out += " + ";
        out += "Z/" + d.get_str();
    }
    return out;
}

namespace {

// Brent's variant of Pollard rho; n is odd, composite, and > 1.
BigInt pollard_brent(const BigInt& n) {
    for (unsigned long c = 1;; ++c) {
        BigInt y = 2, x, q = 1, g = 1, ys;
        unsigned long r = 1;
        const unsigned long block = 128;
        auto step = [&](const BigInt& z) {
            BigInt out = z * z + c;
            mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
            return out;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = step(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(block, r - k); ++i) {
                    y = step(y);
                    q = q * abs(x - y);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                g = big_gcd(q, n);
                k += block;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                g = big_gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned long>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        ++out[n];
        return;
    }
    const BigInt d = pollard_brent(n);
    factor_into(d, out);
    factor_into(big_divexact(n, d), out);
}

}  // namespace

std::vector<PrimePower> factorize(const BigInt& n) {
    if (n < 1) throw InputError("factorize expects a positive integer");
    std::map<BigInt, unsigned long> found;
    BigInt rest = n;
    for (unsigned long p = 2; p < 1000; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            ++found[BigInt(p)];
            rest /= p;
        }
    }
    factor_into(rest, found);
    std::vector<PrimePower> out;
    for (const auto& [p, e] : found) out.push_back({p, e});
    return out;
}

std::vector<PrimePower> elementary_divisors(const CriticalGroup& g) {
    std::vector<PrimePower> out;
    for (const BigInt& d : g.invariant_factors())
        for (auto& pp : factorize(d)) out.push_back(std::move(pp));
    std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) {
        return a.prime != b.prime ? a.prime < b.prime : a.exponent < b.exponent;
    });
    return out;
}

CriticalGroup from_elementary_divisors(const std::vector<PrimePower>& parts) {
    std::map<BigInt, std::vector<unsigned long>> by_prime;
    for (const auto& pp : parts)
        if (pp.exponent > 0) by_prime[pp.prime].push_back(pp.exponent);

    std::size_t length = 0;
    for (auto& [p, exps] : by_prime) {
        std::sort(exps.begin(), exps.end(), std::greater<>());
        length = std::max(length, exps.size());
    }
    // Largest factor takes the largest power of every prime, and so on.
    std::vector<BigInt> factors(length, BigInt(1));
    for (const auto& [p, exps] : by_prime)
        for (std::size_t i = 0; i < exps.size(); ++i) factors[i] *= big_pow(p, exps[i]);
    std::reverse(factors.begin(), factors.end());
    return CriticalGroup::from_diagonal(factors);
}

bool groups_isomorphic(const CriticalGroup& a, const CriticalGroup& b) { return a == b; }

CriticalGroup direct_sum(const CriticalGroup& a, const CriticalGroup& b) {
    auto parts = elementary_divisors(a);
    auto rhs = elementary_divisors(b);
    parts.insert(parts.end(), rhs.begin(), rhs.end());
    return from_elementary_divisors(parts);
}

}  // namespace chipfire
