#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chipfire/bigint.hpp"

namespace chipfire {

/// Finite abelian group in invariant-factor form d1 | d2 | ... with every
/// di >= 2. The trivial group has no factors.
class CriticalGroup {
public:
    CriticalGroup() = default;

    /// Canonicalizes an SNF diagonal: units are dropped and the remaining
    /// entries must be positive with the divisibility chain. Throws
    /// InputError on a zero entry (infinite group) or a broken chain.
    static CriticalGroup from_diagonal(const std::vector<BigInt>& diagonal);
    static CriticalGroup cyclic(const BigInt& order);

    const std::vector<BigInt>& invariant_factors() const { return factors_; }
    /// Product of the invariant factors, 1 for the trivial group.
    BigInt order() const;
    /// Minimal number of generators.
    std::size_t rank() const { return factors_.size(); }
    bool trivial() const { return factors_.empty(); }

    friend bool operator==(const CriticalGroup&, const CriticalGroup&) = default;

    /// "Z/144 + Z/8208", or "0" for the trivial group.
    std::string to_string() const;

private:
    std::vector<BigInt> factors_;
};

struct PrimePower {
    BigInt prime;
    unsigned long exponent;
    BigInt value() const { return big_pow(prime, exponent); }
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of n >= 1, primes ascending.
std::vector<PrimePower> factorize(const BigInt& n);

/// Primary decomposition: one prime power per cyclic summand, sorted by
/// prime then exponent.
std::vector<PrimePower> elementary_divisors(const CriticalGroup& g);

/// Reassembles invariant factors from any multiset of prime powers.
CriticalGroup from_elementary_divisors(const std::vector<PrimePower>& parts);

bool groups_isomorphic(const CriticalGroup& a, const CriticalGroup& b);
CriticalGroup direct_sum(const CriticalGroup& a, const CriticalGroup& b);

}  // namespace chipfire
