#ifndef BKIT_FACTOR_HPP
#define BKIT_FACTOR_HPP

#include "laurent.hpp"

#include <vector>

namespace bkit {

enum class SymmetryTag {
    symmetric,  // prime associated to its bar image, not to 1+t
    one_plus_t, // prime associated to 1+t
    asymmetric,
};

struct PrimePower {
    LaurentPoly prime; // monic, lowest exponent 0, irreducible over Q
    int exponent{1};
    SymmetryTag tag{SymmetryTag::symmetric};
};

struct Factorization {
    UnitFactor unit;
    std::vector<PrimePower> factors; // primes pairwise non-associated

    LaurentPoly product() const;
};

struct SquarefreeDecomposition {
    UnitFactor unit;
    std::vector<std::pair<LaurentPoly, int>> parts; // (factor, multiplicity)

    LaurentPoly product() const;
};

// Tobey-Horowitz squarefree split; unit * prod(part^mult) = p exactly.
SquarefreeDecomposition squarefree_decomposition(const LaurentPoly& p);

// Complete irreducible factorization over Q. Clears denominators, factors the
// primitive integer polynomial modulo a small prime, Hensel-lifts, and
// recombines with the Mignotte bound.
Factorization factor_rational(const LaurentPoly& p);

// Partition of the factor list into bar-symmetric singletons and conjugate
// pairs {pi, bar(pi)}; asymmetric primes without a bar partner are reported.
struct PrimaryPartition {
    std::vector<size_t> singletons;                   // symmetric or 1+t primes
    std::vector<std::pair<size_t, size_t>> conjugate_pairs;
    std::vector<size_t> unmatched;
};

PrimaryPartition primary_collect(const Factorization& f);

SymmetryTag classify_prime(const LaurentPoly& prime);

} // namespace bkit

#endif
