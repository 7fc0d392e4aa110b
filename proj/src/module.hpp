#ifndef BKIT_MODULE_HPP
#define BKIT_MODULE_HPP

#include "factor.hpp"
#include "linalg.hpp"

#include <string>
#include <vector>

namespace bkit {

// Invariant-factor chain delta_1, ..., delta_p with delta_{i+1} | delta_i,
// each a non-unit, monic with lowest exponent 0. The chain presents the
// torsion module (+) Lambda/(delta_i).
class AlexanderModule {
public:
    AlexanderModule() = default;
    // Validates the chain: nonzero, non-unit, successive divisibility.
    explicit AlexanderModule(std::vector<LaurentPoly> factors);

    size_t rank() const { return factors_.size(); }
    bool is_trivial() const { return factors_.empty(); }
    const std::vector<LaurentPoly>& factors() const { return factors_; }
    const LaurentPoly& factor(size_t i) const { return factors_[i]; }

    // delta_1, the annihilator (largest factor); module must be nontrivial.
    const LaurentPoly& annihilator() const;
    // The order: product of all invariant factors (1 for the trivial module).
    LaurentPoly order() const;
    // Total dimension over Q.
    int q_dimension() const;

    bool operator==(const AlexanderModule& o) const { return factors_ == o.factors_; }

private:
    std::vector<LaurentPoly> factors_;
};

enum class ClassifierCondition {
    value_at_one,  // delta_i(1) = 0
    not_symmetric, // delta_i not associated to bar(delta_i)
    parity,        // odd multiplicity of -1 appearing an odd number of times
};

struct ClassifierViolation {
    ClassifierCondition condition;
    size_t index;        // factor index for the first two kinds; the odd
                         // multiplicity m for parity violations
    std::string witness; // human-readable evidence
};

struct ClassifierVerdict {
    bool realizable{true};
    std::vector<ClassifierViolation> violations;
};

// SNF diagonal with units dropped, reversed into paper order, normalized.
// Throws singular_matrix if det(A) = 0.
AlexanderModule module_from_matrix(const LambdaMatrix& a);

// The three realizability conditions; reports every violation.
ClassifierVerdict classify(const AlexanderModule& m);

// Primary decomposition via factorization of each invariant factor:
// for each prime, the list of exponents it carries in delta_1, delta_2, ...
struct PrimaryComponentExponents {
    PrimePower prime; // exponent field unused (set to 1)
    std::vector<int> exponents;
};

std::vector<PrimaryComponentExponents> primary_decomposition(const AlexanderModule& m);

// gcd(1-t, delta_i) = 1 for all i, with Bezout witnesses u_i such that
// (1-t) u_i = 1 mod delta_i.
struct InvertibilityWitness {
    bool invertible{true};
    std::vector<LaurentPoly> witnesses; // one per factor when invertible
};

InvertibilityWitness one_minus_t_invertible(const AlexanderModule& m);

} // namespace bkit

#endif
