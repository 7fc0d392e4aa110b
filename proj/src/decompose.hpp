#ifndef BKIT_DECOMPOSE_HPP
#define BKIT_DECOMPOSE_HPP

#include "pairing.hpp"

#include <string>
#include <vector>

namespace bkit {

enum class BlockKind { symmetric_cyclic, hyperbolic_pair };

// The two canonical block kinds of the orthogonal decomposition:
//  - symmetric_cyclic: Lambda/(pi^n) gamma with phi(gamma,gamma) = P/pi^n,
//    pi a bar-fixed symmetric prime or t+2+1/t, P symmetric prime to pi.
//  - hyperbolic_pair: Lambda/(pi^n) gamma_1 (+) Lambda/(bar pi^n) gamma_2 with
//    phi(gamma_1,gamma_2) = 1/pi^n and isotropic generators; pi non-symmetric
//    with pi(-1) != 0, or pi = 1+t with n odd.
struct CanonicalBlock {
    BlockKind kind{BlockKind::symmetric_cyclic};
    LaurentPoly pi; // bar-fixed representative for symmetric blocks,
                    // monic lowest-exponent-0 prime for hyperbolic ones
    int n{1};
    SymmetricPoly P; // symmetric blocks only

    int q_dimension() const;
};

struct DecompositionResult {
    std::vector<CanonicalBlock> blocks;
    // One row per cyclic block, two per hyperbolic block, in block order;
    // coordinates over the input form's generators.
    std::vector<std::vector<LaurentPoly>> basis;
};

// A primary component of a form: the pi-primary part for symmetric pi (or
// 1+t), or the {pi, bar pi}-primary part for a conjugate pair.
struct PrimaryComponent {
    LaurentPoly prime;     // monic, lowest exponent 0; the smaller of the two
                           // conjugates for pair components
    LaurentPoly prime_bar; // normalized bar partner (equals prime when symmetric)
    SymmetryTag tag{SymmetryTag::symmetric};
    std::vector<std::vector<LaurentPoly>> coords; // generators in form coordinates
    std::vector<int> orders;                      // prime-power exponents
    std::vector<char> is_bar;                     // pair components: which side
};

// CRT split into primary components, generators (delta_i / pi^{n_i}) g_i.
// Cross-component pairings are verified to vanish. Throws invalid_order when
// an asymmetric prime has no bar partner in the order.
std::vector<PrimaryComponent> primary_split(const BlanchfieldForm& f);

struct PartialDecomposition {
    std::vector<CanonicalBlock> blocks;
    std::vector<std::vector<LaurentPoly>> basis;
};

// The three cases of the decomposition, one component at a time.
PartialDecomposition decompose_symmetric(const BlanchfieldForm& f, const PrimaryComponent& c);
PartialDecomposition decompose_conjugate_pair(const BlanchfieldForm& f, const PrimaryComponent& c);
PartialDecomposition decompose_one_plus_t(const BlanchfieldForm& f, const PrimaryComponent& c);

// Full pipeline: split, dispatch per component, certify.
DecompositionResult decompose(const BlanchfieldForm& f);

struct VerificationReport {
    bool ok{true};
    std::string detail;
};

// Recomputes every pairwise pairing of the new generators against the input
// form, compares with the canonical block values, and checks the Q-dimension
// bookkeeping.
VerificationReport verify_decomposition(const BlanchfieldForm& f, const DecompositionResult& r);

} // namespace bkit

#endif
