#ifndef BKIT_PAIRING_HPP
#define BKIT_PAIRING_HPP

#include "module.hpp"

#include <vector>

namespace bkit {

// Canonical representative of a class in Q(t)/Lambda: num/den with den monic
// in Q[t], nonzero constant term, gcd(num, den) = 1 and deg num < deg den.
// The zero class is 0/1. Two classes are equal iff their representatives are
// syntactically equal.
class TorsionValue {
public:
    TorsionValue() : den_(Rational(1)) {}

    static TorsionValue reduce(const LaurentPoly& num, const LaurentPoly& den);
    static TorsionValue reduce_q(const QPoly& num, const QPoly& den);

    bool is_zero() const { return num_.is_zero(); }
    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    LaurentPoly num_laurent() const { return LaurentPoly::from_qpoly(num_, 0); }
    LaurentPoly den_laurent() const { return LaurentPoly::from_qpoly(den_, 0); }

    bool operator==(const TorsionValue& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const TorsionValue& o) const { return !(*this == o); }

    TorsionValue operator-() const;
    TorsionValue operator+(const TorsionValue& o) const;
    TorsionValue operator-(const TorsionValue& o) const { return *this + (-o); }
    TorsionValue bar() const;
    TorsionValue times(const LaurentPoly& lambda) const;
    TorsionValue times(const Rational& c) const;

    // True when the class equals its own bar image.
    bool is_hermitian_value() const { return *this == bar(); }

private:
    QPoly num_; // zero polynomial for the zero class
    QPoly den_; // monic, den(0) != 0
};

// A module together with the Gram matrix of a sesquilinear pairing on its
// standard generators. Hermitian-ness is checkable but not forced, so that
// degenerate or non-hermitian candidates can still be probed.
struct BlanchfieldForm {
    AlexanderModule module;
    std::vector<TorsionValue> gram; // rank x rank, row-major

    const TorsionValue& g(size_t i, size_t j) const { return gram[i * module.rank() + j]; }
    TorsionValue& g(size_t i, size_t j) { return gram[i * module.rank() + j]; }
};

// Builds a form and checks the order invariants delta_i G[i][j] = 0 and
// delta_j G[i][j] = 0 in Q(t)/Lambda.
BlanchfieldForm make_form(AlexanderModule module, std::vector<TorsionValue> gram);

bool is_hermitian_form(const BlanchfieldForm& f);

// The pairing of a hermitian presentation matrix on the invariant-factor
// basis: -A(t)^{-1} on the meridians, rewritten through the SNF transform.
BlanchfieldForm pairing_from_matrix(const LambdaMatrix& a);

// phi(x, y) = sum_i sum_j x_i bar(y_j) G[i][j]; coordinates are reduced
// mod delta_i componentwise first.
TorsionValue evaluate_pairing(const BlanchfieldForm& f, const std::vector<LaurentPoly>& x,
                              const std::vector<LaurentPoly>& y);

// Only x with delta_i | x_i for all i may pair trivially with every generator.
bool is_nondegenerate(const BlanchfieldForm& f);

// Solves phi(gamma, eta) = 1/P for eta; gamma must have order P in the module
// and the form must be nondegenerate, otherwise NoSolution is thrown.
std::vector<LaurentPoly> dual_element(const BlanchfieldForm& f, const std::vector<LaurentPoly>& gamma,
                                      const LaurentPoly& p);

} // namespace bkit

#endif
