#ifndef BKIT_LINALG_HPP
#define BKIT_LINALG_HPP

#include "laurent.hpp"

#include <vector>

namespace bkit {

// Square matrix over Q[t,t^-1].
class LambdaMatrix {
public:
    LambdaMatrix() = default;
    explicit LambdaMatrix(size_t n) : n_(n), e_(n * n) {}
    static LambdaMatrix identity(size_t n);

    size_t size() const { return n_; }
    LaurentPoly& at(size_t i, size_t j) { return e_[i * n_ + j]; }
    const LaurentPoly& at(size_t i, size_t j) const { return e_[i * n_ + j]; }

    bool operator==(const LambdaMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

    LambdaMatrix operator*(const LambdaMatrix& o) const;
    LambdaMatrix bar_transpose() const;
    LambdaMatrix transpose() const;

private:
    size_t n_{0};
    std::vector<LaurentPoly> e_;
};

bool is_hermitian(const LambdaMatrix& a);

// det(A(1)) != 0; the matrix presents a Q-sphere surgery.
bool is_admissible(const LambdaMatrix& a);

// Exact determinant (fraction-free elimination over Q[t] after clearing the
// row-wise powers of t).
LaurentPoly determinant(const LambdaMatrix& a);

// Classical adjugate: adj(A) * A = det(A) * I.
LambdaMatrix adjugate(const LambdaMatrix& a);

// -A^{-1} as unreduced adjugate/determinant pairs: result[i][j] = (num, den)
// with num/den = (-A^{-1})_{ij}. Throws singular_matrix.
struct FractionMatrix {
    size_t n{0};
    std::vector<LaurentPoly> num; // row-major
    LaurentPoly den;              // common denominator (the determinant)

    const LaurentPoly& num_at(size_t i, size_t j) const { return num[i * n + j]; }
};
FractionMatrix neg_inverse(const LambdaMatrix& a);

// Smith normal form of a rectangular matrix with unimodular transforms:
// U * A * V = D, D diagonal with d_i | d_{i+1}, entries monic with lowest
// exponent 0. U is rows x rows, V is cols x cols.
struct SnfResult {
    std::vector<std::vector<LaurentPoly>> U;
    std::vector<std::vector<LaurentPoly>> V;
    std::vector<LaurentPoly> diagonal; // length min(rows, cols)
};

SnfResult smith_normal_form(const LambdaMatrix& a);
SnfResult smith_normal_form_rect(const std::vector<std::vector<LaurentPoly>>& a);

// Generators of { x : x * M = 0 } for a rectangular M (rows of length #rows(M)).
std::vector<std::vector<LaurentPoly>> left_kernel(const std::vector<std::vector<LaurentPoly>>& m);

// Generating set for { lambda : lambda * H = 0 mod delta }.
std::vector<std::vector<LaurentPoly>> kernel_mod(const LambdaMatrix& h, const LaurentPoly& delta);

// Helpers shared by callers
std::vector<std::vector<LaurentPoly>> matrix_rows(const LambdaMatrix& a);
LaurentPoly det_of_rows(const std::vector<std::vector<LaurentPoly>>& rows);

} // namespace bkit

#endif
