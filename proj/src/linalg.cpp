#include "linalg.hpp"

#include "errors.hpp"

#include <limits>

namespace bkit {

LambdaMatrix LambdaMatrix::identity(size_t n) {
    LambdaMatrix m(n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly(Rational(1));
    return m;
}

LambdaMatrix LambdaMatrix::operator*(const LambdaMatrix& o) const {
    if (n_ != o.n_) fail(errc::dimension_mismatch, "matrix product size mismatch");
    LambdaMatrix r(n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) {
            LaurentPoly acc;
            for (size_t k = 0; k < n_; ++k) acc += at(i, k) * o.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

LambdaMatrix LambdaMatrix::bar_transpose() const {
    LambdaMatrix r(n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) r.at(i, j) = at(j, i).bar();
    return r;
}

LambdaMatrix LambdaMatrix::transpose() const {
    LambdaMatrix r(n_);
    for (size_t i = 0; i < n_; ++i)
        for (size_t j = 0; j < n_; ++j) r.at(i, j) = at(j, i);
    return r;
}

bool is_hermitian(const LambdaMatrix& a) { return a.bar_transpose() == a; }

bool is_admissible(const LambdaMatrix& a) {
    return !is_zero(determinant(a).evaluate_at(Rational(1)));
}

LaurentPoly det_of_rows(const std::vector<std::vector<LaurentPoly>>& rows) {
    size_t n = rows.size();
    if (n == 0) return LaurentPoly(Rational(1));
    // Clear each row's power of t, then run fraction-free elimination in Q[t].
    int total_shift = 0;
    std::vector<std::vector<QPoly>> m(n, std::vector<QPoly>(n));
    for (size_t i = 0; i < n; ++i) {
        int low = std::numeric_limits<int>::max();
        for (size_t j = 0; j < n; ++j)
            if (!rows[i][j].is_zero()) low = std::min(low, rows[i][j].low_exp());
        if (low == std::numeric_limits<int>::max()) return LaurentPoly(); // zero row
        total_shift += low;
        for (size_t j = 0; j < n; ++j) {
            if (rows[i][j].is_zero()) continue;
            auto [q, s] = rows[i][j].to_qpoly();
            m[i][j] = q * QPoly::monomial(Rational(1), static_cast<size_t>(s - low));
        }
    }
    int sign = 1;
    QPoly prev(Rational(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return LaurentPoly();
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = qpoly_exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = QPoly();
        }
        prev = m[k][k];
    }
    QPoly det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return LaurentPoly::from_qpoly(det, total_shift);
}

std::vector<std::vector<LaurentPoly>> matrix_rows(const LambdaMatrix& a) {
    std::vector<std::vector<LaurentPoly>> rows(a.size(), std::vector<LaurentPoly>(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) rows[i][j] = a.at(i, j);
    return rows;
}

LaurentPoly determinant(const LambdaMatrix& a) { return det_of_rows(matrix_rows(a)); }

LambdaMatrix adjugate(const LambdaMatrix& a) {
    size_t n = a.size();
    LambdaMatrix adj(n);
    if (n == 0) return adj;
    if (n == 1) {
        adj.at(0, 0) = LaurentPoly(Rational(1));
        return adj;
    }
    std::vector<std::vector<LaurentPoly>> minor(n - 1, std::vector<LaurentPoly>(n - 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            // adj[i][j] = (-1)^(i+j) * minor of A with row j, col i removed
            for (size_t r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor[rr][cc] = a.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            LaurentPoly d = det_of_rows(minor);
            adj.at(i, j) = ((i + j) % 2 == 0) ? d : -d;
        }
    }
    return adj;
}

FractionMatrix neg_inverse(const LambdaMatrix& a) {
    LaurentPoly det = determinant(a);
    if (det.is_zero()) fail(errc::singular_matrix, "matrix is singular");
    FractionMatrix r;
    r.n = a.size();
    r.den = det;
    LambdaMatrix adj = adjugate(a);
    r.num.resize(r.n * r.n);
    for (size_t i = 0; i < r.n; ++i)
        for (size_t j = 0; j < r.n; ++j) r.num[i * r.n + j] = -adj.at(i, j);
    // A * (adj/det) = I must hold exactly; verify A * adj = det * I.
    LambdaMatrix prod = a * adj;
    for (size_t i = 0; i < r.n; ++i)
        for (size_t j = 0; j < r.n; ++j) {
            const LaurentPoly expect = (i == j) ? det : LaurentPoly();
            if (prod.at(i, j) != expect) fail(errc::internal, "adjugate identity failed");
        }
    return r;
}

namespace {

struct SnfWork {
    std::vector<std::vector<LaurentPoly>> a; // rows x cols
    std::vector<std::vector<LaurentPoly>> u; // rows x rows
    std::vector<std::vector<LaurentPoly>> v; // cols x cols
    size_t rows, cols;

    void row_sub(size_t i, size_t k, const LaurentPoly& q) {
        for (size_t j = 0; j < cols; ++j) a[i][j] -= q * a[k][j];
        for (size_t j = 0; j < rows; ++j) u[i][j] -= q * u[k][j];
    }
    void col_sub(size_t j, size_t k, const LaurentPoly& q) {
        for (size_t i = 0; i < rows; ++i) a[i][j] -= q * a[i][k];
        for (size_t i = 0; i < cols; ++i) v[i][j] -= q * v[i][k];
    }
    void row_add(size_t i, size_t k) {
        for (size_t j = 0; j < cols; ++j) a[i][j] += a[k][j];
        for (size_t j = 0; j < rows; ++j) u[i][j] += u[k][j];
    }
    void row_swap(size_t i, size_t k) {
        std::swap(a[i], a[k]);
        std::swap(u[i], u[k]);
    }
    void col_swap(size_t j, size_t k) {
        for (size_t i = 0; i < rows; ++i) std::swap(a[i][j], a[i][k]);
        for (size_t i = 0; i < cols; ++i) std::swap(v[i][j], v[i][k]);
    }
    void row_scale(size_t i, const LaurentPoly& unit) {
        for (size_t j = 0; j < cols; ++j) a[i][j] = unit * a[i][j];
        for (size_t j = 0; j < rows; ++j) u[i][j] = unit * u[i][j];
    }
};

} // namespace

SnfResult smith_normal_form_rect(const std::vector<std::vector<LaurentPoly>>& input) {
    SnfWork w;
    w.a = input;
    w.rows = input.size();
    w.cols = w.rows == 0 ? 0 : input[0].size();
    w.u.assign(w.rows, std::vector<LaurentPoly>(w.rows));
    for (size_t i = 0; i < w.rows; ++i) w.u[i][i] = LaurentPoly(Rational(1));
    w.v.assign(w.cols, std::vector<LaurentPoly>(w.cols));
    for (size_t i = 0; i < w.cols; ++i) w.v[i][i] = LaurentPoly(Rational(1));

    size_t steps = std::min(w.rows, w.cols);
    for (size_t k = 0; k < steps; ++k) {
        while (true) {
            // pivot: nonzero entry of minimal span degree, ties by (row, col)
            size_t pr = w.rows, pc = w.cols;
            int best = std::numeric_limits<int>::max();
            for (size_t i = k; i < w.rows; ++i)
                for (size_t j = k; j < w.cols; ++j) {
                    if (w.a[i][j].is_zero()) continue;
                    int s = *w.a[i][j].span_degree();
                    if (s < best) {
                        best = s;
                        pr = i;
                        pc = j;
                    }
                }
            if (pr == w.rows) goto done; // submatrix is zero
            if (pr != k) w.row_swap(pr, k);
            if (pc != k) w.col_swap(pc, k);

            bool clean = true;
            for (size_t i = k + 1; i < w.rows; ++i) {
                if (w.a[i][k].is_zero()) continue;
                auto [q, rem] = divmod(w.a[i][k], w.a[k][k]);
                w.row_sub(i, k, q);
                if (!rem.is_zero()) clean = false;
            }
            for (size_t j = k + 1; j < w.cols; ++j) {
                if (w.a[k][j].is_zero()) continue;
                auto [q, rem] = divmod(w.a[k][j], w.a[k][k]);
                w.col_sub(j, k, q);
                if (!rem.is_zero()) clean = false;
            }
            if (!clean) continue;

            // pivot must divide the remaining submatrix for the chain
            bool divides_all = true;
            for (size_t i = k + 1; i < w.rows && divides_all; ++i)
                for (size_t j = k + 1; j < w.cols && divides_all; ++j)
                    if (!divides(w.a[k][k], w.a[i][j])) {
                        w.row_add(k, i);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        // normalize the pivot to monic with lowest exponent 0
        if (!w.a[k][k].is_zero()) {
            const LaurentPoly& p = w.a[k][k];
            LaurentPoly unit =
                LaurentPoly::monomial(Rational(1) / p.coeff(p.high_exp()), -p.low_exp());
            w.row_scale(k, unit);
        }
    }
done:
    SnfResult r;
    r.U = std::move(w.u);
    r.V = std::move(w.v);
    r.diagonal.resize(steps);
    for (size_t k = 0; k < steps; ++k) r.diagonal[k] = w.a[k][k];
    return r;
}

SnfResult smith_normal_form(const LambdaMatrix& a) { return smith_normal_form_rect(matrix_rows(a)); }

std::vector<std::vector<LaurentPoly>> left_kernel(const std::vector<std::vector<LaurentPoly>>& m) {
    size_t rows = m.size();
    if (rows == 0) return {};
    auto snf = smith_normal_form_rect(m);
    std::vector<std::vector<LaurentPoly>> out;
    for (size_t i = 0; i < rows; ++i) {
        bool in_kernel = i >= snf.diagonal.size() || snf.diagonal[i].is_zero();
        if (in_kernel) out.push_back(snf.U[i]);
    }
    return out;
}

std::vector<std::vector<LaurentPoly>> kernel_mod(const LambdaMatrix& h, const LaurentPoly& delta) {
    if (delta.is_zero()) fail(errc::zero_modulus, "kernel modulo zero");
    size_t n = h.size();
    std::vector<std::vector<LaurentPoly>> stacked(2 * n, std::vector<LaurentPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) stacked[i][j] = h.at(i, j);
    for (size_t i = 0; i < n; ++i) stacked[n + i][i] = delta;
    auto ker = left_kernel(stacked);
    std::vector<std::vector<LaurentPoly>> out;
    for (const auto& row : ker) {
        std::vector<LaurentPoly> head(row.begin(), row.begin() + static_cast<long>(n));
        bool zero = true;
        for (const auto& e : head)
            if (!e.is_zero()) zero = false;
        if (!zero) out.push_back(std::move(head));
    }
    return out;
}

} // namespace bkit
