#pragma once

#include <vector>

#include "uniserial/errors.hpp"
#include "uniserial/linalg.hpp"
#include "uniserial/matrix.hpp"

namespace uniserial {

// Irreducible sl(2) representation of highest weight a on F^{a+1}:
// h diagonal with weights a, a-2, ..., -a and e the raising operator
// J^{a+1}(0). f is the unique lower triangular solution of [e, f] = h.
struct Sl2Triple {
    int highest_weight = 0;
    Matrix h, e, f;
};

inline Sl2Triple sl2_irrep(int a) {
    if (a < 0) throw InputError("sl2_irrep: highest weight must be >= 0");
    Sl2Triple t;
    t.highest_weight = a;
    std::vector<Rational> weights;
    for (int j = 0; j <= a; ++j) weights.push_back(Rational(a - 2 * j));
    t.h = Matrix::diagonal(weights);
    t.e = Matrix::jordan_upper(a + 1, Rational(0));
    // Subdiagonal entries c_j solve c_j - c_{j-1} = weight_j, c_0 = 0, which
    // is exactly [e, f] = h for lower triangular f.
    t.f = Matrix(a + 1, a + 1);
    Rational c(0);
    for (int j = 1; j <= a; ++j) {
        c += weights[j - 1];
        t.f(j, j - 1) = c;
    }
    return t;
}

// Embed N in M_{p x q} as the top-right block of gl(p+q).
inline Matrix embed_top_right(const Matrix& n) {
    int d = n.rows() + n.cols();
    Matrix m(d, d);
    m.set_block(0, n.rows(), n);
    return m;
}

inline Matrix top_right_block(const Matrix& m, int p, int q) {
    if (m.rows() != p + q || m.cols() != p + q)
        throw InputError("top_right_block shape mismatch");
    return m.block(0, p, p, q);
}

// Operators of e, h, f on the row-major vectorization of M_{p x q}, acting by
// N |-> R_a(y) N - N R_b(y) with a = p-1, b = q-1 (the commutator action of
// diag(R_a(y), R_b(y)) restricted to top-right blocks).
struct Sl2Action {
    int p = 0, q = 0;
    Matrix e_op, h_op, f_op;
};

namespace detail {

// Row-major vectorization of N |-> P N - N Q.
inline Matrix sandwich_op(const Matrix& p_mat, const Matrix& q_mat) {
    int p = p_mat.rows(), q = q_mat.rows();
    return kronecker(p_mat, Matrix::identity(q)) -
           kronecker(Matrix::identity(p), q_mat.transpose());
}

} // namespace detail

inline Sl2Action mpq_action(int p, int q) {
    if (p < 1 || q < 1) throw InputError("mpq_action: p, q must be positive");
    Sl2Triple ra = sl2_irrep(p - 1);
    Sl2Triple rb = sl2_irrep(q - 1);
    Sl2Action act;
    act.p = p;
    act.q = q;
    act.e_op = detail::sandwich_op(ra.e, rb.e);
    act.h_op = detail::sandwich_op(ra.h, rb.h);
    act.f_op = detail::sandwich_op(ra.f, rb.f);
    return act;
}

// Matrix of X |-> [A, X] - lambda X on vectorized M_{p x q}, where
// A = J^p(alpha) + J^q(alpha - lambda). Equal to mpq_action(p, q).e_op for
// every alpha, lambda.
inline Matrix theta_operator(int p, int q, const Rational& alpha, const Rational& lambda) {
    if (p < 1 || q < 1) throw InputError("theta_operator: p, q must be positive");
    Matrix a1 = Matrix::jordan_upper(p, alpha);
    Matrix a2 = Matrix::jordan_upper(q, alpha - lambda);
    return detail::sandwich_op(a1, a2) - lambda * Matrix::identity(p * q);
}

// Lowest weight vector E(i) of M_{p x q}: annihilated by f, supported on the
// i-th lower diagonal, leading coefficient alpha_0 = 1.
struct LowestWeightVector {
    int index = 0;
    std::vector<Rational> coefficients; // alpha_0 .. alpha_i
    Matrix matrix;                      // p x q
};

inline std::vector<LowestWeightVector> lowest_weight_vectors(int p, int q) {
    if (p < 1 || q < 1) throw InputError("lowest_weight_vectors: p, q must be positive");
    int a = p - 1, b = q - 1;
    int r = std::min(p, q) - 1;
    std::vector<LowestWeightVector> out;
    for (int i = 0; i <= r; ++i) {
        LowestWeightVector v;
        v.index = i;
        v.coefficients.assign(i + 1, Rational(0));
        v.coefficients[0] = 1;
        // alpha_t = prod_{j=1..t} ((i+1-j)(b+j-i)) / (j(a+1-j))
        for (int t = 1; t <= i; ++t)
            v.coefficients[t] = v.coefficients[t - 1] *
                                rat((i + 1 - t) * (b + t - i), t * (a + 1 - t));
        v.matrix = Matrix(p, q);
        for (int t = 0; t <= i; ++t) v.matrix(p - 1 - t, i - t) = v.coefficients[t];
        out.push_back(std::move(v));
    }
    return out;
}

// Elementary divisor exponents of the nilpotent theta on M_{p x q}:
// p+q-1, p+q-3, ..., p+q-1-2z with z = min(p, q) - 1, plus the lowest
// weight generators of the corresponding cyclic summands.
struct CgDecomposition {
    int p = 0, q = 0;
    std::vector<int> exponents;
    std::vector<LowestWeightVector> generators;
};

inline CgDecomposition cg_elementary_divisors(int p, int q) {
    if (p < 1 || q < 1) throw InputError("cg_elementary_divisors: p, q must be positive");
    CgDecomposition cg;
    cg.p = p;
    cg.q = q;
    int z = std::min(p, q) - 1;
    for (int i = 0; i <= z; ++i) cg.exponents.push_back(p + q - 1 - 2 * i);
    cg.generators = lowest_weight_vectors(p, q);
    return cg;
}

// True iff the minimal annihilating power of N under theta is t^{p+q-1},
// i.e. iff the bottom-left entry of N is nonzero.
inline bool minimal_poly_criterion(const Matrix& n) {
    if (n.rows() < 1 || n.cols() < 1)
        throw InputError("minimal_poly_criterion: empty matrix");
    return n(n.rows() - 1, 0) != 0;
}

} // namespace uniserial
