#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "uniserial/errors.hpp"
#include "uniserial/matrix.hpp"

namespace uniserial {

struct Rref {
    Matrix mat;
    std::vector<int> pivot_cols;
    int rank = 0;
};

// Plain rational Gaussian elimination with pivot normalization after each
// step, leftmost pivot choice. Exact at desk scale; no modular shortcuts.
inline Rref rref(Matrix m) {
    Rref out;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
        Rational inv = m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) /= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.mat = std::move(m);
    out.rank = r;
    return out;
}

inline int rank(const Matrix& m) { return rref(m).rank; }

// Basis of the right null space as columns; empty iff rank = cols.
// Deterministic: one vector per free column, ascending.
inline std::vector<Matrix> kernel_basis(const Matrix& m) {
    Rref e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    std::vector<Matrix> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Matrix v(m.cols(), 1);
        v(f, 0) = 1;
        for (int r = 0; r < e.rank; ++r) v(e.pivot_cols[r], 0) = -e.mat(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

struct LinearSolution {
    Matrix particular;          // one solution of A x = b
    std::vector<Matrix> kernel; // basis of the solution space of A x = 0
};

// Full solution set of A x = b, or nullopt when inconsistent.
inline std::optional<LinearSolution> solve_linear(const Matrix& a, const Matrix& b) {
    if (b.cols() != 1 || a.rows() != b.rows())
        throw InputError("solve_linear: right-hand side shape mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    aug.set_block(0, 0, a);
    aug.set_block(0, a.cols(), b);
    Rref e = rref(std::move(aug));
    for (int c : e.pivot_cols)
        if (c == a.cols()) return std::nullopt;
    LinearSolution sol;
    sol.particular = Matrix(a.cols(), 1);
    for (int r = 0; r < e.rank; ++r)
        sol.particular(e.pivot_cols[r], 0) = e.mat(r, a.cols());
    sol.kernel = kernel_basis(a);
    return sol;
}

inline Rational determinant(Matrix m) {
    if (!m.is_square()) throw InputError("determinant of non-square matrix");
    Rational det(1);
    for (int c = 0; c < m.cols(); ++c) {
        int piv = -1;
        for (int i = c; i < m.rows(); ++i)
            if (m(i, c) != 0) { piv = i; break; }
        if (piv < 0) return Rational(0);
        if (piv != c) {
            for (int j = 0; j < m.cols(); ++j) std::swap(m(c, j), m(piv, j));
            det = -det;
        }
        det *= m(c, c);
        for (int i = c + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) / m(c, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

inline Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw InputError("inverse of non-square matrix");
    int n = m.rows();
    Matrix aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, Matrix::identity(n));
    Rref e = rref(std::move(aug));
    if (e.rank < n || e.pivot_cols[n - 1] != n - 1)
        throw InputError("matrix is singular");
    return e.mat.block(0, n, n, n);
}

// Rank of the span of a family of equally-shaped matrices inside the
// d*d-dimensional ambient space.
inline int span_rank(const std::vector<Matrix>& mats) {
    if (mats.empty()) return 0;
    Matrix stack(static_cast<int>(mats.size()), mats[0].rows() * mats[0].cols());
    for (std::size_t i = 0; i < mats.size(); ++i)
        stack.set_block(static_cast<int>(i), 0, vectorize(mats[i]).transpose());
    return rank(stack);
}

// Basis (as columns) of the intersection of the kernels of the given maps.
inline std::vector<Matrix> common_kernel(const std::vector<Matrix>& mats) {
    if (mats.empty()) throw InputError("common_kernel of empty family");
    int cols = mats[0].cols(), total = 0;
    for (const auto& m : mats) {
        if (m.cols() != cols) throw InputError("common_kernel shape mismatch");
        total += m.rows();
    }
    Matrix stack(total, cols);
    int r0 = 0;
    for (const auto& m : mats) {
        stack.set_block(r0, 0, m);
        r0 += m.rows();
    }
    return kernel_basis(stack);
}

// Incrementally grown independent set, used by the Jordan chain search.
class IncrementalSpan {
public:
    // Returns true (and absorbs the vector) iff v is independent from the
    // vectors added so far.
    bool try_add(Matrix v) {
        for (const auto& [piv, row] : rows_) {
            if (v(piv, 0) == 0) continue;
            Rational f = v(piv, 0);
            for (int i = 0; i < v.rows(); ++i) v(i, 0) -= f * row(i, 0);
        }
        int piv = -1;
        for (int i = 0; i < v.rows(); ++i)
            if (v(i, 0) != 0) { piv = i; break; }
        if (piv < 0) return false;
        Rational inv = v(piv, 0);
        for (int i = 0; i < v.rows(); ++i) v(i, 0) /= inv;
        rows_.emplace_back(piv, std::move(v));
        return true;
    }

    int dim() const { return static_cast<int>(rows_.size()); }

private:
    std::vector<std::pair<int, Matrix>> rows_;
};

inline bool is_nilpotent(const Matrix& n) {
    if (!n.is_square()) return false;
    Matrix p = n;
    for (int k = 1; k <= n.rows(); ++k) {
        if (p.is_zero()) return true;
        p = p * n;
    }
    return false;
}

// Multiset of exponents m_1 >= m_2 >= ... with sum = size, recovered from the
// rank sequence rank(N^k). These are the Jordan block sizes at eigenvalue 0.
inline std::vector<int> nilpotent_elementary_divisors(const Matrix& n) {
    if (!n.is_square()) throw InputError("elementary divisors of non-square matrix");
    int d = n.rows();
    std::vector<int> ranks{d}; // rank(N^0)
    Matrix p = Matrix::identity(d);
    while (ranks.back() > 0) {
        if (static_cast<int>(ranks.size()) > d + 1)
            throw DomainError("matrix is not nilpotent");
        p = p * n;
        ranks.push_back(rank(p));
    }
    std::vector<int> divisors;
    int kmax = static_cast<int>(ranks.size()) - 1;
    for (int k = kmax; k >= 1; --k) {
        int ge_k = ranks[k - 1] - ranks[k];
        int ge_k1 = (k < kmax) ? ranks[k] - ranks[k + 1] : 0;
        for (int i = 0; i < ge_k - ge_k1; ++i) divisors.push_back(k);
    }
    return divisors;
}

// Smallest m >= 0 with theta^m v = 0.
inline int vector_order(const Matrix& theta, const Matrix& v) {
    if (!theta.is_square() || theta.rows() != v.rows() || v.cols() != 1)
        throw InputError("vector_order shape mismatch");
    Matrix w = v;
    int m = 0;
    while (!w.is_zero()) {
        if (m > theta.rows()) throw DomainError("vector_order: operator is not nilpotent");
        w = theta * w;
        ++m;
    }
    return m;
}

// Characteristic polynomial det(xI - A), coefficients ascending, monic.
// Faddeev-LeVerrier over exact rationals.
inline std::vector<Rational> char_poly(const Matrix& a) {
    if (!a.is_square()) throw InputError("char_poly of non-square matrix");
    int d = a.rows();
    std::vector<Rational> c(d + 1);
    c[d] = 1;
    Matrix m = Matrix::zero(d, d);
    for (int k = 1; k <= d; ++k) {
        for (int i = 0; i < d; ++i) m(i, i) += c[d - k + 1];
        m = a * m;
        Rational tr(0);
        for (int i = 0; i < d; ++i) tr += m(i, i);
        c[d - k] = -tr / k;
    }
    return c;
}

inline std::vector<mpz_class> positive_divisors(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    std::vector<mpz_class> divs;
    for (mpz_class i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            divs.push_back(i);
            if (i * i != n) divs.push_back(n / i);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

namespace detail {

inline Rational poly_eval(const std::vector<Rational>& p, const Rational& x) {
    Rational v(0);
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

// Divide p by (x - r); p must vanish at r.
inline std::vector<Rational> poly_deflate(const std::vector<Rational>& p, const Rational& r) {
    std::vector<Rational> q(p.size() - 1);
    Rational carry(0);
    for (std::size_t i = p.size(); i-- > 1;) {
        carry = p[i] + carry * r;
        q[i - 1] = carry;
    }
    return q;
}

} // namespace detail

struct RationalSpectrum {
    std::vector<std::pair<Rational, int>> roots; // (root, multiplicity)
    bool split = false;                          // all roots rational
};

// Rational roots with multiplicities of a polynomial with rational
// coefficients (ascending). split is true iff the polynomial factors into
// linear terms over Q.
inline RationalSpectrum rational_roots(std::vector<Rational> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.empty()) throw InputError("rational_roots of zero polynomial");
    RationalSpectrum out;
    auto record = [&out](const Rational& r) {
        for (auto& [root, mult] : out.roots)
            if (root == r) { ++mult; return; }
        out.roots.emplace_back(r, 1);
    };
    while (p.size() > 1 && p[0] == 0) {
        record(Rational(0));
        p.erase(p.begin());
    }
    while (p.size() > 1) {
        // Clear denominators, then scan candidates num/den with
        // num | constant term and den | leading term.
        mpz_class scale(1);
        for (const auto& c : p) scale = lcm(scale, c.get_den());
        Rational tmp0 = p.front() * scale;
        Rational tmpd = p.back() * scale;
        mpz_class a0 = tmp0.get_num();
        mpz_class ad = tmpd.get_num();
        bool found = false;
        for (const auto& den : positive_divisors(ad)) {
            for (const auto& num : positive_divisors(a0)) {
                if (gcd(num, den) != 1) continue;
                for (int sign : {1, -1}) {
                    Rational cand(sign * num, den);
                    cand.canonicalize();
                    if (detail::poly_eval(p, cand) == 0) {
                        record(cand);
                        p = detail::poly_deflate(p, cand);
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    out.split = (p.size() == 1);
    return out;
}

inline RationalSpectrum rational_eigenvalues(const Matrix& a) {
    return rational_roots(char_poly(a));
}

struct JordanForm {
    Matrix j;
    Matrix p; // invertible, p * a * p^-1 = j
    std::vector<std::pair<Rational, int>> blocks; // (eigenvalue, size) in order
};

// Jordan form of a matrix whose characteristic polynomial splits over Q with
// roots among the supplied eigenvalues. Blocks are ordered by the first
// occurrence of each eigenvalue in the list, sizes descending within one
// eigenvalue; chains are listed eigenvector first, so the blocks come out
// upper triangular.
inline JordanForm jordan_form(const Matrix& a, const std::vector<Rational>& eigenvalues) {
    if (!a.is_square()) throw InputError("jordan_form of non-square matrix");
    int d = a.rows();
    std::vector<Rational> distinct;
    for (const auto& mu : eigenvalues)
        if (std::find(distinct.begin(), distinct.end(), mu) == distinct.end())
            distinct.push_back(mu);

    std::vector<Matrix> basis_columns;
    JordanForm out;
    int total = 0;
    for (const auto& mu : distinct) {
        Matrix n = a - mu * Matrix::identity(d);
        // Kernel flags of N, N^2, ... until the dimension stabilizes.
        std::vector<std::vector<Matrix>> kernels; // kernels[k-1] = basis of ker N^k
        Matrix power = n;
        while (true) {
            auto kb = kernel_basis(power);
            if (!kernels.empty() && kb.size() == kernels.back().size()) break;
            kernels.push_back(kb);
            if (kb.size() == static_cast<std::size_t>(d)) break;
            power = power * n;
        }
        if (kernels.empty() || kernels[0].empty()) continue; // not an eigenvalue
        int s = static_cast<int>(kernels.size());
        total += static_cast<int>(kernels.back().size());

        struct Chain { Matrix top; int height; };
        std::vector<Chain> chains;
        for (int k = s; k >= 1; --k) {
            IncrementalSpan span;
            if (k >= 2)
                for (const auto& v : kernels[k - 2]) span.try_add(v);
            for (const auto& ch : chains) {
                Matrix v = ch.top;
                for (int i = 0; i < ch.height - k; ++i) v = n * v;
                span.try_add(v);
            }
            for (const auto& v : kernels[k - 1])
                if (span.try_add(v)) chains.push_back({v, k});
        }
        // Construction order already gives heights descending.
        for (const auto& ch : chains) {
            out.blocks.emplace_back(mu, ch.height);
            std::vector<Matrix> chain_vecs(ch.height);
            chain_vecs[ch.height - 1] = ch.top;
            for (int i = ch.height - 2; i >= 0; --i)
                chain_vecs[i] = n * chain_vecs[i + 1];
            for (auto& v : chain_vecs) basis_columns.push_back(std::move(v));
        }
    }
    if (total != d)
        throw DomainError("jordan_form: eigenvalue list does not exhaust the spectrum");

    Matrix q(d, d);
    for (int j = 0; j < d; ++j) q.set_block(0, j, basis_columns[j]);
    out.p = inverse(q);
    std::vector<Matrix> jordan_blocks;
    for (const auto& [mu, size] : out.blocks)
        jordan_blocks.push_back(Matrix::jordan_upper(size, mu));
    out.j = Matrix::block_diagonal(jordan_blocks);
    if (out.p * a * q != out.j)
        throw InconsistencyError("jordan_form: internal similarity check failed");
    return out;
}

} // namespace uniserial
