#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "uniserial/errors.hpp"
#include "uniserial/lie.hpp"
#include "uniserial/linalg.hpp"
#include "uniserial/matrix.hpp"
#include "uniserial/sl2.hpp"

namespace uniserial {

// Canonical label of a faithful uniserial representation of a single-block
// algebra. Fields used per kind:
//   KX     alpha, lambda, n, k, x_block ((k-1) x (n-k)), 1 < k < n
//   TOP    alpha, lambda, n           (split k = n)
//   BOTTOM alpha, lambda, n           (split k = 1)
//   AA     alpha, lambda, n, a        (n odd, a_1 = 1, even entries 0)
//   DIAG   alpha, lambda, ell         (n = 1, diagonal action, ell >= 2)
enum class LabelKind { KX, TOP, BOTTOM, AA, DIAG };

inline std::string label_kind_name(LabelKind k) {
    switch (k) {
        case LabelKind::KX: return "KX";
        case LabelKind::TOP: return "TOP";
        case LabelKind::BOTTOM: return "BOTTOM";
        case LabelKind::AA: return "AA";
        case LabelKind::DIAG: return "DIAG";
    }
    throw InputError("unknown label kind");
}

struct ClassLabel {
    LabelKind kind = LabelKind::TOP;
    Rational alpha;
    Rational lambda;
    int n = 0;
    int k = 0;
    Matrix x_block;
    std::vector<Rational> a;
    int ell = 0;

    void validate() const {
        switch (kind) {
            case LabelKind::KX:
                if (!(1 < k && k < n)) throw InputError("KX label requires 1 < k < n");
                if (x_block.rows() != k - 1 || x_block.cols() != n - k)
                    throw InputError("KX label: X must be (k-1) x (n-k)");
                break;
            case LabelKind::TOP:
            case LabelKind::BOTTOM:
                if (n < 1) throw InputError("label requires n >= 1");
                break;
            case LabelKind::AA: {
                if (n < 1 || n % 2 == 0) throw InputError("AA label requires odd n");
                if (static_cast<int>(a.size()) != n)
                    throw InputError("AA label: a must have length n");
                if (a[0] != 1) throw InputError("AA label requires a_1 = 1");
                for (int i = 1; i < n; i += 2)
                    if (a[i] != 0)
                        throw InputError("AA label requires a_i = 0 for even i");
                break;
            }
            case LabelKind::DIAG:
                if (ell < 2) throw InputError("DIAG label requires ell >= 2");
                break;
        }
    }

    // Underlying algebra of the labeled representation.
    JordanSpec spec() const {
        if (kind == LabelKind::DIAG) return {{{lambda, 1}}};
        return {{{lambda, n}}};
    }

    bool operator==(const ClassLabel& o) const {
        if (kind != o.kind || alpha != o.alpha || lambda != o.lambda) return false;
        switch (kind) {
            case LabelKind::KX: return n == o.n && k == o.k && x_block == o.x_block;
            case LabelKind::TOP:
            case LabelKind::BOTTOM: return n == o.n;
            case LabelKind::AA: return n == o.n && a == o.a;
            case LabelKind::DIAG: return ell == o.ell;
        }
        return false;
    }
    bool operator!=(const ClassLabel& o) const { return !(*this == o); }
};

// x |-> J^p(alpha) + J^q(alpha - lambda), v_0 |-> the embedded N. The object
// is built for any N with nonzero bottom-left entry, including parameter
// ranges where it fails verification (p+q-1 > n) or faithfulness
// (p+q-1 < n); both directions are needed by the tests.
inline Representation construct_R_pqN(const Rational& alpha, const Rational& lambda,
                                      int n, int p, int q, const Matrix& n_mat) {
    if (n < 1 || p < 1 || q < 1) throw InputError("construct_R_pqN: n, p, q must be positive");
    if (n_mat.rows() != p || n_mat.cols() != q)
        throw InputError("construct_R_pqN: N must be p x q");
    if (n_mat(p - 1, 0) == 0)
        throw InputError("construct_R_pqN: N must have nonzero bottom-left entry");
    Representation rep;
    rep.algebra = build_algebra({{{lambda, n}}});
    rep.d = p + q;
    rep.a = Matrix::block_diagonal(
        {Matrix::jordan_upper(p, alpha), Matrix::jordan_upper(q, alpha - lambda)});
    rep.generators = {embed_top_right(n_mat)};
    return rep;
}

// Dimension-(n+2) candidate with A = diag(alpha) + J^n(alpha-lambda) +
// diag(alpha-2*lambda), v_0 |-> the (a, e_n) corner matrix. Only the shape
// of a is validated; the commutator relations hold iff n is odd and the
// even entries of a vanish, and the negative cases are deliberately
// constructible.
inline Representation aa_candidate(const Rational& alpha, const Rational& lambda,
                                   int n, const std::vector<Rational>& a) {
    if (n < 1) throw InputError("aa_candidate: n must be positive");
    if (static_cast<int>(a.size()) != n) throw InputError("aa_candidate: a must have length n");
    if (a[0] != 1) throw InputError("aa_candidate: a_1 must be 1");
    Representation rep;
    rep.algebra = build_algebra({{{lambda, n}}});
    rep.d = n + 2;
    rep.a = Matrix::block_diagonal({Matrix{{alpha}},
                                    Matrix::jordan_upper(n, alpha - lambda),
                                    Matrix{{alpha - 2 * lambda}}});
    Matrix e0(n + 2, n + 2);
    for (int t = 0; t < n; ++t) e0(0, 1 + t) = a[t];
    e0(n, n + 1) = 1;
    rep.generators = {e0};
    return rep;
}

inline Representation construct_R(const ClassLabel& label) {
    label.validate();
    switch (label.kind) {
        case LabelKind::KX: {
            Matrix n_mat(label.k, label.n + 1 - label.k);
            n_mat(label.k - 1, 0) = 1;
            n_mat.set_block(0, 1, label.x_block);
            return construct_R_pqN(label.alpha, label.lambda, label.n, label.k,
                                   label.n + 1 - label.k, n_mat);
        }
        case LabelKind::TOP: {
            Matrix n_mat(label.n, 1);
            n_mat(label.n - 1, 0) = 1;
            return construct_R_pqN(label.alpha, label.lambda, label.n, label.n, 1, n_mat);
        }
        case LabelKind::BOTTOM: {
            Matrix n_mat(1, label.n);
            n_mat(0, 0) = 1;
            return construct_R_pqN(label.alpha, label.lambda, label.n, 1, label.n, n_mat);
        }
        case LabelKind::AA:
            return aa_candidate(label.alpha, label.lambda, label.n, label.a);
        case LabelKind::DIAG: {
            Representation rep;
            rep.algebra = build_algebra({{{label.lambda, 1}}});
            rep.d = label.ell;
            std::vector<Rational> diag;
            for (int i = 0; i < label.ell; ++i)
                diag.push_back(label.alpha - i * label.lambda);
            rep.a = Matrix::diagonal(diag);
            rep.generators = {Matrix::jordan_upper(label.ell, Rational(0))};
            return rep;
        }
    }
    throw InputError("unknown label kind");
}

// One free coefficient of an extension: the image of the block's chain
// generator picks up c * theta^power applied to target generator
// generator_index. Blocks are numbered 1-based, block 1 is the fixed one.
struct ParameterSlot {
    int block = 0;
    int generator_index = 0;
    int power = 0;

    auto key() const { return std::make_tuple(block, generator_index, power); }
    bool operator==(const ParameterSlot& o) const { return key() == o.key(); }
};

using ParameterAssignment = std::map<std::tuple<int, int, int>, Rational>;

// Parametrization of all F[t]-module homomorphisms V -> M_{k, n+1-k} that fix
// the image of the first chain generator; the injective ones are exactly the
// extensions of the base representation to a faithful uniserial one.
struct ExtensionSpace {
    JordanSpec spec;
    Rational alpha;
    int k = 0;
    Matrix a;  // (n+1) x (n+1) image of x
    Matrix e0; // embedded image of the first chain generator
    std::vector<LowestWeightVector> target_generators; // on M_{k, n+1-k}
    std::vector<int> target_orders;                    // n, n-2, ...
    std::vector<ParameterSlot> slots;

    int n() const { return spec.blocks[0].size; }
    Rational lambda() const { return spec.blocks[0].eigenvalue; }

    int block_parameter_count(int block) const {
        int c = 0;
        for (const auto& s : slots)
            if (s.block == block) ++c;
        return c;
    }
};

inline ExtensionSpace extension_space(const JordanSpec& spec, const Rational& alpha,
                                      int k, const Matrix& x_block) {
    spec.validate();
    if (!spec.single_eigenvalue())
        throw DomainError("extension_space: a single eigenvalue is required");
    Rational lambda = spec.blocks[0].eigenvalue;
    if (lambda == 0) throw DomainError("extension_space: lambda = 0 is out of scope");
    for (std::size_t i = 1; i < spec.blocks.size(); ++i)
        if (spec.blocks[i].size > spec.blocks[i - 1].size)
            throw InputError("extension_space: block sizes must be descending");
    int n = spec.blocks[0].size;
    int e = spec.block_count();
    if (!(1 < k && k < n))
        throw DomainError("extension_space: 1 < k < n violated (k = " + std::to_string(k) +
                          ", n = " + std::to_string(n) + ")");
    for (int i = 2; i <= e; ++i) {
        int ni = spec.blocks[i - 1].size;
        int bound = n - 2 * (i - 1);
        if (ni > bound)
            throw DomainError("extension_space: n_" + std::to_string(i) + " <= n - " +
                              std::to_string(2 * (i - 1)) + " violated (n_" +
                              std::to_string(i) + " = " + std::to_string(ni) +
                              ", bound = " + std::to_string(bound) + ")");
    }
    int s = std::min(k, n + 1 - k);
    if (e > s)
        throw DomainError("extension_space: e <= min{k, n+1-k} violated (e = " +
                          std::to_string(e) + ", min = " + std::to_string(s) + ")");
    if (x_block.rows() != k - 1 || x_block.cols() != n - k)
        throw InputError("extension_space: X must be (k-1) x (n-k)");

    ExtensionSpace space;
    space.spec = spec;
    space.alpha = alpha;
    space.k = k;
    ClassLabel base{LabelKind::KX, alpha, lambda, n, k, x_block, {}, 0};
    Representation base_rep = construct_R(base);
    space.a = base_rep.a;
    space.e0 = base_rep.generators[0];
    space.target_generators = lowest_weight_vectors(k, n + 1 - k);
    for (int j = 0; j < s; ++j) space.target_orders.push_back(n - 2 * j);
    for (int i = 2; i <= e; ++i) {
        int ni = spec.blocks[i - 1].size;
        for (int j = 0; j < s; ++j) {
            int order = space.target_orders[j];
            int count = std::min(ni, order);
            for (int power = order - count; power < order; ++power)
                space.slots.push_back({i, j, power});
        }
    }
    return space;
}

struct ExtensionResult {
    Representation rep;
    bool injective = false; // the induced linear map V -> M_{k, n+1-k} is injective
};

// Builds the representation attached to a parameter assignment. Unassigned
// slots default to zero; unknown keys are rejected. Non-injective
// assignments are reported through the flag, not refused.
inline ExtensionResult build_extension(const ExtensionSpace& space,
                                       const ParameterAssignment& params) {
    for (const auto& [key, value] : params) {
        bool known = false;
        for (const auto& s : space.slots)
            if (s.key() == key) { known = true; break; }
        if (!known)
            throw InputError("build_extension: assignment for a nonexistent slot (block " +
                             std::to_string(std::get<0>(key)) + ", generator " +
                             std::to_string(std::get<1>(key)) + ", power " +
                             std::to_string(std::get<2>(key)) + ")");
    }

    int n = space.n();
    int k = space.k;
    int q = n + 1 - k;
    Rational lambda = space.lambda();
    Matrix a1 = Matrix::jordan_upper(k, space.alpha);
    Matrix a2 = Matrix::jordan_upper(q, space.alpha - lambda);
    auto theta = [&](const Matrix& m) { return a1 * m - m * a2 - lambda * m; };

    // theta-power table per target generator, up to its order.
    std::vector<std::vector<Matrix>> powers;
    for (std::size_t j = 0; j < space.target_generators.size(); ++j) {
        std::vector<Matrix> chain{space.target_generators[j].matrix};
        for (int m = 1; m < space.target_orders[j]; ++m)
            chain.push_back(theta(chain.back()));
        powers.push_back(std::move(chain));
    }

    int e = space.spec.block_count();
    std::vector<Matrix> small_images; // k x q images of the chain generators
    small_images.push_back(top_right_block(space.e0, k, q));
    for (int i = 2; i <= e; ++i) {
        Matrix w(k, q);
        for (const auto& s : space.slots) {
            if (s.block != i) continue;
            auto it = params.find(s.key());
            if (it == params.end() || it->second == 0) continue;
            w = w + it->second * powers[s.generator_index][s.power];
        }
        small_images.push_back(w);
    }

    ExtensionResult out;
    out.rep.algebra = build_algebra(space.spec);
    out.rep.d = n + 1;
    out.rep.a = space.a;
    for (const auto& w : small_images) out.rep.generators.push_back(embed_top_right(w));

    // Injectivity of the induced map on all of V: the images of every chain
    // element must span a space of dimension dim V.
    std::vector<Matrix> chain_images;
    for (int i = 0; i < e; ++i) {
        Matrix m = small_images[i];
        for (int j = 0; j < space.spec.blocks[i].size; ++j) {
            chain_images.push_back(m);
            m = theta(m);
        }
    }
    out.injective = (span_rank(chain_images) == space.spec.dim_v());
    return out;
}

// Extension of the dimension-(n+2) family to J^n(lambda) + J^1(2*lambda):
// the second generator maps to beta * E^{1,n+2}, beta != 0.
inline Representation build_extension_type3(const Rational& alpha, const Rational& lambda,
                                            int n, const std::vector<Rational>& a,
                                            const Rational& beta) {
    if (n < 1 || n % 2 == 0) throw InputError("build_extension_type3: n must be odd");
    if (lambda == 0) throw InputError("build_extension_type3: lambda must be nonzero");
    if (static_cast<int>(a.size()) != n)
        throw InputError("build_extension_type3: a must have length n");
    if (a[0] != 1) throw InputError("build_extension_type3: a_1 must be 1");
    for (int i = 1; i < n; i += 2)
        if (a[i] != 0) throw InputError("build_extension_type3: a_i must vanish for even i");
    if (beta == 0) throw InputError("build_extension_type3: beta must be nonzero");

    Representation base = aa_candidate(alpha, lambda, n, a);
    Representation rep;
    rep.algebra = build_algebra({{{lambda, n}, {2 * lambda, 1}}});
    rep.d = n + 2;
    rep.a = base.a;
    rep.generators = {base.generators[0], beta * Matrix::unit(n + 2, n + 2, 0, n + 1)};
    return rep;
}

struct SuperdiagonalNormalization {
    Matrix h; // normalized matrix, h = x * e * x^{-1}
    Matrix x; // block diagonal, each block an invertible polynomial in J^{d_i}(0)
};

namespace detail {

// Unit u of F[J^p(0)] with u * f = last canonical vector; needs f_p != 0.
inline Matrix toeplitz_unit_from_column(const Matrix& f) {
    int p = f.rows();
    std::vector<Rational> u(p);
    u[0] = Rational(1) / f(p - 1, 0);
    for (int t = 1; t < p; ++t) {
        Rational s(0);
        for (int j = 0; j < t; ++j) s += u[j] * f(p - 1 - t + j, 0);
        u[t] = -s / f(p - 1, 0);
    }
    Matrix m(p, p);
    for (int i = 0; i < p; ++i)
        for (int j = i; j < p; ++j) m(i, j) = u[j - i];
    return m;
}

// Unit w of F[J^q(0)] with r * w = first canonical row vector; needs r_1 != 0.
inline Matrix toeplitz_unit_from_row(const Matrix& r) {
    int q = r.cols();
    std::vector<Rational> w(q);
    w[0] = Rational(1) / r(0, 0);
    for (int t = 1; t < q; ++t) {
        Rational s(0);
        for (int j = 0; j < t; ++j) s += r(0, t - j) * w[j];
        w[t] = -s / r(0, 0);
    }
    Matrix m(q, q);
    for (int i = 0; i < q; ++i)
        for (int j = i; j < q; ++j) m(i, j) = w[j - i];
    return m;
}

} // namespace detail

// Conjugates a strictly block upper triangular E by a block diagonal matrix
// of Toeplitz units so that every first-superdiagonal block has first column
// equal to the last canonical vector and the final one also has last row
// equal to the first canonical vector.
inline SuperdiagonalNormalization normalize_superdiagonal(const Matrix& e,
                                                          const std::vector<int>& sizes) {
    if (sizes.size() < 2) throw InputError("normalize_superdiagonal: need at least 2 blocks");
    int d = 0;
    for (int s : sizes) {
        if (s < 1) throw InputError("normalize_superdiagonal: block sizes must be positive");
        d += s;
    }
    if (e.rows() != d || e.cols() != d)
        throw InputError("normalize_superdiagonal: size mismatch");
    std::vector<int> offset{0};
    for (int s : sizes) offset.push_back(offset.back() + s);
    int l = static_cast<int>(sizes.size());
    for (int i = 0; i < l; ++i)
        for (int j = 0; j <= i; ++j)
            if (!e.block(offset[i], offset[j], sizes[i], sizes[j]).is_zero())
                throw InputError("normalize_superdiagonal: E is not strictly block "
                                 "upper triangular");
    for (int i = 0; i + 1 < l; ++i)
        if (e(offset[i + 1] - 1, offset[i + 1]) == 0)
            throw DomainError("normalize_superdiagonal: zero bottom-left entry in "
                              "superdiagonal block " + std::to_string(i + 1));

    // First pass: make the first column of every superdiagonal block a
    // multiple of the last canonical vector.
    std::vector<Matrix> x_blocks;
    for (int i = 0; i + 1 < l; ++i) {
        Matrix f = e.block(offset[i], offset[i + 1], sizes[i], 1);
        x_blocks.push_back(detail::toeplitz_unit_from_column(f));
    }
    x_blocks.push_back(Matrix::identity(sizes[l - 1]));
    Matrix x = Matrix::block_diagonal(x_blocks);
    Matrix h = x * e * inverse(x);

    // Second pass: scalar blocks to make those multiples exactly 1.
    std::vector<Rational> y(l, Rational(1));
    for (int i = 0; i + 1 < l; ++i) {
        Rational s = h(offset[i + 1] - 1, offset[i + 1]);
        y[i + 1] = s * y[i];
    }
    std::vector<Matrix> y_blocks;
    for (int i = 0; i < l; ++i) y_blocks.push_back(y[i] * Matrix::identity(sizes[i]));
    Matrix ym = Matrix::block_diagonal(y_blocks);
    x = ym * x;
    h = ym * h * inverse(ym);

    // Third pass: fix the last row of the final superdiagonal block; its
    // corner is already 1, so the first columns are untouched.
    Matrix r = h.block(offset[l - 1] - 1, offset[l - 1], 1, sizes[l - 1]);
    Matrix w = detail::toeplitz_unit_from_row(r);
    std::vector<Matrix> z_blocks;
    for (int i = 0; i + 1 < l; ++i) z_blocks.push_back(Matrix::identity(sizes[i]));
    z_blocks.push_back(inverse(w));
    Matrix z = Matrix::block_diagonal(z_blocks);
    x = z * x;
    h = z * h * inverse(z);

    for (int i = 0; i + 1 < l; ++i) {
        Matrix first_col = h.block(offset[i], offset[i + 1], sizes[i], 1);
        for (int t = 0; t < sizes[i]; ++t)
            if (first_col(t, 0) != (t == sizes[i] - 1 ? 1 : 0))
                throw InconsistencyError("normalize_superdiagonal: column postcondition failed");
    }
    Matrix last_row = h.block(offset[l - 1] - 1, offset[l - 1], 1, sizes[l - 1]);
    for (int t = 0; t < sizes[l - 1]; ++t)
        if (last_row(0, t) != (t == 0 ? 1 : 0))
            throw InconsistencyError("normalize_superdiagonal: row postcondition failed");
    if (h * x != x * e)
        throw InconsistencyError("normalize_superdiagonal: conjugacy postcondition failed");

    SuperdiagonalNormalization out;
    out.h = std::move(h);
    out.x = std::move(x);
    return out;
}

} // namespace uniserial
