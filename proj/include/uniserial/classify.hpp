#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "uniserial/constructions.hpp"
#include "uniserial/errors.hpp"
#include "uniserial/lie.hpp"
#include "uniserial/linalg.hpp"
#include "uniserial/matrix.hpp"

namespace uniserial {

// Seed used by the randomized invertibility sampler when none is given.
inline constexpr unsigned kDefaultSeed = 17;

// Outcome of the existence test for a faithful uniserial representation.
// exists is true iff one of the two certificate cases applies; otherwise
// violated names the first failed condition.
struct ExistenceVerdict {
    bool exists = false;
    std::string case_tag; // "single-eigenvalue" | "two-eigenvalue" | "refusal"
    std::vector<std::string> checked; // conditions verified for a certificate
    std::string violated;             // first violated condition on refusal
    int n = 0;                        // largest block size
};

inline ExistenceVerdict existence_check(const JordanSpec& spec) {
    spec.validate();
    bool diagonalizable = true;
    for (const auto& b : spec.blocks) {
        if (b.size > 1) diagonalizable = false;
        if (b.eigenvalue == 0)
            throw DomainError("existence_check: zero eigenvalue, x is not an automorphism");
    }
    if (diagonalizable)
        throw DomainError("existence_check: diagonalizable x is out of modeled scope");

    // Order blocks by size descending (stable), matching n = n_1 >= n_2 >= ...
    std::vector<JordanBlock> blocks = spec.blocks;
    std::stable_sort(blocks.begin(), blocks.end(),
                     [](const JordanBlock& a, const JordanBlock& b) { return a.size > b.size; });
    ExistenceVerdict v;
    int e = static_cast<int>(blocks.size());
    v.n = blocks[0].size;

    std::vector<Rational> eigenvalues;
    for (const auto& b : blocks)
        if (std::find(eigenvalues.begin(), eigenvalues.end(), b.eigenvalue) == eigenvalues.end())
            eigenvalues.push_back(b.eigenvalue);

    if (eigenvalues.size() == 1) {
        v.case_tag = "single-eigenvalue";
        if (e == 1) {
            v.exists = true;
            v.checked.push_back("single Jordan block of size n = " + std::to_string(v.n) +
                                " > 1");
            return v;
        }
        for (int i = 2; i <= e; ++i) {
            int ni = blocks[i - 1].size;
            int bound = v.n - 2 * (i - 1);
            std::string cond = "n_" + std::to_string(i) + " <= n - " +
                               std::to_string(2 * (i - 1)) + " (n_" + std::to_string(i) +
                               " = " + std::to_string(ni) + ", bound = " +
                               std::to_string(bound) + ")";
            if (ni > bound) {
                v.exists = false;
                v.case_tag = "refusal";
                v.violated = cond;
                return v;
            }
            v.checked.push_back(cond);
        }
        v.exists = true;
        return v;
    }

    if (eigenvalues.size() == 2) {
        v.case_tag = "two-eigenvalue";
        auto refuse = [&v](const std::string& reason) {
            v.exists = false;
            v.case_tag = "refusal";
            v.violated = reason;
        };
        if (e != 2) {
            refuse("two eigenvalues require exactly two blocks (e = " + std::to_string(e) + ")");
            return v;
        }
        if (blocks[1].size != 1) {
            refuse("second block must have size 1 (n_2 = " + std::to_string(blocks[1].size) + ")");
            return v;
        }
        if (blocks[1].eigenvalue != 2 * blocks[0].eigenvalue) {
            refuse("eigenvalues are not of the form lambda, 2*lambda");
            return v;
        }
        if (v.n % 2 == 0) {
            refuse("n = " + std::to_string(v.n) + " is even");
            return v;
        }
        v.exists = true;
        v.checked.push_back("shape J^n(lambda) + J^1(2*lambda) with n odd");
        return v;
    }

    v.exists = false;
    v.case_tag = "refusal";
    v.violated = "more than two distinct eigenvalues";
    return v;
}

namespace detail {

// Multivariate polynomial over Q, exponent-vector keyed. Only used by the
// symbolic determinant fallback of the invertibility search.
struct MultiPoly {
    int nvars = 0;
    std::map<std::vector<int>, Rational> terms;

    static MultiPoly constant(int nv, const Rational& c) {
        MultiPoly p;
        p.nvars = nv;
        if (c != 0) p.terms[std::vector<int>(nv, 0)] = c;
        return p;
    }
    static MultiPoly variable(int nv, int i, const Rational& coeff) {
        MultiPoly p;
        p.nvars = nv;
        if (coeff != 0) {
            std::vector<int> exp(nv, 0);
            exp[i] = 1;
            p.terms[exp] = coeff;
        }
        return p;
    }
    bool is_zero() const { return terms.empty(); }

    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms) {
            auto it = r.terms.find(e);
            if (it == r.terms.end()) {
                r.terms[e] = c;
            } else {
                it->second += c;
                if (it->second == 0) r.terms.erase(it);
            }
        }
        return r;
    }
    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.terms) c = -c;
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }
    MultiPoly operator*(const MultiPoly& o) const {
        MultiPoly r;
        r.nvars = nvars;
        for (const auto& [e1, c1] : terms)
            for (const auto& [e2, c2] : o.terms) {
                std::vector<int> e(nvars);
                for (int i = 0; i < nvars; ++i) e[i] = e1[i] + e2[i];
                Rational& slot = r.terms[e];
                slot += c1 * c2;
                if (slot == 0) r.terms.erase(e);
            }
        return r;
    }
};

// Laplace expansion along rows with memoization on the remaining column set.
inline MultiPoly symbolic_determinant(const std::vector<std::vector<MultiPoly>>& m) {
    int d = static_cast<int>(m.size());
    if (d > 20) throw DomainError("symbolic determinant too large");
    std::map<std::uint32_t, MultiPoly> memo;
    int nvars = m[0][0].nvars;
    auto rec = [&](auto&& self, std::uint32_t colmask, int row) -> MultiPoly {
        if (row == d) return MultiPoly::constant(nvars, Rational(1));
        auto it = memo.find(colmask);
        if (it != memo.end()) return it->second;
        MultiPoly acc;
        acc.nvars = nvars;
        int sign = 1;
        for (int c = 0; c < d; ++c) {
            if (!(colmask & (1u << c))) continue;
            if (!m[row][c].is_zero()) {
                MultiPoly sub = self(self, colmask & ~(1u << c), row + 1);
                MultiPoly term = m[row][c] * sub;
                acc = (sign > 0) ? acc + term : acc - term;
            }
            sign = -sign;
        }
        memo[colmask] = acc;
        return acc;
    };
    return rec(rec, (1u << d) - 1, 0);
}

} // namespace detail

// Invertible intertwiner T with T img1(y) = img2(y) T for every basis y,
// or nullopt when none exists. The intertwiner space is the exact kernel of
// a stacked Sylvester system; invertibility inside it is decided by a full
// determinant grid when the space is small, and by random samples plus a
// symbolic determinant fallback otherwise (sound either way: the determinant
// has degree at most d in each coordinate).
inline std::optional<Matrix> is_isomorphic(const Representation& rep1,
                                           const Representation& rep2,
                                           unsigned seed = kDefaultSeed) {
    if (rep1.d != rep2.d) throw InputError("is_isomorphic: dimension mismatch");
    if (!(rep1.algebra == rep2.algebra))
        throw InputError("is_isomorphic: representations of different algebras");
    int d = rep1.d;
    std::vector<Matrix> imgs1 = all_images(rep1);
    std::vector<Matrix> imgs2 = all_images(rep2);

    Matrix stacked(static_cast<int>(imgs1.size()) * d * d, d * d);
    for (std::size_t i = 0; i < imgs1.size(); ++i) {
        Matrix block = kronecker(Matrix::identity(d), imgs1[i].transpose()) -
                       kronecker(imgs2[i], Matrix::identity(d));
        stacked.set_block(static_cast<int>(i) * d * d, 0, block);
    }
    std::vector<Matrix> kernel = kernel_basis(stacked);
    int m = static_cast<int>(kernel.size());
    if (m == 0) return std::nullopt;

    std::vector<Matrix> basis;
    for (const auto& v : kernel) basis.push_back(unvectorize(v, d, d));

    auto combine = [&](const std::vector<Rational>& c) {
        Matrix t(d, d);
        for (int i = 0; i < m; ++i)
            if (c[i] != 0) t = t + c[i] * basis[i];
        return t;
    };

    if (m <= 3) {
        // det(sum c_i T_i) has degree <= d in each c_i, so the grid
        // {0..d}^m decides invertibility exactly.
        std::vector<Rational> c(m, Rational(0));
        while (true) {
            Matrix t = combine(c);
            if (!t.is_zero() && determinant(t) != 0) return t;
            int i = 0;
            while (i < m && c[i] == d) c[i++] = 0;
            if (i == m) break;
            c[i] += 1;
        }
        return std::nullopt;
    }

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(-d, d);
    for (int trial = 0; trial < 64; ++trial) {
        std::vector<Rational> c(m);
        for (auto& x : c) x = Rational(dist(rng));
        Matrix t = combine(c);
        if (!t.is_zero() && determinant(t) != 0) return t;
    }

    std::vector<std::vector<detail::MultiPoly>> sym(d, std::vector<detail::MultiPoly>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            detail::MultiPoly p = detail::MultiPoly::constant(m, Rational(0));
            for (int v = 0; v < m; ++v)
                p = p + detail::MultiPoly::variable(m, v, basis[v](i, j));
            sym[i][j] = p;
        }
    if (detail::symbolic_determinant(sym).is_zero()) return std::nullopt;
    // Nonzero polynomial of degree <= d per variable: some grid point hits it.
    std::vector<Rational> c(m, Rational(0));
    while (true) {
        Matrix t = combine(c);
        if (!t.is_zero() && determinant(t) != 0) return t;
        int i = 0;
        while (i < m && c[i] == d) c[i++] = 0;
        if (i == m) throw InconsistencyError("is_isomorphic: nonzero determinant "
                                             "polynomial vanished on the full grid");
        c[i] += 1;
    }
}

struct Classification {
    ClassLabel label;
    Matrix conjugator; // invertible C with C img(y) C^{-1} = canonical img(y)
};

namespace detail {

inline void certify_or_throw(const Representation& rep, const Representation& canonical,
                             const Matrix& conjugator, unsigned seed) {
    std::vector<Matrix> imgs1 = all_images(rep);
    std::vector<Matrix> imgs2 = all_images(canonical);
    bool ok = imgs1.size() == imgs2.size();
    for (std::size_t i = 0; ok && i < imgs1.size(); ++i)
        if (conjugator * imgs1[i] != imgs2[i] * conjugator) ok = false;
    if (ok) return;
    // The direct certificate can only fail on an internal defect; get a
    // second opinion from the full intertwiner search before giving up.
    if (is_isomorphic(rep, canonical, seed)) return;
    throw InconsistencyError("classify_single_block: certification failed");
}

} // namespace detail

// Canonical label of a faithful uniserial representation of a single-block
// algebra with lambda != 0, together with an explicit conjugator onto the
// constructed model. Theorem-contradicting inputs raise InconsistencyError.
inline Classification classify_single_block(const Representation& rep,
                                            unsigned seed = kDefaultSeed) {
    const JordanSpec& spec = rep.algebra.spec;
    if (spec.block_count() != 1)
        throw DomainError("classify_single_block: single-block algebra required");
    Rational lambda = spec.blocks[0].eigenvalue;
    if (lambda == 0)
        throw DomainError("classify_single_block: lambda = 0 is out of scope");
    int n = spec.blocks[0].size;
    if (!verify_representation(rep).ok)
        throw DomainError("classify_single_block: not a representation");
    if (!detail::images_independent(rep))
        throw DomainError("classify_single_block: representation is not faithful");
    if (!is_uniserial(rep))
        throw DomainError("classify_single_block: representation is not uniserial");

    RationalSpectrum spectrum = rational_eigenvalues(rep.a);
    if (!spectrum.split)
        throw DomainError("classify_single_block: spectrum of A is not rational");
    std::vector<Rational> roots;
    for (const auto& [mu, mult] : spectrum.roots) roots.push_back(mu);

    // The eigenvalues must form the progression alpha, alpha-lambda, ...
    std::vector<Rational> tops;
    for (const auto& mu : roots)
        if (std::find(roots.begin(), roots.end(), mu + lambda) == roots.end())
            tops.push_back(mu);
    if (tops.size() != 1)
        throw InconsistencyError("classify_single_block: eigenvalues of A are not a "
                                 "lambda-progression");
    Rational alpha = tops[0];
    std::vector<Rational> progression;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        Rational mu = alpha - static_cast<long>(i) * lambda;
        if (std::find(roots.begin(), roots.end(), mu) == roots.end())
            throw InconsistencyError("classify_single_block: eigenvalues of A are not a "
                                     "lambda-progression");
        progression.push_back(mu);
    }

    JordanForm jf = jordan_form(rep.a, progression);
    int l = static_cast<int>(jf.blocks.size());
    if (l != static_cast<int>(progression.size()))
        throw InconsistencyError("classify_single_block: repeated Jordan blocks for one "
                                 "eigenvalue");
    std::vector<int> sizes;
    for (const auto& [mu, size] : jf.blocks) sizes.push_back(size);

    Matrix e0 = jf.p * rep.generators[0] * inverse(jf.p);

    ClassLabel label;
    label.alpha = alpha;
    label.lambda = lambda;
    Matrix x_total;

    auto normalize = [&](const std::vector<int>& block_sizes) {
        try {
            return normalize_superdiagonal(e0, block_sizes);
        } catch (const DomainError& err) {
            throw InconsistencyError(std::string("classify_single_block: ") + err.what());
        } catch (const InputError& err) {
            throw InconsistencyError(std::string("classify_single_block: ") + err.what());
        }
    };

    if (n == 1) {
        if (l < 2 || l != rep.d)
            throw InconsistencyError("classify_single_block: n = 1 requires a diagonalizable "
                                     "progression of length d");
        SuperdiagonalNormalization norm = normalize(sizes);
        if (norm.h != Matrix::jordan_upper(l, Rational(0)))
            throw InconsistencyError("classify_single_block: normalized generator is not "
                                     "the expected nilpotent Jordan block");
        label.kind = LabelKind::DIAG;
        label.ell = l;
        x_total = norm.x;
    } else if (l == 2 && rep.d == n + 1) {
        SuperdiagonalNormalization norm = normalize(sizes);
        int k = sizes[0], q = sizes[1];
        Matrix n_mat = norm.h.block(0, k, k, q);
        label.n = n;
        if (k == n) {
            label.kind = LabelKind::TOP;
        } else if (k == 1) {
            label.kind = LabelKind::BOTTOM;
        } else {
            label.kind = LabelKind::KX;
            label.k = k;
            label.x_block = n_mat.block(0, 1, k - 1, q - 1);
        }
        x_total = norm.x;
    } else if (l == 3 && rep.d == n + 2 && sizes[0] == 1 && sizes[2] == 1) {
        if (sizes[1] != n)
            throw InconsistencyError("classify_single_block: middle Jordan block has wrong "
                                     "size");
        SuperdiagonalNormalization norm = normalize(sizes);
        std::vector<Rational> a(n);
        for (int t = 0; t < n; ++t) a[t] = norm.h(0, 1 + t);
        if (n % 2 == 0)
            throw InconsistencyError("classify_single_block: dimension n + 2 with even n");
        for (int i = 1; i < n; i += 2)
            if (a[i] != 0)
                throw InconsistencyError("classify_single_block: even entry of a does not "
                                         "vanish");
        label.kind = LabelKind::AA;
        label.n = n;
        label.a = a;
        x_total = norm.x;
    } else {
        std::string shape;
        for (int s : sizes) shape += (shape.empty() ? "" : ",") + std::to_string(s);
        throw InconsistencyError("classify_single_block: Jordan structure (" + shape +
                                 ") with d = " + std::to_string(rep.d) + ", n = " +
                                 std::to_string(n) + " contradicts the classification");
    }

    label.validate();
    Representation canonical = construct_R(label);
    Matrix conjugator = x_total * jf.p;
    detail::certify_or_throw(rep, canonical, conjugator, seed);
    return {label, conjugator};
}

struct RestrictionProfile {
    int d = 0;
    int n = 0;
    std::string case_tag; // "n+1" | "n+2"
    ClassLabel label;     // label of the restriction to the first block
};

// Restricts a faithful uniserial representation of a multi-block algebra to
// its first block, checks the restriction is uniserial, and reports which of
// the two dimension cases holds together with the restriction's label.
inline RestrictionProfile restriction_profile(const Representation& rep,
                                              unsigned seed = kDefaultSeed) {
    if (rep.algebra.spec.block_count() < 2)
        throw InputError("restriction_profile: multi-block algebra required");
    if (!verify_representation(rep).ok)
        throw DomainError("restriction_profile: not a representation");
    if (!detail::images_independent(rep))
        throw DomainError("restriction_profile: representation is not faithful");
    if (!is_uniserial(rep))
        throw DomainError("restriction_profile: representation is not uniserial");

    Representation restricted = restrict_to_blocks(rep, {0});
    if (!is_uniserial(restricted))
        throw InconsistencyError("restriction_profile: restriction to the first block is "
                                 "not uniserial");

    RestrictionProfile out;
    out.d = rep.d;
    out.n = rep.algebra.spec.blocks[0].size;

    Classification cls;
    try {
        cls = classify_single_block(restricted, seed);
    } catch (const DomainError& err) {
        throw InconsistencyError(std::string("restriction_profile: restriction defies "
                                             "classification: ") + err.what());
    }
    out.label = cls.label;

    if (out.d == out.n + 1) {
        if (cls.label.kind != LabelKind::KX)
            throw InconsistencyError("restriction_profile: d = n + 1 restriction is not of "
                                     "split type");
        out.case_tag = "n+1";
    } else if (out.d == out.n + 2) {
        if (cls.label.kind != LabelKind::AA)
            throw InconsistencyError("restriction_profile: d = n + 2 restriction is not of "
                                     "corner type");
        out.case_tag = "n+2";
    } else {
        throw InconsistencyError("restriction_profile: d is neither n + 1 nor n + 2");
    }
    return out;
}

} // namespace uniserial
