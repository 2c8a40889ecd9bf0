#include "nilbu/homology.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace nilbu {

using namespace arith;

Int to_int(const BigInt& x) {
    if (x > std::numeric_limits<Int>::max() || x < std::numeric_limits<Int>::min())
        throw OverflowError("integer " + x.str() + " does not fit in 64 bits");
    return static_cast<Int>(x);
}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> row_major)
    : rows_(rows), cols_(cols), data_(row_major.begin(), row_major.end()) {
    if (data_.size() != rows * cols)
        throw Error("matrix data does not match its dimensions");
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntegerMatrix operator*(const IntegerMatrix& x, const IntegerMatrix& y) {
    if (x.cols_ != y.rows_)
        throw Error("matrix dimension mismatch in product");
    IntegerMatrix out(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t k = 0; k < x.cols_; ++k) {
            const BigInt& a = x(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < y.cols_; ++j)
                out(i, j) += a * y(k, j);
        }
    return out;
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(i, c), (*this)(j, c));
}

void IntegerMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, i), (*this)(r, j));
}

void IntegerMatrix::add_row_multiple(std::size_t i, std::size_t j, const BigInt& k) {
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(i, c) += k * (*this)(j, c);
}

void IntegerMatrix::add_col_multiple(std::size_t i, std::size_t j, const BigInt& k) {
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, i) += k * (*this)(r, j);
}

void IntegerMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(i, c) = -(*this)(i, c);
}

void IntegerMatrix::negate_col(std::size_t i) {
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, i) = -(*this)(r, i);
}

BigInt IntegerMatrix::determinant() const {
    if (rows_ != cols_)
        throw Error("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0)
        return 1;
    // Bareiss: every division below is exact
    IntegerMatrix a = *this;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? ", " : "") << (*this)(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// Quotient with the remainder in [-|b|/2, |b|/2].
BigInt nearest_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b; // truncates
    const BigInt r = a - q * b;
    if (2 * abs(r) > abs(b))
        q += (r < 0) == (b < 0) ? 1 : -1;
    return q;
}

struct Bezout {
    BigInt g, x, y;
};

// g = gcd(a, b) = x a + y b for positive a, b.
Bezout extended_gcd(const BigInt& a, const BigInt& b) {
    BigInt r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        const BigInt q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        x0 -= q * x1;
        std::swap(x0, x1);
        y0 -= q * y1;
        std::swap(y0, y1);
    }
    return {r0, x0, y0};
}

} // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    SmithDecomposition out{m, IntegerMatrix::identity(rows), IntegerMatrix::identity(cols),
                           IntegerMatrix::identity(cols)};
    auto& S = out.S;
    auto& U = out.U;
    auto& V = out.V;
    auto& Vi = out.V_inverse;

    auto row_op = [&](std::size_t i, std::size_t j, const BigInt& k) { // row i += k row j
        S.add_row_multiple(i, j, k);
        U.add_row_multiple(i, j, k);
    };
    auto col_op = [&](std::size_t i, std::size_t j, const BigInt& k) { // col i += k col j
        S.add_col_multiple(i, j, k);
        V.add_col_multiple(i, j, k);
        Vi.add_row_multiple(j, i, -k);
    };

    // Diagonalize.
    const std::size_t diag = std::min(rows, cols);
    std::size_t rank = 0;
    for (std::size_t t = 0; t < diag; ++t) {
        bool clean = false;
        while (!clean) {
            bool found = false;
            std::size_t pi = t, pj = t;
            BigInt best = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    const BigInt x = abs(S(i, j));
                    if (x != 0 && (!found || x < best)) {
                        found = true;
                        best = x;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found)
                break; // remaining block is zero

            S.swap_rows(t, pi);
            U.swap_rows(t, pi);
            S.swap_cols(t, pj);
            V.swap_cols(t, pj);
            Vi.swap_rows(t, pj);

            clean = true;
            const BigInt p = S(t, t);
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (const BigInt q = nearest_div(S(i, t), p); q != 0)
                    row_op(i, t, -q);
                clean = clean && S(i, t) == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (const BigInt q = nearest_div(S(t, j), p); q != 0)
                    col_op(j, t, -q);
                clean = clean && S(t, j) == 0;
            }
        }
        if (!clean)
            break;
        if (S(t, t) < 0) {
            S.negate_row(t);
            U.negate_row(t);
        }
        rank = t + 1;
    }

    // Divisibility chain: replace (a, b) on the diagonal by (gcd, lcm) with
    // the unimodular pair [[x, y], [-b/g, a/g]] on rows and
    // [[1, -y b/g], [1, x a/g]] on columns, where x a + y b = g.
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i + 1; j < rank; ++j) {
            const BigInt a = S(i, i);
            const BigInt b = S(j, j);
            if (b % a == 0)
                continue;
            const auto [g, x, y] = extended_gcd(a, b);
            const BigInt ag = a / g;
            const BigInt bg = b / g;
            for (std::size_t c = 0; c < rows; ++c) {
                const BigInt ui = U(i, c), uj = U(j, c);
                U(i, c) = x * ui + y * uj;
                U(j, c) = ag * uj - bg * ui;
            }
            const BigInt p = y * bg;
            const BigInt q = x * ag;
            for (std::size_t r = 0; r < cols; ++r) {
                const BigInt vi = V(r, i), vj = V(r, j);
                V(r, i) = vi + vj;
                V(r, j) = q * vj - p * vi;
            }
            // inverse of the column pair is [[x a/g, y b/g], [-1, 1]]
            for (std::size_t c = 0; c < cols; ++c) {
                const BigInt wi = Vi(i, c), wj = Vi(j, c);
                Vi(i, c) = q * wi + p * wj;
                Vi(j, c) = wj - wi;
            }
            S(i, i) = g;
            S(j, j) = a * bg;
        }
    return out;
}

// ---------------------------------------------------------------------------

const std::vector<Int>& AbelianGroup::image(std::string_view generator) const {
    const auto it = std::find(generator_names.begin(), generator_names.end(), generator);
    if (it == generator_names.end())
        throw Error("unknown generator '" + std::string(generator) + "'");
    return gen_images[static_cast<std::size_t>(it - generator_names.begin())];
}

std::vector<Int> AbelianGroup::combine(std::span<const Int> coeffs) const {
    if (coeffs.size() != gen_images.size())
        throw Error("coefficient count does not match generator count");
    std::vector<Int> out(dimension(), 0);
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] = add(out[k], mul(coeffs[j], gen_images[j][k]));
    const auto fr = static_cast<std::size_t>(free_rank);
    for (std::size_t k = fr; k < out.size(); ++k)
        out[k] = mod(out[k], torsion[k - fr]);
    return out;
}

bool AbelianGroup::is_zero(std::span<const Int> coords) const {
    const auto fr = static_cast<std::size_t>(free_rank);
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (k < fr ? coords[k] != 0 : mod(coords[k], torsion[k - fr]) != 0)
            return false;
    }
    return true;
}

Int AbelianGroup::order(std::span<const Int> coords) const {
    const auto fr = static_cast<std::size_t>(free_rank);
    Int result = 1;
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (k < fr) {
            if (coords[k] != 0)
                return 0;
            continue;
        }
        const Int d = torsion[k - fr];
        result = lcm(result, d / gcd(d, mod(coords[k], d)));
    }
    return result;
}

std::vector<Int>
AbelianGroup::element(const std::vector<std::pair<std::string, Int>>& terms) const {
    std::vector<Int> coeffs(generator_names.size(), 0);
    for (const auto& [name, k] : terms) {
        const auto it = std::find(generator_names.begin(), generator_names.end(), name);
        if (it == generator_names.end())
            throw Error("unknown generator '" + std::string(name) + "'");
        auto& slot = coeffs[static_cast<std::size_t>(it - generator_names.begin())];
        slot = add(slot, k);
    }
    return combine(coeffs);
}

bool isomorphic(const AbelianGroup& x, const AbelianGroup& y) {
    return x.free_rank == y.free_rank && x.torsion == y.torsion;
}

std::string describe(const AbelianGroup& g) {
    std::ostringstream os;
    bool first = true;
    if (g.free_rank > 0) {
        os << 'Z';
        if (g.free_rank > 1)
            os << '^' << g.free_rank;
        first = false;
    }
    for (Int d : g.torsion) {
        os << (first ? "" : " + ") << "Z_" << d;
        first = false;
    }
    if (first)
        os << '0';
    return os.str();
}

IntegerMatrix relation_matrix(const FinitePresentation& pres) {
    const std::size_t n = pres.generators.size();
    IntegerMatrix m(pres.relators.size(), n);
    for (std::size_t i = 0; i < pres.relators.size(); ++i) {
        const auto sums = exponent_sums(pres.relators[i], n);
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = sums[j];
    }
    return m;
}

AbelianGroup abelianization(const FinitePresentation& pres) {
    // Relations R x = 0 become S y = 0 with y = V^-1 x, so generator x_j maps
    // to row j of V and basis element y_k is row k of V^-1.
    const IntegerMatrix R = relation_matrix(pres);
    const SmithDecomposition snf = smith_normal_form(R);
    const std::size_t n = pres.generators.size();
    const std::size_t diag = std::min(R.rows(), R.cols());

    std::vector<std::size_t> free_coords, torsion_coords;
    std::vector<Int> torsion;
    for (std::size_t k = 0; k < n; ++k) {
        const Int d = k < diag ? to_int(snf.S(k, k)) : 0;
        if (d == 0)
            free_coords.push_back(k);
        else if (d > 1) {
            torsion_coords.push_back(k);
            torsion.push_back(d);
        }
    }

    AbelianGroup g;
    g.free_rank = static_cast<Int>(free_coords.size());
    g.torsion = torsion;
    g.generator_names = pres.generators;
    std::vector<std::size_t> order = free_coords;
    order.insert(order.end(), torsion_coords.begin(), torsion_coords.end());

    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Int> coords;
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
            const BigInt& x = snf.V(j, order[pos]);
            if (pos < free_coords.size()) {
                coords.push_back(to_int(x));
            } else {
                const Int d = torsion[pos - free_coords.size()];
                BigInt r = x % d;
                if (r < 0)
                    r += d;
                coords.push_back(to_int(r));
            }
        }
        g.gen_images.push_back(std::move(coords));
    }
    for (std::size_t k : order) {
        std::vector<Int> row(n);
        for (std::size_t j = 0; j < n; ++j)
            row[j] = to_int(snf.V_inverse(k, j));
        g.basis_in_generators.push_back(std::move(row));
    }
    return g;
}

AbelianGroup h1(const NilManifold& m) { return abelianization(fundamental_group(m.expand())); }

Int mod2_rank(const AbelianGroup& g) {
    Int r = g.free_rank;
    for (Int d : g.torsion)
        if (d % 2 == 0)
            ++r;
    return r;
}

bool torsion_subgroup_killed_by(std::span<const int> phi, const AbelianGroup& g) {
    if (phi.size() != g.generator_names.size())
        throw InvalidCharacter("character does not match the group's generators");
    for (std::size_t k = static_cast<std::size_t>(g.free_rank); k < g.dimension(); ++k) {
        Int value = 0;
        for (std::size_t j = 0; j < phi.size(); ++j)
            value = add(value, mul(g.basis_in_generators[k][j], phi[j]));
        if (mod(value, 2) != 0)
            return false;
    }
    return true;
}

} // namespace nilbu
