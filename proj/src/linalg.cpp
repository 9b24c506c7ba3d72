#include "bhk/linalg.hpp"

#include "bhk/errors.hpp"

#include <algorithm>
#include <utility>

namespace bhk {

namespace {

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g = gcd(a, b) >= 0.
struct Egcd {
    Int g, s, t;
};

Egcd egcd(Int a, Int b) {
    Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        const Int q = a / b;
        Int r = a - q * b;
        a = std::exchange(b, r);
        Int s2 = s0 - q * s1;
        s0 = std::exchange(s1, s2);
        Int t2 = t0 - q * t1;
        t0 = std::exchange(t1, t2);
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        t0 = -t0;
    }
    return {a, s0, t0};
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_a -= q * row_b
void row_axpy(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) -= q * m(b, j);
}

// col_a -= q * col_b
void col_axpy(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) -= q * m(i, b);
}

// (col_a, col_b) <- (s*col_a + t*col_b, -bd*col_a + ad*col_b); det = s*ad + t*bd = 1.
void col_combine(IntMatrix& m, std::size_t a, std::size_t b, const Int& s, const Int& t,
                 const Int& ad, const Int& bd) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Int va = m(i, a);
        const Int vb = m(i, b);
        m(i, a) = s * va + t * vb;
        m(i, b) = ad * vb - bd * va;
    }
}

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

} // namespace

IntVector SnfDecomposition::diagonal() const {
    const std::size_t n = std::min(d.rows(), d.cols());
    IntVector out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = d(i, i);
    return out;
}

std::size_t SnfDecomposition::rank() const {
    std::size_t r = 0;
    for (const Int& e : diagonal())
        if (e != 0) ++r;
    return r;
}

Int det(const IntMatrix& m) {
    if (!m.is_square()) throw dimension_error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            swap_rows(a, k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                a(i, j) = num / prev; // exact division (Bareiss)
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

IntMatrix adjugate(const IntMatrix& m) {
    if (!m.is_square()) throw dimension_error("adjugate of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return m;
    if (n == 1) return IntMatrix::identity(1);
    IntMatrix adj(n, n);
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(mr, mc++) = m(r, c);
                }
                ++mr;
            }
            const Int cof = det(minor);
            adj(j, i) = ((i + j) % 2 == 0) ? cof : Int(-cof);
        }
    }
    return adj;
}

SnfDecomposition snf(const IntMatrix& m) {
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    IntMatrix d = m;
    IntMatrix u = IntMatrix::identity(r);
    IntMatrix v = IntMatrix::identity(c);

    const std::size_t steps = std::min(r, c);
    for (std::size_t t = 0; t < steps; ++t) {
        // pick the nonzero entry of smallest magnitude as pivot
        bool found = false;
        std::size_t pi = t, pj = t;
        Int best;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j) {
                if (d(i, j) == 0) continue;
                const Int a = abs_int(d(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        swap_rows(d, t, pi);
        swap_rows(u, t, pi);
        swap_cols(d, t, pj);
        swap_cols(v, t, pj);

        for (;;) {
            // clear below and to the right of the pivot; Euclidean remainders
            // shrink the pivot until it divides its whole row and column
            bool again = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (d(i, t) == 0) continue;
                const Int q = d(i, t) / d(t, t);
                row_axpy(d, i, t, q);
                row_axpy(u, i, t, q);
                if (d(i, t) != 0) {
                    swap_rows(d, t, i);
                    swap_rows(u, t, i);
                    again = true;
                }
            }
            if (again) continue;
            for (std::size_t j = t + 1; j < c; ++j) {
                if (d(t, j) == 0) continue;
                const Int q = d(t, j) / d(t, t);
                col_axpy(d, j, t, q);
                col_axpy(v, j, t, q);
                if (d(t, j) != 0) {
                    swap_cols(d, t, j);
                    swap_cols(v, t, j);
                    again = true;
                }
            }
            if (again) continue;
            // force the pivot to divide the trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < r && divides; ++i)
                for (std::size_t j = t + 1; j < c && divides; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        for (std::size_t k = 0; k < c; ++k) d(t, k) += d(i, k);
                        for (std::size_t k = 0; k < r; ++k) u(t, k) += u(i, k);
                        divides = false;
                    }
            if (divides) break;
        }
        if (d(t, t) < 0) {
            for (std::size_t j = 0; j < c; ++j) d(t, j) = -d(t, j);
            for (std::size_t j = 0; j < r; ++j) u(t, j) = -u(t, j);
        }
    }
    return {std::move(u), std::move(d), std::move(v)};
}

IntMatrix hnf_columns(const IntMatrix& gens) {
    const std::size_t r = gens.rows();
    const std::size_t c = gens.cols();
    IntMatrix h = gens;
    std::size_t pivcol = 0;
    for (std::size_t row = 0; row < r && pivcol < c; ++row) {
        std::size_t j0 = pivcol;
        while (j0 < c && h(row, j0) == 0) ++j0;
        if (j0 == c) continue;
        swap_cols(h, pivcol, j0);
        for (std::size_t j = pivcol + 1; j < c; ++j) {
            if (h(row, j) == 0) continue;
            const Int a = h(row, pivcol);
            const Int b = h(row, j);
            const auto [g, s, t] = egcd(a, b);
            col_combine(h, pivcol, j, s, t, a / g, b / g);
        }
        if (h(row, pivcol) < 0)
            for (std::size_t i = 0; i < r; ++i) h(i, pivcol) = -h(i, pivcol);
        const Int& piv = h(row, pivcol);
        for (std::size_t j = 0; j < pivcol; ++j) {
            const Int q = floor_div(h(row, j), piv);
            col_axpy(h, j, pivcol, q);
        }
        ++pivcol;
    }
    // trailing columns are zero; keep the rank-many basis columns
    IntMatrix out(r, pivcol);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < pivcol; ++j) out(i, j) = h(i, j);
    return out;
}

RatMatrix hnf_basis(const std::vector<RatVector>& generators, std::size_t ambient) {
    Int scale = 1;
    for (const RatVector& g : generators) {
        if (g.size() != ambient) throw dimension_error("generator length != ambient dimension");
        for (const Rat& e : g) scale = boost::multiprecision::lcm(scale, den(e));
    }
    IntMatrix cols(ambient, generators.size());
    for (std::size_t j = 0; j < generators.size(); ++j)
        for (std::size_t i = 0; i < ambient; ++i) {
            const Rat scaled = generators[j][i] * Rat(scale);
            cols(i, j) = num(scaled);
        }
    const IntMatrix h = hnf_columns(cols);
    if (h.cols() != ambient)
        throw rank_error("generators span a rank-deficient lattice");
    RatMatrix out(ambient, ambient);
    for (std::size_t i = 0; i < ambient; ++i)
        for (std::size_t j = 0; j < ambient; ++j) out(i, j) = Rat(h(i, j), scale);
    return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    const SnfDecomposition s = snf(m);
    const std::size_t rank = s.rank();
    const std::size_t c = m.cols();
    IntMatrix basis(c, c - rank);
    for (std::size_t j = rank; j < c; ++j)
        for (std::size_t i = 0; i < c; ++i) basis(i, j - rank) = s.v(i, j);
    return hnf_columns(basis);
}

std::optional<RatVector> solve_exact(const IntMatrix& m, const RatVector& rhs) {
    if (rhs.size() != m.rows()) throw dimension_error("rhs length != row count");
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    RatMatrix a(r, c + 1);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) a(i, j) = Rat(m(i, j));
        a(i, c) = rhs[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c && row < r; ++col) {
        std::size_t p = row;
        while (p < r && a(p, col) == 0) ++p;
        if (p == r) continue;
        for (std::size_t j = 0; j <= c; ++j) std::swap(a(row, j), a(p, j));
        const Rat inv = Rat(1) / a(row, col);
        for (std::size_t j = col; j <= c; ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == row || a(i, col) == 0) continue;
            const Rat f = a(i, col);
            for (std::size_t j = col; j <= c; ++j) a(i, j) -= f * a(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < r; ++i)
        if (a(i, c) != 0) return std::nullopt;
    RatVector x(c);
    for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = a(k, c);
    return x;
}

RatMatrix rat_inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw dimension_error("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a(p, col) == 0) ++p;
        if (p == n) throw rank_error("singular matrix");
        if (p != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(col, j), a(p, j));
                std::swap(inv(col, j), inv(p, j));
            }
        const Rat scale = Rat(1) / a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= scale;
            inv(col, j) *= scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            const Rat f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

Rat rat_det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw dimension_error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = m;
    Rat result = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a(p, col) == 0) ++p;
        if (p == n) return 0;
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(p, j));
            result = -result;
        }
        result *= a(col, col);
        const Rat inv = Rat(1) / a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            const Rat f = a(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return result;
}

} // namespace bhk
