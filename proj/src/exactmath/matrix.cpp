#include "exactmath/matrix.hpp"

#include <algorithm>

namespace flt {

RatMatrix to_rat(const IntMatrix& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}

IntVec row_times(const IntVec& v, const IntMatrix& m)
{
    IntVec out(static_cast<size_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
    }
    return out;
}

RatVec row_times(const RatVec& v, const RatMatrix& m)
{
    RatVec out(static_cast<size_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
    }
    return out;
}

namespace {

// (Ri, Rk) <- (s*Ri + t*Rk, u*Ri + v*Rk) for a unimodular 2x2 block.
template <typename M>
void combine_rows(M& m, int i, int k, const Int& s, const Int& t, const Int& u, const Int& v)
{
    for (int j = 0; j < m.cols(); ++j) {
        Int x = m(i, j), y = m(k, j);
        m(i, j) = s * x + t * y;
        m(k, j) = u * x + v * y;
    }
}

HnfResult hnf_impl(const IntMatrix& M, bool track)
{
    HnfResult res;
    res.H = M;
    int r = M.rows(), c = M.cols();
    if (track) res.U = IntMatrix::identity(r);
    IntMatrix& H = res.H;
    int row = 0;
    for (int col = 0; col < c && row < r; ++col) {
        for (int i = row + 1; i < r; ++i) {
            if (H(i, col) == 0) continue;
            if (H(row, col) == 0) {
                H.swap_rows(row, i);
                if (track) res.U.swap_rows(row, i);
                continue;
            }
            Int a = H(row, col), b = H(i, col);
            Xgcd x = xgcd(a, b);
            Int ag = a / x.g, bg = b / x.g;
            combine_rows(H, row, i, x.s, x.t, Int(-bg), ag);
            if (track) combine_rows(res.U, row, i, x.s, x.t, Int(-bg), ag);
        }
        if (H(row, col) == 0) continue;
        if (H(row, col) < 0) {
            for (int j = 0; j < c; ++j) H(row, j) = -H(row, j);
            if (track)
                for (int j = 0; j < r; ++j) res.U(row, j) = -res.U(row, j);
        }
        for (int k = 0; k < row; ++k) {
            Int q = floor_div(H(k, col), H(row, col));
            if (q == 0) continue;
            H.add_row(k, row, -q);
            if (track) res.U.add_row(k, row, -q);
        }
        ++row;
    }
    res.rank = row;
    return res;
}

} // namespace

HnfResult hnf(const IntMatrix& M) { return hnf_impl(M, true); }

IntMatrix hnf_only(const IntMatrix& M) { return hnf_impl(M, false).H; }

HnfModAccumulator::HnfModAccumulator(int n, const Int& D) : n_(n), D_(abs(D))
{
    if (D_ == 0) throw DomainError("hnf_mod: modulus must be nonzero");
    w_.assign(static_cast<size_t>(n), IntVec(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i) w_[i][i] = D_;
}

void HnfModAccumulator::add(IntVec v)
{
    for (auto& x : v) x = mod(x, D_);
    for (int i = 0; i < n_; ++i) {
        if (v[i] == 0) continue;
        IntVec& w = w_[i];
        Int a = w[i], b = v[i];
        Xgcd x = xgcd(a, b);
        Int ag = a / x.g, bg = b / x.g;
        IntVec nw(static_cast<size_t>(n_)), nv(static_cast<size_t>(n_));
        for (int j = i; j < n_; ++j) {
            nw[j] = x.s * w[j] + x.t * v[j];
            nv[j] = ag * v[j] - bg * w[j];
        }
        nw[i] = x.g;
        for (int j = i + 1; j < n_; ++j) {
            nw[j] = mod(nw[j], D_);
            nv[j] = mod(nv[j], D_);
        }
        nv[i] = 0;
        w = std::move(nw);
        v = std::move(nv);
    }
}

IntMatrix HnfModAccumulator::basis() const
{
    IntMatrix H(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) H(i, j) = w_[i][j];
    for (int i = 1; i < n_; ++i) {
        for (int k = 0; k < i; ++k) {
            Int q = floor_div(H(k, i), H(i, i));
            if (q != 0) H.add_row(k, i, -q);
        }
    }
    return H;
}

IntMatrix hnf_mod(const IntMatrix& M, const Int& D)
{
    HnfModAccumulator acc(M.cols(), D);
    for (int i = 0; i < M.rows(); ++i) acc.add(M.row(i));
    return acc.basis();
}

SnfResult snf(const IntMatrix& M)
{
    SnfResult res;
    IntMatrix A = M;
    int r = A.rows(), c = A.cols();
    res.U = IntMatrix::identity(r);
    res.V = IntMatrix::identity(c);
    int m = std::min(r, c);
    for (int k = 0; k < m; ++k) {
        while (true) {
            // pivot of least absolute value in the remaining block
            int pi = -1, pj = -1;
            Int best;
            for (int i = k; i < r; ++i)
                for (int j = k; j < c; ++j) {
                    if (A(i, j) == 0) continue;
                    if (pi < 0 || abs(A(i, j)) < best) {
                        best = abs(A(i, j));
                        pi = i;
                        pj = j;
                        if (best == 1) goto found;
                    }
                }
        found:
            if (pi < 0) break;
            A.swap_rows(k, pi);
            res.U.swap_rows(k, pi);
            A.swap_cols(k, pj);
            res.V.swap_cols(k, pj);
            bool clean = true;
            for (int i = k + 1; i < r; ++i) {
                if (A(i, k) == 0) continue;
                Int q = floor_div(A(i, k), A(k, k));
                A.add_row(i, k, -q);
                res.U.add_row(i, k, -q);
                if (A(i, k) != 0) clean = false;
            }
            for (int j = k + 1; j < c; ++j) {
                if (A(k, j) == 0) continue;
                Int q = floor_div(A(k, j), A(k, k));
                A.add_col(j, k, -q);
                res.V.add_col(j, k, -q);
                if (A(k, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility condition
            int bad = -1;
            for (int i = k + 1; i < r && bad < 0; ++i)
                for (int j = k + 1; j < c; ++j)
                    if (!divides(A(k, k), A(i, j))) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            A.add_row(k, bad, Int(1));
            res.U.add_row(k, bad, Int(1));
        }
        if (A(k, k) < 0) {
            for (int j = 0; j < c; ++j) A(k, j) = -A(k, j);
            for (int j = 0; j < r; ++j) res.U(k, j) = -res.U(k, j);
        }
    }
    for (int k = 0; k < m; ++k) res.diag.push_back(A(k, k));
    return res;
}

Int det(const IntMatrix& M0)
{
    int n = M0.rows();
    if (n != M0.cols()) throw DomainError("det: matrix is not square");
    if (n == 0) return 1;
    IntMatrix M = M0;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (M(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            M.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int v = M(i, j) * M(k, k) - M(i, k) * M(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                M(i, j) = v;
            }
            M(i, k) = 0;
        }
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

Rat det(const RatMatrix& M0)
{
    int n = M0.rows();
    if (n != M0.cols()) throw DomainError("det: matrix is not square");
    RatMatrix M = M0;
    Rat d = 1;
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (M(i, k) != 0) {
                p = i;
                break;
            }
        if (p < 0) return 0;
        if (p != k) {
            M.swap_rows(k, p);
            d = -d;
        }
        d *= M(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (M(i, k) == 0) continue;
            Rat f = M(i, k) / M(k, k);
            M.add_row(i, k, -f);
        }
    }
    return d;
}

RatMatrix inverse(const RatMatrix& M0)
{
    int n = M0.rows();
    if (n != M0.cols()) throw DomainError("inverse: matrix is not square");
    RatMatrix M = M0, I = RatMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (M(i, k) != 0) {
                p = i;
                break;
            }
        if (p < 0) throw DomainError("inverse: singular matrix");
        M.swap_rows(k, p);
        I.swap_rows(k, p);
        Rat inv = 1 / M(k, k);
        for (int j = 0; j < n; ++j) {
            M(k, j) *= inv;
            I(k, j) *= inv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || M(i, k) == 0) continue;
            Rat f = M(i, k);
            M.add_row(i, k, -f);
            I.add_row(i, k, -f);
        }
    }
    return I;
}

RatVec solve_left(const RatMatrix& M, const RatVec& b)
{
    return row_times(b, inverse(M));
}

std::vector<IntVec> left_kernel_mod_p(const IntMatrix& M, const Int& p)
{
    // x * M = 0  <=>  M^T x^T = 0: row-reduce M^T and read off the kernel
    IntMatrix A = M.transpose();
    int r = A.rows(), c = A.cols();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) A(i, j) = mod(A(i, j), p);
    std::vector<int> pivcol;
    int row = 0;
    for (int col = 0; col < c && row < r; ++col) {
        int piv = -1;
        for (int i = row; i < r; ++i)
            if (A(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        A.swap_rows(row, piv);
        Int inv;
        mpz_invert(inv.get_mpz_t(), A(row, col).get_mpz_t(), p.get_mpz_t());
        for (int j = 0; j < c; ++j) A(row, j) = mod(A(row, j) * inv, p);
        for (int i = 0; i < r; ++i) {
            if (i == row || A(i, col) == 0) continue;
            Int f = A(i, col);
            for (int j = 0; j < c; ++j) A(i, j) = mod(A(i, j) - f * A(row, j), p);
        }
        pivcol.push_back(col);
        ++row;
    }
    std::vector<IntVec> ker;
    std::vector<bool> is_piv(static_cast<size_t>(c), false);
    for (int pc : pivcol) is_piv[pc] = true;
    for (int fc = 0; fc < c; ++fc) {
        if (is_piv[fc]) continue;
        IntVec v(static_cast<size_t>(c));
        v[fc] = 1;
        for (size_t k = 0; k < pivcol.size(); ++k) v[pivcol[k]] = mod(-A(static_cast<int>(k), fc), p);
        ker.push_back(std::move(v));
    }
    return ker;
}

int rank_mod_p(const IntMatrix& M, const Int& p)
{
    return M.rows() - static_cast<int>(left_kernel_mod_p(M, p).size());
}

int rank(const RatMatrix& M0)
{
    RatMatrix M = M0;
    int r = M.rows(), c = M.cols(), row = 0;
    for (int col = 0; col < c && row < r; ++col) {
        int piv = -1;
        for (int i = row; i < r; ++i)
            if (M(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        M.swap_rows(row, piv);
        for (int i = row + 1; i < r; ++i) {
            if (M(i, col) == 0) continue;
            Rat f = M(i, col) / M(row, col);
            M.add_row(i, row, -f);
        }
        ++row;
    }
    return row;
}

} // namespace flt
