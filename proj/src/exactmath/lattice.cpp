#include "exactmath/lattice.hpp"

#include <algorithm>

namespace flt {

namespace {

struct Gso {
    std::vector<std::vector<Rat>> mu;
    std::vector<Rat> B;
};

Gso gram_schmidt(const RatMatrix& G)
{
    int n = G.rows();
    Gso g;
    g.mu.assign(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n)));
    g.B.assign(static_cast<size_t>(n), Rat(0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            Rat s = G(i, j);
            for (int k = 0; k < j; ++k) s -= g.mu[j][k] * g.mu[i][k] * g.B[k];
            g.mu[i][j] = s / g.B[j];
        }
        Rat b = G(i, i);
        for (int k = 0; k < i; ++k) b -= g.mu[i][k] * g.mu[i][k] * g.B[k];
        g.B[i] = b;
        if (b <= 0) throw DomainError("Gram matrix is not positive definite");
    }
    return g;
}

Int round_rat(const Rat& x) { return floor(x + Rat(1, 2)); }

// b_k -= q * b_j on both T and the Gram matrix.
void reduce_row(RatMatrix& G, IntMatrix& T, int k, int j, const Int& q)
{
    if (q == 0) return;
    T.add_row(k, j, -q);
    Rat rq = q;
    G.add_row(k, j, -rq);
    G.add_col(k, j, -rq);
}

void swap_basis(RatMatrix& G, IntMatrix& T, int k, int j)
{
    T.swap_rows(k, j);
    G.swap_rows(k, j);
    G.swap_cols(k, j);
}

void check_symmetric(const RatMatrix& G)
{
    if (G.rows() != G.cols()) throw DomainError("Gram matrix must be square");
    for (int i = 0; i < G.rows(); ++i)
        for (int j = 0; j < i; ++j)
            if (G(i, j) != G(j, i)) throw DomainError("Gram matrix must be symmetric");
}

} // namespace

IntMatrix lll_gram(const RatMatrix& G0)
{
    check_symmetric(G0);
    int n = G0.rows();
    RatMatrix G = G0;
    IntMatrix T = IntMatrix::identity(n);
    if (n <= 1) {
        if (n == 1 && G(0, 0) <= 0) throw DomainError("Gram matrix is not positive definite");
        return T;
    }
    const Rat delta(3, 4);
    Gso g = gram_schmidt(G);
    int k = 1;
    while (k < n) {
        Int q = round_rat(g.mu[k][k - 1]);
        if (q != 0) {
            reduce_row(G, T, k, k - 1, q);
            g = gram_schmidt(G);
        }
        if (g.B[k] < (delta - g.mu[k][k - 1] * g.mu[k][k - 1]) * g.B[k - 1]) {
            swap_basis(G, T, k, k - 1);
            g = gram_schmidt(G);
            k = std::max(1, k - 1);
        } else {
            for (int j = k - 2; j >= 0; --j) {
                Int qj = round_rat(g.mu[k][j]);
                if (qj != 0) {
                    reduce_row(G, T, k, j, qj);
                    g = gram_schmidt(G);
                }
            }
            ++k;
        }
    }
    return T;
}

Rat quad_form(const RatMatrix& G, const IntVec& v)
{
    Rat s = 0;
    int n = G.rows();
    for (int i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        Rat row = 0;
        for (int j = 0; j < n; ++j)
            if (v[j] != 0) row += G(i, j) * v[j];
        s += row * v[i];
    }
    return s;
}

ShortVectorEnumerator::ShortVectorEnumerator(const RatMatrix& G) : n_(G.rows()), G_(G)
{
    check_symmetric(G);
    gram_schmidt(G);  // validates positive definiteness
    T_ = lll_gram(G);
    RatMatrix R = to_rat(T_) * G * to_rat(T_).transpose();
    Gso g = gram_schmidt(R);
    qdiag_ = g.B;
    qoff_.assign(static_cast<size_t>(n_), std::vector<Rat>(static_cast<size_t>(n_)));
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) qoff_[i][j] = g.mu[j][i];
}

void ShortVectorEnumerator::for_each(const Rat& bound, const std::function<bool(const IntVec&, const Rat&)>& visit) const
{
    if (n_ == 0 || bound <= 0) return;
    IntVec x(static_cast<size_t>(n_));
    bool stop = false;
    // recursive descent from the last coordinate; `top_zero` means all
    // coordinates above i are zero, in which case only x_i >= 0 is visited so
    // that each +-pair appears once
    std::function<void(int, const Rat&, bool)> rec = [&](int i, const Rat& remaining, bool top_zero) {
        Rat U = 0;
        for (int j = i + 1; j < n_; ++j)
            if (x[j] != 0) U += qoff_[i][j] * x[j];
        Rat r = remaining / qdiag_[i];
        Int s = ceil_sqrt(r);
        Int lo = floor(-U - Rat(s));
        Int hi = ceil(-U + Rat(s));
        auto fits = [&](const Int& v) {
            Rat t = Rat(v) + U;
            return t * t <= r;
        };
        while (lo <= hi && !fits(lo)) ++lo;
        while (hi >= lo && !fits(hi)) --hi;
        if (top_zero && lo < 0) lo = 0;
        for (Int v = lo; v <= hi && !stop; ++v) {
            x[i] = v;
            Rat t = Rat(v) + U;
            Rat rem = remaining - qdiag_[i] * t * t;
            bool tz = top_zero && v == 0;
            if (i == 0) {
                if (tz) continue;  // zero vector
                IntVec orig = row_times(x, T_);
                Rat q = bound - rem;
                if (!visit(orig, q)) stop = true;
            } else {
                rec(i - 1, rem, tz);
            }
        }
        x[i] = 0;
    };
    rec(n_ - 1, bound, true);
}

std::vector<IntVec> ShortVectorEnumerator::enumerate(const Rat& bound, size_t max_count) const
{
    std::vector<IntVec> out;
    bool capped = false;
    for_each(bound, [&](const IntVec& v, const Rat&) {
        IntVec w = v;
        for (int i = n_ - 1; i >= 0; --i) {
            if (w[i] == 0) continue;
            if (w[i] < 0)
                for (auto& c : w) c = -c;
            break;
        }
        out.push_back(std::move(w));
        if (max_count && out.size() > max_count) {
            capped = true;
            return false;
        }
        return true;
    });
    if (capped) throw CapError("short vector enumeration exceeded " + std::to_string(max_count) + " vectors");
    std::sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

std::vector<IntVec> enumerate_short_vectors(const RatMatrix& G, const Rat& bound, size_t max_count)
{
    return ShortVectorEnumerator(G).enumerate(bound, max_count);
}

} // namespace flt
