#pragma once

#include "exactmath/matrix.hpp"

#include <functional>

namespace flt {

// LLL reduction (delta = 3/4) of the lattice with Gram matrix G. Returns the
// unimodular T such that the rows of T span the reduced basis, i.e. the
// reduced Gram matrix is T * G * T^t.
IntMatrix lll_gram(const RatMatrix& G);

// Exact Fincke-Pohst enumeration of { v in Z^n \ 0 : v G v^t <= bound }.
// The Gram matrix is LLL-reduced once at construction.
class ShortVectorEnumerator {
  public:
    // Throws DomainError unless G is symmetric positive definite.
    explicit ShortVectorEnumerator(const RatMatrix& G);

    int dim() const { return n_; }

    // Calls visit(v, q) once per +-pair (v in original coordinates, q its
    // value) until visit returns false. Visiting order is unspecified.
    void for_each(const Rat& bound, const std::function<bool(const IntVec&, const Rat&)>& visit) const;

    // One representative per +-pair with the last nonzero coordinate positive,
    // sorted colexicographically (last coordinate most significant). Throws
    // CapError if more than max_count vectors qualify (0 = unlimited).
    std::vector<IntVec> enumerate(const Rat& bound, size_t max_count = 0) const;

    const RatMatrix& gram() const { return G_; }

  private:
    int n_;
    RatMatrix G_;
    IntMatrix T_;                  // reduced basis rows in original coordinates
    std::vector<Rat> qdiag_;       // q_ii
    std::vector<std::vector<Rat>> qoff_;  // q_ij for j > i
};

std::vector<IntVec> enumerate_short_vectors(const RatMatrix& G, const Rat& bound, size_t max_count = 0);

// Value v G v^t.
Rat quad_form(const RatMatrix& G, const IntVec& v);

} // namespace flt
