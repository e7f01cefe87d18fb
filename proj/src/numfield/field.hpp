#pragma once

#include "exactmath/matrix.hpp"
#include "exactmath/poly.hpp"
#include "exactmath/roots.hpp"

#include <complex>
#include <memory>
#include <optional>
#include <vector>

namespace flt {

using Complex = std::complex<long double>;

// Largest degree accepted by build_field.
inline constexpr int kMaxFieldDegree = 12;

// A number field Q(theta) with theta a root of a monic irreducible integer
// polynomial, together with its maximal order. Elements are coordinate
// vectors over the integral basis (IntVec for integral elements, RatVec in
// general). Immutable after construction.
class NumberField {
  public:
    const ZPoly& poly() const { return poly_; }
    int degree() const { return n_; }
    int r() const { return r_; }
    int s() const { return s_; }
    bool totally_real() const { return s_ == 0; }
    const Int& disc() const { return disc_; }
    const Int& index() const { return index_; }
    // Row i: power-basis coordinates of the i-th integral basis element.
    const RatMatrix& basis() const { return basis_; }
    const RatMatrix& basis_inv() const { return basis_inv_; }
    // omega_i * omega_j = sum_k table(i, j)[k] omega_k
    const IntVec& table(int i, int j) const { return table_[static_cast<size_t>(i) * n_ + j]; }
    const IntVec& trace_vector() const { return trace_; }
    // Isolating intervals of the real roots in ascending order; embedding j
    // (j < r) sends theta to the j-th of them.
    const std::vector<RationalInterval>& real_roots() const { return real_roots_; }
    // Approximate roots: r real roots ascending, then s roots with positive
    // imaginary part.
    const std::vector<Complex>& approx_roots() const { return approx_roots_; }

    // Complex conjugation as a matrix on coordinates (x -> x * C) when it is a
    // field automorphism (totally real: identity; CM fields built here).
    const std::optional<IntMatrix>& conjugation() const { return conj_; }
    bool is_cm() const { return conj_.has_value() && s_ > 0; }

    // Element helpers
    IntVec one() const;
    IntVec unit_vector(int i) const;
    RatVec from_int(const IntVec& x) const;
    IntVec from_integer(const Int& a) const;
    RatVec from_rational(const Rat& a) const;
    // theta in integral-basis coordinates.
    RatVec theta() const;
    RatVec from_power(const RatVec& power_coords) const;
    RatVec from_poly(const QPoly& g) const;
    RatVec to_power(const RatVec& x) const;
    QPoly to_poly(const RatVec& x) const;

    IntVec mul(const IntVec& a, const IntVec& b) const;
    RatVec mul(const RatVec& a, const RatVec& b) const;
    IntVec pow(const IntVec& a, unsigned long e) const;
    RatVec pow(const RatVec& a, long e) const;
    RatVec inverse(const RatVec& a) const;
    // Rows: coordinates of a * omega_i.
    IntMatrix mul_matrix(const IntVec& a) const;
    RatMatrix mul_matrix(const RatVec& a) const;

    Int norm(const IntVec& a) const;
    Rat norm(const RatVec& a) const;
    Int trace(const IntVec& a) const;
    Rat trace(const RatVec& a) const;
    QPoly charpoly(const RatVec& a) const;
    // Minimal polynomial (monic, rational coefficients).
    QPoly minpoly(const RatVec& a) const;

    static bool is_integral(const RatVec& a);
    static IntVec to_int(const RatVec& a);

    // Signs under the real embeddings, exact.
    std::vector<int> real_signs(const RatVec& a) const;
    bool is_totally_positive(const RatVec& a) const;

    // Approximate images under the r + s inequivalent embeddings.
    std::vector<Complex> embed(const RatVec& a) const;
    // Approximate T2 = sum over all n embeddings of |sigma(a)|^2.
    long double t2_approx(const RatVec& a) const;
    // Exact Gram matrix of T2 on the integral basis; available for totally
    // real and CM fields. Throws DomainError otherwise.
    RatMatrix t2_gram() const;
    bool has_exact_t2() const { return totally_real() || is_cm(); }

    // Matrix (rows: images of omega_i) of the automorphism sending theta to
    // the given element. Throws VerificationError if that is not a root of
    // the defining polynomial or the images are not integral.
    IntMatrix automorphism(const RatVec& theta_image) const;
    // Applies a coordinate automorphism matrix.
    RatVec apply(const IntMatrix& m, const RatVec& a) const;

  private:
    friend class FieldBuilder;
    ZPoly poly_;
    int n_ = 0, r_ = 0, s_ = 0;
    Int disc_, index_;
    RatMatrix basis_, basis_inv_;
    std::vector<IntVec> table_;
    IntVec trace_;
    std::vector<RationalInterval> real_roots_;
    std::vector<Complex> approx_roots_;
    std::optional<IntMatrix> conj_;
    std::optional<RatMatrix> t2_;
    RatMatrix compute_t2() const;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Builds Q[x]/(f) with its maximal order. f must be monic and irreducible
// of degree between 1 and kMaxFieldDegree. Throws DomainError naming a factor
// for reducible f, DomainError for non-monic f, CapError above the degree cap.
FieldPtr build_field(const ZPoly& f);

// Builds the field with the maximal order obtained by enlarging the given
// starting order (rows: power-basis coordinates) at the listed primes only.
// The caller guarantees the starting order is maximal at every other prime.
// conj_theta, when given, is the power-basis image of theta under complex
// conjugation (an automorphism of a CM field); it is checked numerically.
FieldPtr build_field_from_order(const ZPoly& f, const RatMatrix& order_basis, const std::vector<Int>& primes,
                                std::optional<RatVec> conj_theta = std::nullopt);

// Dedekind criterion: whether Z[theta] is p-maximal.
bool dedekind_p_maximal(const ZPoly& f, const Int& p);

// Approximate complex roots of a squarefree polynomial (Aberth iteration),
// ordered as in NumberField::approx_roots.
std::vector<Complex> approx_roots(const ZPoly& f);

} // namespace flt
