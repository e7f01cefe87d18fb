#pragma once

#include "numfield/field.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace flt {

// Nonzero integral ideal of the maximal order, stored as the row HNF of a
// Z-basis over the integral basis (upper triangular, positive diagonal).
class Ideal {
  public:
    Ideal() = default;
    // H must already be the HNF of an O_K-module.
    Ideal(FieldPtr K, IntMatrix H);

    static Ideal unit(const FieldPtr& K);
    static Ideal from_integer(const FieldPtr& K, const Int& a);
    static Ideal principal(const FieldPtr& K, const IntVec& g);
    // Ideal generated by the given elements; throws DomainError if all are 0.
    static Ideal from_generators(const FieldPtr& K, const std::vector<IntVec>& gens);

    const FieldPtr& field() const { return K_; }
    const IntMatrix& hnf() const { return H_; }
    const Int& norm() const { return norm_; }
    int degree() const { return H_.rows(); }
    IntVec basis_row(int i) const { return H_.row(i); }
    bool is_unit() const { return norm_ == 1; }

    // Least positive integer in the ideal.
    Int min_integer() const;
    bool contains(const IntVec& x) const;
    // J is a subset of this ideal.
    bool contains(const Ideal& J) const;

    Ideal pow(unsigned long e) const;
    // (a, alpha) with a the least positive integer and alpha the first
    // element in HNF-box order such that (a, alpha) is the ideal.
    std::pair<Int, IntVec> two_element() const;

    friend Ideal operator*(const Ideal& a, const Ideal& b);
    friend Ideal operator+(const Ideal& a, const Ideal& b);
    friend bool operator==(const Ideal& a, const Ideal& b) { return a.H_ == b.H_; }
    friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }

  private:
    FieldPtr K_;
    IntMatrix H_;
    Int norm_;
};

// Element generation in HNF-box order: coefficient vectors on the HNF rows
// with max-norm 1, 2, ... in lexicographic order; visit returns true to stop.
// Throws CapError after max_count candidates.
void for_each_box_element(const Ideal& I, long max_count, const std::function<bool(const IntVec&)>& visit);

} // namespace flt
