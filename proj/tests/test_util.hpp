#pragma once

#include "dgalab/cohomology.hpp"

#include <random>

namespace dgalab::testutil {

/// Deterministic pseudo-random elements for property tests.
class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}

  int uniform(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(gen_);
  }

  Rational rational() {
    static const int nums[] = {-3, -2, -1, 1, 2, 3, 5};
    static const int dens[] = {1, 1, 1, 2, 3};
    return Rational(nums[static_cast<size_t>(uniform(0, 6))], dens[static_cast<size_t>(uniform(0, 4))]);
  }

  /// Sparse element of the given degree (up to three basis monomials).
  Element element(const Model& m, int degree) {
    const LinearSlice& s = m.slice(degree);
    Element e;
    if (s.dim() == 0) return e;
    const int k = uniform(1, 3);
    for (int i = 0; i < k; ++i)
      e.add_term(s.basis[static_cast<size_t>(uniform(0, s.dim() - 1))], rational());
    return e;
  }

  /// Inhomogeneous element with terms in degrees [lo, hi].
  Element mixed_element(const Model& m, int lo, int hi) {
    Element e;
    const int k = uniform(1, 3);
    for (int i = 0; i < k; ++i) e += element(m, uniform(lo, hi));
    return e;
  }

  /// Random closed element of the given degree.
  Element closed_element(const Model& m, int degree) {
    const CohomologySlice& c = m.cohomology(degree);
    const LinearSlice& s = m.slice(degree);
    Element e;
    for (int i = 0; i < 2; ++i) {
      const Eigen::Index n = c.image_cols.cols() + c.rep_cols.cols();
      if (n == 0) return e;
      const Eigen::Index pick = uniform(0, static_cast<int>(n) - 1);
      const RationalVector v = pick < c.image_cols.cols()
                                   ? RationalVector(c.image_cols.col(pick))
                                   : RationalVector(c.rep_cols.col(pick - c.image_cols.cols()));
      Element term = element_from_coordinates(s, v);
      term *= rational();
      e += term;
    }
    return e;
  }

 private:
  std::mt19937 gen_;
};

}  // namespace dgalab::testutil
