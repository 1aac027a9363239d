#pragma once

#include "baric/algebra.hpp"

namespace baric {

// Small named algebras used by the self-check suite, the CLI demos, and
// the tests.  Each is interesting for how many weight homomorphisms it
// has and why.

/// 3-dimensional, non-commutative:
///   e1^2 = e2, e2^2 = e2, e3^2 = e2,
///   e1 e2 = e1, e2 e1 = e3, e1 e3 = e2, e3 e1 = e2, e2 e3 = e3, e3 e2 = e3.
/// Over Q it has exactly two weight homomorphisms, (1,1,1) and
/// (-1,1,-1); over GF(2) the two collapse to one.
Algebra two_weight_cycle(const FieldSpec& spec);

/// 2-dimensional with two idempotents and one-sided mixed products:
///   e1^2 = e1, e2^2 = e2, e1 e2 = e1 + e2, e2 e1 = 0.
/// Its quadratic system has no non-trivial solution, so the algebra is
/// not baric.
Algebra idempotent_pair(const FieldSpec& spec);

/// 1-dimensional with e^2 = e (the scalar field as an algebra).
Algebra scalar_line(const FieldSpec& spec);

/// idempotent_pair x scalar_line.  Exactly one weight homomorphism,
/// (0,0,1) = projection on the last factor, whose kernel contains the
/// idempotent (e1,0) and therefore is not nil: uniqueness without a
/// nil kernel.
Algebra unique_weight_product(const FieldSpec& spec);

/// n-dimensional with e_i e_j = e_1 for all i,j.  Semi-natural, and the
/// structure constants do not depend on the middle index, which forces
/// a single weight homomorphism (1,...,1).
Algebra constant_product(std::size_t n, const FieldSpec& spec);

/// n-dimensional with every gamma(i,j,k) = 1/n; requires n invertible
/// in the field.  Semi-natural with an all-equal tensor, so the kernel
/// of the all-ones homomorphism squares to zero.
Algebra uniform_tensor(std::size_t n, const FieldSpec& spec);

}  // namespace baric
