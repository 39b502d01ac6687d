#pragma once

#include <string_view>
#include <vector>

#include "degenkit/exact.hpp"
#include "degenkit/quiver.hpp"

namespace degenkit {

enum class RepresentationType { Finite, Tame, Wild };

std::string_view to_string(RepresentationType t);

// Symmetric generalised Cartan matrix: 2 on the diagonal and -n(p,q)-n(q,p)
// elsewhere, in the quiver's vertex order.
IntMatrix cartan_matrix(const Quiver& q);

// Euler matrix E with E_pq = [p = q] - n(p,q).
IntMatrix euler_matrix(const Quiver& q);

// Coxeter transformation -E^{-T} E, acting on column vectors.
RationalMatrix coxeter_matrix(const Quiver& q);

// Classifies the symmetric form x -> x^T C x / 2 by exact symmetric
// elimination: positive definite, positive semidefinite and singular, or
// indefinite.
RepresentationType representation_type(const Quiver& q);
RepresentationType form_type(const IntMatrix& symmetric);

// Normalised nonnegative generator of ker C; throws NotTame.
IntVector null_root(const Quiver& q);

constexpr int kCoxeterIterationCap = 10000;

// Order of the Coxeter transformation on the quotient by the null root.
// Throws NotTame, or CapExceeded past `cap` iterations.
int coxeter_number(const Quiver& q, int cap = kCoxeterIterationCap);

// True iff ker C has no nonzero componentwise nonnegative vector, decided by
// Fourier-Motzkin on {v >= 0, C v = 0, sum v = 1}.
bool is_mixed_kernel(const IntMatrix& c);
inline bool is_mixed_kernel(const Quiver& q) { return is_mixed_kernel(cartan_matrix(q)); }

// All v in N_0^n with -C v = t, in lexicographic order. Throws NotMixed when
// ker C is not mixed (the fibre could then be infinite).
std::vector<IntVector> bounded_fiber(const IntMatrix& c, const IntVector& t);

}  // namespace degenkit
