#pragma once

#include <array>
#include <map>

#include "pentagon/rational.hpp"
#include "pentagon/report.hpp"

namespace pentagon {

using Occupation = std::array<unsigned, 3>;

/// Finite combination of Fock basis vectors |n1, n2, n3>.
using FockVector = std::map<Occupation, Rational>;

/// exp(a_i (x) a+_j) = sum_k a_i^k a+_j^k / k! with a|n> = n|n-1>, a+|n> = |n+1>.
/// The series stops at k = n_i.
FockVector apply_exp(std::size_t i, std::size_t j, const FockVector& v);

/// S12 S13 S23 |n> = S23 S12 |n> for every occupation n_i <= max_occupation.
VerificationReport weyl_pentagon_check(unsigned max_occupation);

/// Both sides on a single basis vector.
std::pair<FockVector, FockVector> weyl_pentagon_sides(const Occupation& n);

}  // namespace pentagon
