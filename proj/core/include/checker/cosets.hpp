#pragma once

#include <cstddef>

#include "checker/canonical.hpp"
#include "checker/perm.hpp"
#include "checker/surface.hpp"

namespace checker {

/// A morphism beta -> alpha of the double-coset category: an element of
/// K[alpha]\G/K[beta], represented by its canonical labeled surface.
using DoubleCoset = LabeledSurface;

/// The block involution fixing 0..beta-1 and swapping the j-blocks
/// [beta, beta+j) and [beta+j, beta+2j). Identity beyond beta+2j.
Permutation theta(std::size_t j, std::size_t beta);

/// Class of (id, id, id) on beta fully labeled points: the unit at object beta.
DoubleCoset identity_morphism(std::size_t beta);

/// Canonical form of p · Θ_j[beta] · q over (alpha, gamma) labels, with both
/// representatives padded to degree max(deg p, deg q) + 2j + beta.
DoubleCoset shifted_product(const Triple& p, const Triple& q, std::size_t alpha,
                            std::size_t beta, std::size_t gamma, std::size_t j);

/// The stable value of shifted_product as j grows. Evaluated at
/// j0 = max(deg p, deg q) and j0 + 1; throws StabilizationFailure if they differ.
DoubleCoset circledast(const Triple& p, const Triple& q, std::size_t alpha, std::size_t beta,
                       std::size_t gamma);

/// Throws SchemaError unless p.beta() == q.alpha().
DoubleCoset circledast(const DoubleCoset& p, const DoubleCoset& q);

/// Gluing along labeled triangles over an explicit cell complex: Q's labeled
/// black triangle j is glued to P's labeled white triangle j for j < beta.
/// The result keeps P's alpha black labels and Q's gamma white labels.
/// Independent of `circledast`; the two must agree.
DoubleCoset concat_geometric(const DoubleCoset& p, const DoubleCoset& q);

/// Involution M(alpha, beta) -> M(beta, alpha) induced by inversion.
DoubleCoset star(const DoubleCoset& p);

}  // namespace checker
