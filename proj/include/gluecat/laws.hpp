#pragma once

#include <cstdint>

#include "gluecat/fincat.hpp"

namespace gluecat {

/// Seeded random posets: every comparable up-set pair factors into exact
/// pullbacks, every emitted square is exact in the full up-set lattice, and
/// the step count matches the set difference.
Report laws_poset_factorization(int num_posets = 100, int max_elements = 8,
                                std::uint64_t seed = 20240901);

/// pi∘sigma = id and xi <= sigma <= eta for n <= n_struct; the lambda/mu
/// laws, the interval identity Lambda ∧ mu = x, and the interval coverage
/// for n <= n_laws; epsilon face compatibility for n <= n_epsilon.
Report laws_cartesianization(int n_struct = 4, int n_laws = 3, int n_epsilon = 2);

/// Appendix C over finite sets (sizes <= 3): truncation levels of injective
/// and general maps, plus the gap-map truncation-decrease law.
Report laws_truncation();

/// Appendix B: overcategory limits hold over every lattice poset on at most
/// max_elements elements (naturally labeled enumeration), and fail with a
/// cospan witness on the four-element "N" poset.
Report laws_overcat(int max_elements = 6);

/// Discipline monotonicity of grid enumeration over the marked corpus.
Report laws_grids();

/// A poset drawn from the seeded generator (used by tests and the CLI).
Poset random_poset(std::uint64_t seed, int max_elements);

/// The four-element poset with relations p<=r, q<=r, q<=s; its (p,q) cospan
/// has no pullback.
Poset n_poset();

}  // namespace gluecat
