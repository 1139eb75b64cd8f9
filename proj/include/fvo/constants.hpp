#pragma once

namespace fvo {

// Unit conversion used by every report that prints both columns.
inline constexpr double kcal_per_hartree = 627.509474;

// Caps keeping exact solvers and statevectors at desk scale.
inline constexpr int default_fci_spin_orbital_cap = 16;
inline constexpr int default_vqe_qubit_cap = 16;

inline constexpr double default_vqe_tolerance = 1e-6;
inline constexpr int default_vqe_max_iterations = 5000;

// Dense diagonalization below this determinant count, Davidson above.
inline constexpr int dense_fci_determinant_limit = 2000;

}  // namespace fvo
