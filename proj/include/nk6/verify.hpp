#pragma once

#include "nk6/lie_algebra.hpp"
#include "nk6/report.hpp"
#include "nk6/su_structure.hpp"

namespace nk6 {

// lambda, epsilon, phi and J of a 3-form. A NotStable form gives a FAIL entry, not an exception.
Report stable_report(const FormS& rho, int orientation = 1);

// epsilon, orientation, signature and |psi+|^2 of a built structure, with its defining identities.
Report su_report(const SUStructure& s);

// Torsion flags, plus the cross-check that a half-flat structure is nearly half-flat
// exactly when the Nijenhuis tensor is totally skew.
Report flags_report(const LieAlgebra& lie, const SUStructure& s);

enum class NkMode { Exterior, Connection, Both };

// Exterior: d omega = 3 psi+ and d psi- = 2 kappa omega^2.
// Connection: Levi-Civita, polarized condition on nabla J, norms, Nijenhuis tensor,
// canonical connection, Ricci tensor and the pointwise identities.
Report nk_verify_report(const LieAlgebra& lie, const SUStructure& s, NkMode mode);

}  // namespace nk6
