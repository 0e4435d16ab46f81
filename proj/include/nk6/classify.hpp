#pragma once

#include <array>
#include <string>
#include <vector>

#include "nk6/lie_algebra.hpp"
#include "nk6/report.hpp"

namespace nk6 {

// Normal-form family omega = alpha e^14 + beta e^25 + gamma e^36 + x e^15 + y e^16 + z e^26
// on so12(tau) + so12, over the ring of family_ring(). k stands for 1/sqrt|lambda(psi+)|
// with the sign of the orientation reversed: J = -k K_{psi+}.
struct SymbolicFamily {
  int tau = 1;
  int epsilon = -1;
  LieAlgebra algebra;
  RingPtr ring;
  FormP omega;
  FormP domega;
  FormP psi_plus;           // d omega / 3
  MatrixP k_domega;         // K_{d omega} = 9 K_{psi+}
  MatrixP J;                // -(k / 9) K_{d omega}
  FormP psi_minus_scaled;   // (27 eps / k) psi- = -d omega(K_{d omega} ., ., .)
  FormP psi_minus;
  FormP d_psi_minus_scaled;
  FormP d_psi_minus;
  FormP omega_sq;
};

SymbolicFamily derive_family(int tau, int eps);

// Family variables in ring order: alpha, beta, gamma, x, y, z, k.
enum FamilyVar { kAlpha = 0, kBeta, kGamma, kX, kY, kZ, kK };

struct LabeledEquation {
  std::string label;  // "e1356"
  Mask mask = 0;
  Polynomial polynomial;
};

// Coefficients of 27 eps (d psi- - 2 omega^2) = k d(psi-scaled) - 54 eps omega^2.
struct CoefficientSystem {
  int tau = 1;
  int epsilon = -1;
  std::vector<LabeledEquation> equations;  // in the printed order
  // Components outside the nine labels, expected empty.
  std::vector<LabeledEquation> unexpected;
  // k (2 a^4 - c1 a^2) - 54 eps a b g and its companions for beta and gamma (with tau gamma^2).
  std::array<Polynomial, 3> reduced;
};

CoefficientSystem coefficient_equations(const SymbolicFamily& f);

// Transcribed displays, with tau and eps instantiated.
struct PrintedEquation {
  std::string label;
  std::string lhs;
  std::string rhs;
  Polynomial cleared;  // numerator of lhs - rhs over the common monomial denominator
  Polynomial denominator;
  Polynomial cleared_verbatim;  // differs from cleared only where an erratum applies
};

// A misprinted coefficient and its replacement.
struct Erratum {
  std::string object;  // "d_psi_minus_scaled" or "equation"
  std::string label;
  std::string verbatim;
  std::string corrected;
};

struct ReferenceExpansions {
  FormP domega;
  MatrixP k_columns;  // column i is the displayed K(e_{i+1})
  FormP psi_minus_scaled;
  FormP d_psi_minus_scaled;
  FormP d_psi_minus_verbatim;
  FormP omega_sq;
  std::vector<PrintedEquation> equations;
  std::vector<Erratum> errata;
  std::array<Polynomial, 3> cubic;    // first reduced display, cleared of 1/k
  std::array<Polynomial, 3> quartic;  // system with c1, c2, cleared of 1/k
};

ReferenceExpansions reference_expansions(int tau, int eps);

// p with k replaced by -k.
Polynomial flip_k(const Polynomial& p);

// Exact comparison of the derived family and equations against the displays.
Report regeneration_report(int tau, int eps);

// Canonical solution, reduced-system case analysis and the sign of lambda.
Report verify_unique_solution();

// Generic omega on so12 + so12: the mixed part has dw^2 = 0, the pure part is detected.
Report blockform_report();
bool blockform_check();

Report so3so3_nonexistence();

}  // namespace nk6
