#include "nk6/verify.hpp"

#include "nk6/connection.hpp"
#include "nk6/stable.hpp"

namespace nk6 {

namespace {

std::string str(const Scalar& s) { return to_string(s); }

std::string opt(const std::optional<Scalar>& s) { return s ? to_string(*s) : "none"; }

}  // namespace

Report stable_report(const FormS& rho, int orientation) {
  Report r;
  if (rho.dim() != 6 || rho.degree() != 3) {
    r.check("stable", false, {{"error", "DimensionMismatch"}, {"detail", "expected a 3-form in dimension 6"}});
    return r;
  }
  const Scalar lambda = lambda_invariant(rho);
  try {
    StableInfo s = build_stable_info(rho, orientation);
    r.check("stable", true, {{"lambda", str(lambda)}, {"epsilon", std::to_string(s.epsilon)},
                             {"phi", str(s.phi)}, {"orientation", std::to_string(s.orientation)}});
    r.check("j_squared", s.J * s.J == identity<Scalar>(6) * Scalar(s.epsilon));
    r.check("psi_minus_is_j_rho", pullback(s.J, rho) * Scalar(s.epsilon) == s.psi_minus);
    r.info("psi_minus", {{"value", to_string(s.psi_minus)}});
  } catch (const Error& err) {
    r.check("stable", false, {{"lambda", str(lambda)}, {"error", to_string(err.code())}});
  }
  return r;
}

Report su_report(const SUStructure& s) {
  Report r;
  r.info("structure", {{"epsilon", std::to_string(s.epsilon)},
                       {"orientation", std::to_string(s.orientation)},
                       {"signature_neg", std::to_string(s.signature.negative)},
                       {"signature_pos", std::to_string(s.signature.positive)},
                       {"psi_norm_sq", str(s.psi_norm_sq)}});
  r.check("compatible", wedge(s.omega, s.psi_plus).is_zero());
  r.check("j_squared", s.J * s.J == identity<Scalar>(6) * Scalar(s.epsilon));
  r.check("g_is_omega_j", s.g * s.J == form_matrix(s.omega));
  r.check("j_anti_isometry", s.J.transpose() * s.g * s.J == s.g * Scalar(-s.epsilon));
  const FormS cube = wedge(wedge(s.omega, s.omega), s.omega);
  r.check("normalization", wedge(s.psi_minus, s.psi_plus) == cube * (s.psi_norm_sq / Scalar(6)));
  r.info("metric_nondegenerate", {{"zero", std::to_string(s.signature.zero)}});
  return r;
}

Report flags_report(const LieAlgebra& lie, const SUStructure& s) {
  Report r;
  const TorsionFlags f = torsion_flags(lie, s);
  r.info("flags", {{"half_flat", format_bool(f.half_flat)},
                   {"nearly_half_flat", format_bool(f.nearly_half_flat)},
                   {"nu", opt(f.nu)},
                   {"nk_exterior", format_bool(f.nk_exterior)},
                   {"kappa", opt(f.kappa)},
                   {"domega_type_30_03", format_bool(f.domega_type_30_03)},
                   {"domega_zero", format_bool(f.domega_zero)}});
  const bool skew = nijenhuis(lie, s.J, s.epsilon, s.g).totally_skew;
  if (f.half_flat) {
    r.check("half_flat_nijenhuis", skew == f.nearly_half_flat,
            {{"nijenhuis_skew", format_bool(skew)}, {"nearly_half_flat", format_bool(f.nearly_half_flat)}});
  } else {
    r.info("half_flat_nijenhuis", {{"nijenhuis_skew", format_bool(skew)}, {"applies", "false"}});
  }
  return r;
}

Report nk_verify_report(const LieAlgebra& lie, const SUStructure& s, NkMode mode) {
  Report r;
  const int eps = s.epsilon;
  r.info("structure", {{"epsilon", std::to_string(eps)},
                       {"signature_neg", std::to_string(s.signature.negative)},
                       {"signature_pos", std::to_string(s.signature.positive)}});
  const FormS domega = ce_differential(lie, s.omega);
  const FormS dpsi = ce_differential(lie, s.psi_minus);
  const FormS omega_sq = wedge(s.omega, s.omega);
  const std::optional<Scalar> nu = form_ratio(dpsi, omega_sq);
  const std::optional<Scalar> kappa_ext = nu ? std::optional<Scalar>(*nu / Scalar(2)) : std::nullopt;
  if (mode != NkMode::Connection) {
    r.check("exterior.d_omega_3_psi_plus", domega == s.psi_plus * Scalar(3));
    r.check("exterior.d_psi_minus_2kappa_omega_sq", kappa_ext.has_value() && !kappa_ext->is_zero(),
            {{"kappa", opt(kappa_ext)}});
    r.check("exterior.d_psi_plus_zero", ce_differential(lie, s.psi_plus).is_zero());
  }
  if (mode == NkMode::Exterior) return r;

  const ConnectionTable lc = levi_civita(lie, s.g);
  r.check("connection.levi_civita", is_metric(lc, s.g) && is_torsion_free(lie, lc));
  const CubicTensor a = nabla_J(lc, s.g, s.J, eps);
  const NearlyKahlerCheck nk = nearly_kahler_direct(a, s.g);
  r.check("connection.nearly_kaehler", nk.holds, {{"kappa", str(nk.kappa)}});
  r.check("connection.nabla_j_nonzero", !a.is_zero());
  // |nabla J|^2 by contraction with g, |psi+|^2 from psi- ^ psi+.
  r.check("connection.norms", nk.nabla_j_norm_sq == s.psi_norm_sq && nk.nabla_j_norm_sq == nk.kappa * Scalar(4),
          {{"nabla_j_norm_sq", str(nk.nabla_j_norm_sq)}, {"psi_norm_sq", str(s.psi_norm_sq)}});
  if (mode == NkMode::Both && kappa_ext) {
    r.check("connection.kappa_matches_exterior", *kappa_ext == nk.kappa);
  }
  const NijenhuisTensor n = nijenhuis(lie, s.J, eps, s.g);
  r.check("connection.nijenhuis_skew", n.totally_skew);
  r.check("connection.nijenhuis_routes", n.lowered.same_components(nijenhuis_from_connection(lc, s.J, s.g).lowered));
  if (n.totally_skew) {
    const CanonicalConnection cc = canonical_connection(lie, lc, s.g, s.J, s.omega, n, eps);
    r.check("connection.nijenhuis_4eps_torsion", n.lowered.same_components(cc.torsion.scaled(Scalar(4 * eps))));
    r.check("connection.canonical_metric", cc.metric);
    r.check("connection.canonical_j_parallel", cc.j_parallel);
    r.check("connection.canonical_nabla_j_parallel", is_parallel(cc.table, a));
    r.check("connection.canonical_torsion_parallel", is_parallel(cc.table, cc.torsion));
  }
  const CurvatureData curv = curvature_ricci(lie, lc, s.g);
  r.check("connection.einstein_5kappa", curv.einstein_constant.has_value() && *curv.einstein_constant == nk.kappa * Scalar(5),
          {{"einstein_constant", opt(curv.einstein_constant)}});
  r.check("connection.master_identity", master_identity_failures(lie, lc, s.g, s.J, s.omega, eps) == 0);
  r.check("connection.second_derivative_identity", second_derivative_failures(lc, s.g, s.J) == 0);
  r.check("connection.constant_type", constant_type_failures(lc, s.g, s.J, eps, nk.kappa) == 0);
  return r;
}

}  // namespace nk6
