#include "nk6/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <thread>
#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

#include "nk6/stable.hpp"

namespace nk6 {

namespace {

std::pair<Eigen::VectorXd, Eigen::VectorXd> nk_parts(const LieAlgebra& lie, const FamilyParams& p, int orientation);

constexpr std::array<std::array<int, 2>, 4> kConfigs = {{{1, -1}, {1, 1}, {-1, -1}, {-1, 1}}};

FormD omega_of(const FamilyParams& p) {
  const std::array<std::array<int, 2>, 6> shape = {{{1, 4}, {2, 5}, {3, 6}, {1, 5}, {1, 6}, {2, 6}}};
  FormD w(6, 2);
  for (int i = 0; i < 6; ++i) w += FormD::basis(6, {shape[i][0], shape[i][1]}, p[i]);
  return w;
}

Eigen::Matrix3d block_of(const FamilyParams& p) {
  Eigen::Matrix3d c;
  c << p[0], p[3], p[4], 0, p[1], p[5], 0, 0, p[2];
  return c;
}

const LieAlgebra& algebra_for(int tau) {
  static const LieAlgebra plus = catalog("so12+so12").algebra;
  static const LieAlgebra minus = catalog("so12+so12:tau=-1").algebra;
  return tau == 1 ? plus : minus;
}

// For a direction u = x / |x|, F(t u) = t A(u) - t^2 B(u) with A = d psi-(u) and
// B = 2 u^2 (A is odd, B even). Roots lie on the rays where A is parallel to B,
// at t = <A, B> / <B, B>. The residual is the part of A orthogonal to B.
struct RayResidual {
  using Scalar = double;
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };

  const LieAlgebra* lie;
  int orientation;

  int inputs() const { return 6; }
  int values() const { return 15; }

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
    f.resize(15);
    const double n = x.norm();
    if (n == 0) {
      f.setConstant(1e6);
      return 0;
    }
    FamilyParams u;
    for (int i = 0; i < 6; ++i) u[i] = x(i) / n;
    try {
      auto [a, b] = nk_parts(*lie, u, orientation);
      f = a - b * (a.dot(b) / b.squaredNorm());
    } catch (const Error&) {
      f.setConstant(1e6);
    }
    return 0;
  }
};

}  // namespace

namespace {

std::pair<Eigen::VectorXd, Eigen::VectorXd> nk_parts(const LieAlgebra& lie, const FamilyParams& p, int orientation) {
  const FormD omega = omega_of(p);
  const FormD psi_plus = ce_differential(lie, omega) * (1.0 / 3.0);
  const StableInfoD st = build_stable_info_float(psi_plus, orientation);
  const FormD dpsi = ce_differential(lie, st.psi_minus);
  const FormD sq = wedge(omega, omega) * 2.0;
  static const std::vector<Mask> masks = masks_of_degree(6, 4);
  Eigen::VectorXd a(15), b(15);
  for (int i = 0; i < 15; ++i) {
    a(i) = dpsi.coefficient(masks[i]);
    b(i) = sq.coefficient(masks[i]);
  }
  return {a, b};
}

}  // namespace

std::vector<double> nk_residual(const LieAlgebra& lie, const FamilyParams& p, int orientation) {
  auto [a, b] = nk_parts(lie, p, orientation);
  Eigen::VectorXd r = a - b;
  return std::vector<double>(r.data(), r.data() + r.size());
}

double orbit_distance(const FamilyParams& p, int tau) {
  const double a0 = std::sqrt(3.0) / 18.0;
  const Eigen::Matrix3d target = Eigen::Matrix3d::Identity() * a0;
  const Eigen::Matrix3d c = block_of(p);
  const std::array<Eigen::Vector3d, 4> signs = {Eigen::Vector3d(1, 1, 1), Eigen::Vector3d(1, -1, -1),
                                                Eigen::Vector3d(-1, -1, 1), Eigen::Vector3d(-1, 1, -1)};
  double best = INFINITY;
  for (int swap = 0; swap < (tau == 1 ? 2 : 1); ++swap) {
    const Eigen::Matrix3d base = swap ? Eigen::Matrix3d(-c.transpose()) : c;
    for (const auto& sa : signs) {
      for (const auto& sb : signs) {
        Eigen::Matrix3d img = sa.asDiagonal() * base * sb.asDiagonal();
        best = std::min(best, (img - target).cwiseAbs().maxCoeff());
      }
    }
  }
  return best;
}

SolveOutcome solve_from(const FamilyParams& start, int tau, int orientation, const SweepOptions& opt) {
  RayResidual functor{&algebra_for(tau), orientation};
  Eigen::NumericalDiff<RayResidual> diff(functor);
  Eigen::LevenbergMarquardt<Eigen::NumericalDiff<RayResidual>> lm(diff);
  lm.parameters.maxfev = opt.max_evaluations;
  lm.parameters.xtol = 1e-15;
  lm.parameters.ftol = 1e-15;
  Eigen::VectorXd x(6);
  for (int i = 0; i < 6; ++i) x(i) = start[i];
  const auto status = lm.minimize(x);

  SolveOutcome out;
  // Move along the ray to the point where the residual can vanish.
  x.normalize();
  try {
    FamilyParams u;
    for (int i = 0; i < 6; ++i) u[i] = x(i);
    auto [a, b] = nk_parts(algebra_for(tau), u, orientation);
    x *= a.dot(b) / b.squaredNorm();
  } catch (const Error&) {
  }
  for (int i = 0; i < 6; ++i) out.params[i] = x(i);
  out.converged = status == Eigen::LevenbergMarquardtSpace::RelativeReductionTooSmall ||
                  status == Eigen::LevenbergMarquardtSpace::RelativeErrorTooSmall ||
                  status == Eigen::LevenbergMarquardtSpace::RelativeErrorAndReductionTooSmall ||
                  status == Eigen::LevenbergMarquardtSpace::CosinusTooSmall ||
                  status == Eigen::LevenbergMarquardtSpace::XtolTooSmall ||
                  status == Eigen::LevenbergMarquardtSpace::FtolTooSmall;
  try {
    std::vector<double> r = nk_residual(algebra_for(tau), out.params, orientation);
    out.residual = 0;
    for (double v : r) out.residual = std::max(out.residual, std::abs(v));
  } catch (const Error&) {
    out.residual = INFINITY;
  }
  const double det = std::abs(out.params[0] * out.params[1] * out.params[2]);
  out.root = out.residual < opt.residual_tol && det > 1e-9;
  out.orbit_distance = orbit_distance(out.params, tau);
  out.in_orbit = out.orbit_distance < opt.orbit_tol;
  return out;
}

SweepResult numeric_uniqueness_sweep(const SweepOptions& opt) {
  if (opt.starts < 1) throw Error(ErrorCode::InvalidArgument, "the sweep needs at least one start");
  const auto t0 = std::chrono::steady_clock::now();
  SweepResult res;
  res.outcomes.resize(opt.starts);
  auto run = [&](int index) {
    std::seed_seq seq{static_cast<std::uint64_t>(opt.seed), static_cast<std::uint64_t>(index)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> u(-opt.box, opt.box);
    FamilyParams start;
    do {
      for (double& v : start) v = u(rng);
    } while (std::abs(start[0] * start[1] * start[2]) < 1e-4);
    const auto& cfg = kConfigs[index % 4];
    res.outcomes[index] = solve_from(start, cfg[0], cfg[1], opt);
  };
  int workers = opt.threads > 0 ? opt.threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, opt.starts);
  if (workers == 1) {
    for (int i = 0; i < opt.starts; ++i) run(i);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int i = w; i < opt.starts; i += workers) run(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (const auto& cfg : kConfigs) res.configs.push_back({cfg[0], cfg[1]});
  for (int i = 0; i < opt.starts; ++i) {
    SweepConfig& c = res.configs[i % 4];
    const SolveOutcome& o = res.outcomes[i];
    ++c.starts;
    if (o.converged) ++c.converged;
    if (!o.root) continue;
    ++c.roots;
    if (o.in_orbit) ++c.in_orbit;
    c.max_orbit_distance = std::max(c.max_orbit_distance, o.orbit_distance);
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

Report sweep_report(const SweepResult& r, const SweepOptions& opt) {
  Report rep;
  int roots_tau_plus = 0;
  bool all_in_orbit = true;
  for (const auto& c : r.configs) {
    const std::string id = std::string("sweep.tau") + (c.tau > 0 ? "+1" : "-1") + ".orientation" + (c.orientation > 0 ? "+1" : "-1");
    Details d = {{"starts", std::to_string(c.starts)},         {"converged", std::to_string(c.converged)},
                 {"roots", std::to_string(c.roots)},           {"in_orbit", std::to_string(c.in_orbit)},
                 {"max_orbit_distance", format_double(c.max_orbit_distance)}};
    const bool ok = c.roots == c.in_orbit && (c.tau == 1 || c.roots == 0);
    all_in_orbit = all_in_orbit && ok;
    if (c.tau == 1) roots_tau_plus += c.roots;
    rep.check(id, ok, d);
  }
  rep.check("sweep.roots_found", roots_tau_plus > 0, {{"roots_tau+1", std::to_string(roots_tau_plus)}});
  rep.check("sweep.all_roots_canonical", all_in_orbit,
            {{"starts", std::to_string(static_cast<int>(r.outcomes.size()))},
             {"seed", std::to_string(opt.seed)},
             {"residual_tol", format_double(opt.residual_tol)},
             {"orbit_tol", format_double(opt.orbit_tol)}});
  rep.info("sweep.runtime", {{"seconds", format_double(r.seconds)}});
  return rep;
}

}  // namespace nk6
