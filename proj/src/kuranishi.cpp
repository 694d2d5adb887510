#include <homtorus/kuranishi.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace homtorus {

namespace {

constexpr double kResidualTol = 1e-12;
constexpr double kClusterRadius = 1e-6;
constexpr double kReducibleNorm = 1e-10;
constexpr double kJacobianFloor = 1e-8;
constexpr double kHmax = 0.1;
constexpr int kStarts = 1200;
constexpr int kMaxIters = 120;

const Quaternion kUnitI{0.0, 1.0, 0.0, 0.0};

// Symmetric coefficient matrices of the moment map components.
std::array<Eigen::Matrix4d, 3> moment_coefficients() {
  std::array<Eigen::Matrix4d, 3> a;
  a[0] = Eigen::Vector4d(1, 1, -1, -1).asDiagonal();
  a[1].setZero();
  a[1](0, 3) = a[1](3, 0) = 1;
  a[1](1, 2) = a[1](2, 1) = 1;
  a[2].setZero();
  a[2](1, 3) = a[2](3, 1) = 1;
  a[2](0, 2) = a[2](2, 0) = -1;
  return a;
}

double sigma_min(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues().minCoeff();
}

double sigma_max(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues().maxCoeff();
}

// U(1) gauge slice: one imaginary component of w pinned to zero, the matching
// real component kept nonnegative.  The second slice covers orbits invisible
// to the first (first complex coordinate identically zero).
struct Gauge {
  int zero_coord;
  std::array<int, 3> wvar;
  int canon;
};
constexpr Gauge kGauges[2] = {{1, {0, 2, 3}, 0}, {3, {0, 1, 2}, 2}};

using Vec7 = Eigen::Matrix<double, 7, 1>;
using Mat7 = Eigen::Matrix<double, 7, 7>;

struct System {
  std::array<Eigen::Matrix4d, 3> p1;  // q1 + tau rcoef
  Eigen::Matrix4d m2;                 // q2 + tau lcoef
  Eigen::Vector3d h;
  Gauge gauge;
};

Eigen::Vector4d slice_w(const System& s, const Vec7& x) {
  Eigen::Vector4d w = Eigen::Vector4d::Zero();
  for (int t = 0; t < 3; ++t) w[s.gauge.wvar[t]] = x[4 + t];
  return w;
}

Vec7 residual(const System& s, const Vec7& x) {
  Eigen::Vector4d a = x.head<4>();
  Eigen::Vector4d w = slice_w(s, x);
  Vec7 f;
  for (int k = 0; k < 3; ++k) f[k] = w.dot(s.p1[k] * w) - s.h[k];
  f.tail<4>() = vec_from(admissible_L(quat_from(s.m2 * a), quat_from(w)));
  return f;
}

Mat7 jacobian(const System& s, const Vec7& x) {
  Eigen::Vector4d a = x.head<4>();
  Eigen::Vector4d w = slice_w(s, x);
  Quaternion wq = quat_from(w);
  Quaternion q = quat_from(s.m2 * a);
  Mat7 j = Mat7::Zero();
  for (int k = 0; k < 4; ++k)
    j.block<4, 1>(3, k) = vec_from(admissible_L(quat_from(s.m2.col(k)), wq));
  for (int t = 0; t < 3; ++t) {
    int wc = s.gauge.wvar[t];
    for (int k = 0; k < 3; ++k) j(k, 4 + t) = 2.0 * (s.p1[k] * w)[wc];
    Eigen::Vector4d e = Eigen::Vector4d::Zero();
    e[wc] = 1.0;
    j.block<4, 1>(3, 4 + t) = vec_from(admissible_L(q, quat_from(e)));
  }
  return j;
}

bool lm_solve(const System& s, Vec7& x) {
  double lambda = 1e-3;
  Vec7 f = residual(s, x);
  double fn = f.norm();
  for (int iter = 0; iter < kMaxIters; ++iter) {
    if (f.lpNorm<Eigen::Infinity>() <= kResidualTol) return true;
    Mat7 j = jacobian(s, x);
    Mat7 a = j.transpose() * j;
    Vec7 g = j.transpose() * f;
    bool accepted = false;
    while (lambda <= 1e14) {
      Mat7 lhs = a + lambda * Mat7::Identity();
      Vec7 delta = lhs.ldlt().solve(-g);
      Vec7 xn = x + delta;
      Vec7 fnew = residual(s, xn);
      if (fnew.norm() < fn) {
        x = xn;
        f = fnew;
        fn = f.norm();
        lambda = std::max(lambda / 3.0, 1e-12);
        accepted = true;
        break;
      }
      lambda *= 4.0;
    }
    if (!accepted) break;
  }
  return f.lpNorm<Eigen::Infinity>() <= kResidualTol;
}

struct Root {
  Eigen::Vector4d a;
  Eigen::Vector4d w;
};

// Squared distance from (a2, w2) to the circle orbit of (a1, w1).
double orbit_distance2(const Root& r1, const Root& r2) {
  double ip = r1.w.dot(r2.w);
  double ipi = vec_from(quat_from(r1.w) * kUnitI).dot(r2.w);
  double best = std::sqrt(ip * ip + ipi * ipi);
  double d = (r1.a - r2.a).squaredNorm() + r1.w.squaredNorm() + r2.w.squaredNorm() -
             2.0 * best;
  return std::max(d, 0.0);
}

Vec7 pack(const System& s, const Eigen::Vector4d& a, const Eigen::Vector4d& w) {
  Vec7 x;
  x.head<4>() = a;
  for (int t = 0; t < 3; ++t) x[4 + t] = w[s.gauge.wvar[t]];
  return x;
}

struct GaugeOutcome {
  bool any_root = false;
  bool degenerate = false;  // some orbit invisible to this slice
  int reducible_roots = 0;
  std::vector<Root> circle_reps;
  std::vector<int> signs;
};

GaugeOutcome solve_in_gauge(const System& s, const Eigen::Vector3d& h,
                            std::uint64_t solver_seed) {
  GaugeOutcome out;
  std::mt19937_64 rng(solver_seed);
  double rw = std::max(2.0 * std::sqrt(h.norm()), 0.05);
  std::uniform_real_distribution<double> ua(-0.05, 0.05);
  std::uniform_real_distribution<double> uw(-rw, rw);

  std::vector<Root> roots;
  for (int start = 0; start < kStarts; ++start) {
    Vec7 x;
    for (int k = 0; k < 4; ++k) x[k] = ua(rng);
    for (int t = 0; t < 3; ++t) x[4 + t] = uw(rng);
    if (!lm_solve(s, x)) continue;
    // Reducible polish: the second equation vanishes identically at w = 0,
    // so project whenever the projection is an exact root.
    Vec7 x0 = x;
    x0.tail<3>().setZero();
    if (residual(s, x0).lpNorm<Eigen::Infinity>() <= kResidualTol) x = x0;
    Root r{x.head<4>(), slice_w(s, x)};
    if (r.w[s.gauge.canon] < 0.0) r.w = -r.w;
    roots.push_back(r);
  }
  if (roots.empty()) return out;
  out.any_root = true;

  std::sort(roots.begin(), roots.end(), [](const Root& p, const Root& q) {
    for (int k = 0; k < 4; ++k) {
      if (p.a[k] != q.a[k]) return p.a[k] < q.a[k];
      if (p.w[k] != q.w[k]) return p.w[k] < q.w[k];
    }
    return false;
  });
  std::vector<Root> reps;
  std::vector<bool> reducible;
  for (const Root& r : roots) {
    bool placed = false;
    for (const Root& rep : reps)
      if (orbit_distance2(rep, r) <= kClusterRadius * kClusterRadius) {
        placed = true;
        break;
      }
    if (placed) continue;
    reps.push_back(r);
    reducible.push_back(r.w.norm() <= kReducibleNorm);
  }

  for (std::size_t c = 0; c < reps.size(); ++c) {
    if (reducible[c]) {
      ++out.reducible_roots;
      continue;
    }
    const Root& rep = reps[c];
    double wn = rep.w.norm();
    // Orbits lying in the pinned plane are invisible to this slice.
    double visible = std::hypot(rep.w[s.gauge.canon], rep.w[s.gauge.zero_coord]);
    if (visible <= 1e-3 * wn) {
      out.degenerate = true;
      continue;
    }
    // Sweep the orbit: restart the solver from slice projections of rotated
    // representatives; each must come back to the same orbit.
    bool sweep_ok = true;
    for (int p = 1; p < 8; ++p) {
      double theta = 2.0 * M_PI * p / 8.0;
      Quaternion rot{std::cos(theta), std::sin(theta), 0.0, 0.0};
      Eigen::Vector4d wr = vec_from(quat_from(rep.w) * rot);
      wr[s.gauge.zero_coord] = 0.0;
      if (wr.norm() < 0.5 * wn) continue;  // phase orthogonal to the slice
      Vec7 x = pack(s, rep.a, wr);
      if (!lm_solve(s, x)) {
        sweep_ok = false;
        break;
      }
      Root back{x.head<4>(), slice_w(s, x)};
      if (orbit_distance2(rep, back) > 1e-8) {
        sweep_ok = false;
        break;
      }
    }
    if (!sweep_ok) {
      out.degenerate = true;
      continue;
    }
    Mat7 j = jacobian(s, pack(s, rep.a, rep.w));
    if (sigma_min(j) < kJacobianFloor)
      throw NonGenericH("jacobian nearly singular at a solution circle");
    out.circle_reps.push_back(rep);
    out.signs.push_back(j.determinant() > 0.0 ? 1 : -1);
  }
  return out;
}

}  // namespace

Eigen::Vector3d quad_map_R(const Quaternion& w) {
  return {w.a * w.a + w.b * w.b - w.c * w.c - w.d * w.d,
          2.0 * (w.b * w.c + w.a * w.d), 2.0 * (w.b * w.d - w.a * w.c)};
}

Quaternion admissible_L(const Quaternion& q, const Quaternion& w) {
  return q * w * kUnitI;
}

KuranishiModel build_model(std::uint64_t seed, double tau, FixedType type) {
  if (!(tau > 0.0)) throw std::logic_error("tau must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  KuranishiModel m;
  m.tau = tau;
  m.type = type;
  m.seed = seed;
  m.rcoef = moment_coefficients();
  m.lcoef = Eigen::Matrix4d::Identity();

  for (int attempt = 0;; ++attempt) {
    if (attempt > 10000) throw std::logic_error("model draw failed");
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m.q2(r, c) = u(rng);
    double s = sigma_min(m.q2);
    if (s >= 0.5) {
      m.domination = s;
      break;
    }
  }
  double lnorm = sigma_max(m.lcoef);
  if (tau * lnorm >= m.domination / 2.0)
    throw TauTooLarge("tau " + std::to_string(tau) + " exceeds the domination bound " +
                      std::to_string(m.domination / (2.0 * lnorm)));

  Eigen::Matrix3d b;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 10000) throw std::logic_error("model draw failed");
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) b(r, c) = u(rng);
    Eigen::Matrix3d perturbed = b + tau * Eigen::Matrix3d::Identity();
    if (sigma_min(b) >= 0.05 && sigma_min(perturbed) >= 0.05) break;
  }
  for (int k = 0; k < 3; ++k) {
    m.q1[k].setZero();
    for (int n = 0; n < 3; ++n) m.q1[k] += b(k, n) * m.rcoef[n];
  }
  if (type == FixedType::kNonJFixed) {
    // One invariant-but-not-antiinvariant quadratic |w|^2 per component,
    // scaled so the perturbed equation still has a single positive radius.
    Eigen::Vector3d c;
    for (int k = 0; k < 3; ++k) c[k] = u(rng);
    Eigen::Matrix3d perturbed = b + tau * Eigen::Matrix3d::Identity();
    double pull = (perturbed.inverse() * c).norm();
    if (pull > 0.45) c *= 0.45 / pull;
    for (int k = 0; k < 3; ++k) m.q1[k] += c[k] * Eigen::Matrix4d::Identity();
  }
  return m;
}

Eigen::Vector3d perturbed_first(const KuranishiModel& m, const Quaternion& w) {
  Eigen::Vector4d v = vec_from(w);
  Eigen::Vector3d out;
  for (int k = 0; k < 3; ++k) out[k] = v.dot((m.q1[k] + m.tau * m.rcoef[k]) * v);
  return out;
}

Quaternion perturbed_second(const KuranishiModel& m, const Eigen::Vector4d& a,
                            const Quaternion& w) {
  return admissible_L(quat_from((m.q2 + m.tau * m.lcoef) * a), w);
}

CircleCount count_solution_circles(const KuranishiModel& m, const Eigen::Vector3d& h,
                                   std::uint64_t solver_seed) {
  if (h.norm() > kHmax + 1e-15)
    throw std::logic_error("h exceeds the documented threshold 0.1");
  System s;
  for (int k = 0; k < 3; ++k) s.p1[k] = m.q1[k] + m.tau * m.rcoef[k];
  s.m2 = m.q2 + m.tau * m.lcoef;
  s.h = h;

  GaugeOutcome out;
  for (int g = 0; g < 2; ++g) {
    s.gauge = kGauges[g];
    out = solve_in_gauge(s, h, solver_seed);
    if (!out.degenerate) break;
    if (g == 1) throw NonGenericH("orbit invisible to both gauge slices");
  }
  if (!out.any_root) throw NoConvergence("no Newton start converged");

  CircleCount result;
  result.circles = static_cast<int>(out.circle_reps.size());
  result.signs = out.signs;
  result.reducible_only = result.circles == 0 && out.reducible_roots > 0;
  return result;
}

}  // namespace homtorus
