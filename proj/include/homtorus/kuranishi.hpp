#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include <homtorus/errors.hpp>

namespace homtorus {

// Basis order 1, i, j, k.
struct Quaternion {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
};

inline Quaternion operator+(const Quaternion& p, const Quaternion& q) {
  return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d};
}
inline Quaternion operator-(const Quaternion& p, const Quaternion& q) {
  return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d};
}
inline Quaternion operator-(const Quaternion& q) { return {-q.a, -q.b, -q.c, -q.d}; }
inline Quaternion operator*(double s, const Quaternion& q) {
  return {s * q.a, s * q.b, s * q.c, s * q.d};
}
inline Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
          p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
          p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
          p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}
inline Quaternion conjugate(const Quaternion& q) { return {q.a, -q.b, -q.c, -q.d}; }
inline double abs(const Quaternion& q) {
  return std::sqrt(q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d);
}
inline Quaternion quat_from(const Eigen::Vector4d& v) { return {v[0], v[1], v[2], v[3]}; }
inline Eigen::Vector4d vec_from(const Quaternion& q) { return {q.a, q.b, q.c, q.d}; }

// Moment map w -> Im(w i conj(w)).  |quad_map_R(w)| = |w|^2; invariant under
// right multiplication by e^{i theta}, odd under right multiplication by j.
Eigen::Vector3d quad_map_R(const Quaternion& w);

// w -> q w i: complex-linear for the right-i structure, anticommutes with
// right multiplication by j, and scales norms by |q|.
Quaternion admissible_L(const Quaternion& q, const Quaternion& w);

enum class FixedType { kJFixed, kNonJFixed };

// Local model of the perturbed equations near a reducible point: the first
// equation is the quadratic w -> Q1(w) + tau R(w) (Q1 stored as three
// symmetric coefficient matrices), the second is (a, w) -> T(q) w with
// quaternion coefficients q = (q2 + tau lcoef) a.
struct KuranishiModel {
  std::array<Eigen::Matrix4d, 3> q1;
  Eigen::Matrix4d q2;
  double tau = 0.0;
  std::array<Eigen::Matrix4d, 3> rcoef;
  Eigen::Matrix4d lcoef;
  double domination = 0.0;  // min over unit a of sigma_min of the q2 value
  FixedType type = FixedType::kJFixed;
  std::uint64_t seed = 0;
};

// Deterministic pseudorandom model of the requested type; tau must be
// positive and satisfy tau * |lcoef| < domination / 2, else TauTooLarge.
// Degenerate draws (singular quadratic part) are rejected and redrawn.
KuranishiModel build_model(std::uint64_t seed, double tau, FixedType type);

Eigen::Vector3d perturbed_first(const KuranishiModel& m, const Quaternion& w);
Quaternion perturbed_second(const KuranishiModel& m, const Eigen::Vector4d& a,
                            const Quaternion& w);

struct CircleCount {
  int circles = 0;
  std::vector<int> signs;
  bool reducible_only = false;
};

// Solves perturbed_first(w) = h, perturbed_second(a, w) = 0 near the origin
// and counts circle orbits of irreducible solutions.  Requires |h| <= 0.1.
// Deterministic for fixed (model, h, solver_seed); the seed only moves the
// Newton start grid.
CircleCount count_solution_circles(const KuranishiModel& m, const Eigen::Vector3d& h,
                                   std::uint64_t solver_seed = 1);

}  // namespace homtorus
