#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "errors.hpp"
#include "mat2.hpp"
#include "matexp.hpp"

namespace phimat {

/// Uniform duct piece: cross-section area (m^2) and length (m), both positive.
struct DuctSegment {
  double area;
  double length;
};

/// The fluid filling the chain. Only the sound speed (m/s) enters this model;
/// there is no density anywhere, so results are not physical impedances.
struct Medium {
  double sound_speed;
};

/// Two-component state a four-pole matrix acts on: a pressure-like upper
/// component and a flow-like lower one. Deliberately convention-free.
struct AcousticState {
  cplx p;
  cplx v;

  bool operator==(const AcousticState&) const = default;
};

/// The transfer-matrix class parameter for a segment: alpha = S / c.
inline double segment_alpha(const DuctSegment& seg, const Medium& med) {
  return seg.area / med.sound_speed;
}

/// Four-pole matrix of one segment at angular frequency omega (rad/s):
/// exp_phi(alpha, angle) with alpha = S/c and angle = omega L / S. The trig
/// argument alpha * angle is then the plane-wave phase k L = omega L / c, so
/// the diagonal entries are cos(kL).
inline Mat2c segment_matrix(const DuctSegment& seg, const Medium& med, double omega) {
  return exp_phi(segment_alpha(seg, med), omega * seg.length / seg.area);
}

/// Chain product M1 * M2 * ... * Mn with M1 the segment nearest the source.
/// No junction matrices are inserted at area changes; a chain is a pure
/// product of segment matrices.
inline Mat2c cascade(std::span<const DuctSegment> segments, const Medium& med, double omega) {
  if (segments.empty()) throw empty_chain{};
  Mat2c acc = segment_matrix(segments[0], med, omega);
  for (std::size_t i = 1; i < segments.size(); ++i)
    acc = acc * segment_matrix(segments[i], med, omega);
  return acc;
}

/// Matrix action on a state: (p, v) -> (m11 p + m12 v, m21 p + m22 v).
inline AcousticState propagate(const AcousticState& s, const Mat2c& m) {
  return {m.e11 * s.p + m.e12 * s.v, m.e21 * s.p + m.e22 * s.v};
}

/// One sweep row: the cascade matrix at omega and its unimodularity drift.
struct SweepRow {
  double omega;
  Mat2c matrix;
  double det_dev;
};

/// Cascade evaluated over a list of angular frequencies, in input order.
inline std::vector<SweepRow> frequency_sweep(std::span<const DuctSegment> segments,
                                             const Medium& med, std::span<const double> omegas) {
  if (segments.empty()) throw empty_chain{};
  if (omegas.empty()) throw empty_sweep{};
  std::vector<SweepRow> rows;
  rows.reserve(omegas.size());
  for (double w : omegas) {
    const Mat2c m = cascade(segments, med, w);
    rows.push_back({w, m, std::abs(det(m) - 1.0)});
  }
  return rows;
}

}  // namespace phimat
