#pragma once

#include "udw/matrix.hpp"
#include "udw/model.hpp"

namespace udw {

// The four figure-of-merit values for one state. All coherence fields are
// nonnegative; c_re is in bits; concurrence lies in [0, 1].
struct MeasureReport {
  double c_l1;
  double c_re;
  double c_tr;
  double concurrence;
};

// Entries off the diagonal and anti-diagonal larger than this disqualify a
// state from the X-structure fast paths.
inline constexpr double kXStructureTol = 1e-14;

// Optimizer tolerance used by measure_all when it has to fall back to the
// numeric trace-norm minimizer.
inline constexpr double kDefaultTraceNormTol = 1e-8;

bool is_x_structured(const ComplexMatrix& rho, double tol = kXStructureTol);

// Sum of |rho_ij| over i != j.
double l1_coherence(const ComplexMatrix& rho);

// Closed form 2*alpha*sin(2 theta) for the evolved-state family.
double l1_coherence_closed(double theta, const ChannelParams& cp);

// S(diag(rho)) - S(rho), in bits.
double relative_entropy_coherence(const ComplexMatrix& rho);

// Trace-norm distance to diag(rho), valid because the nearest incoherent
// state of an X state is its diagonal part. Throws StructureError on non-X
// input; use trace_norm_coherence_numeric there instead.
double trace_norm_coherence_xstate(const ComplexMatrix& rho);

// min over diagonal density matrices delta of ||rho - delta||_1, found by
// projected coordinate descent over the probability 4-simplex from eight
// spread starting points. Accurate to tol; throws ConvergenceError carrying
// the best value found if no start converges.
double trace_norm_coherence_numeric(const ComplexMatrix& rho, double tol);

// 2 max{0, C1, C2} with C1 = |rho_03| - sqrt(rho_11 rho_22) and
// C2 = |rho_12| - sqrt(rho_00 rho_33). X states only.
double concurrence_xstate(const ComplexMatrix& rho);

// Spin-flip concurrence for arbitrary two-qubit states:
// max{0, sqrt(mu1) - sqrt(mu2) - sqrt(mu3) - sqrt(mu4)} over the descending
// eigenvalues of rho (Y(x)Y) conj(rho) (Y(x)Y).
double concurrence_general(const ComplexMatrix& rho);

// All four measures; dispatches to the X-state fast paths when the support
// pattern permits, numeric fallbacks otherwise.
MeasureReport measure_all(const ComplexMatrix& rho);

}  // namespace udw
