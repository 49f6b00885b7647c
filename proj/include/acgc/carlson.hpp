#ifndef ACGC_CARLSON_HPP
#define ACGC_CARLSON_HPP

// Carlson symmetric elliptic integrals in double precision.
//
// rf, rd and rj use the duplication theorem: the arguments are averaged with
// lambda = sqrt(x)sqrt(y) + sqrt(y)sqrt(z) + sqrt(z)sqrt(x) until their
// relative spread drops below 1e-6 of the mean, then a fifth-order symmetric
// polynomial tail finishes the job.  Target relative accuracy 1e-14 on
// arguments within [1e-3, 1e3]; a single zero argument is handled by the
// loop itself with accuracy degrading to ~1e-12.

namespace acgc::carlson {

// R_C(x, y) = R_F(x, y, y), x >= 0, y > 0.
double rc(double x, double y);

// R_F(x, y, z): x, y, z >= 0, at most one zero.  Symmetric in all arguments.
double rf(double x, double y, double z);

// R_D(x, y, z): x, y >= 0 (at most one zero), z > 0.  Symmetric in (x, y).
double rd(double x, double y, double z);

// R_J(x, y, z, p): x, y, z >= 0 (at most one zero), p > 0.
double rj(double x, double y, double z, double p);

struct RdPartials {
  double dx;
  double dy;
  double dz;
};

// Partial derivatives of rd at (x, y, z), all arguments positive.
//
// dx and dy come from the divided-difference identities
//   dR_D/dx = (R_D(y,z,x) - R_D(x,y,z)) / (2(x - z)),
//   dR_D/dy = (R_D(x,z,y) - R_D(x,y,z)) / (2(y - z));
// dz closes the Euler relation through
//   dR_D/dz = -(3/2) x^-1/2 y^-1/2 z^-3/2 - dx - dy.
// When a divided difference degenerates (the differenced pair agrees to
// 1e-6 of its own magnitude) it is replaced by the average of the two
// one-sided quotients at a symmetric perturbation h = 1e-6 of that pair;
// accuracy ~1e-8 there, ~1e-13 elsewhere.
RdPartials rd_partials(double x, double y, double z);

// (d/dz - d/dx) R_D evaluated at the coincident point (m, y, m), both
// positive.  Equals -(3/2) int_0^inf (t+m)^-3 (t+y)^-1/2 dt; a binomial
// series covers |m - y| <= m/2 and closed forms with a stable recurrence
// cover the rest, so the value holds ~1e-14 relative accuracy even where
// the generic divided differences of rd_partials degenerate.
double rd_zx_gap(double m, double y);

}  // namespace acgc::carlson

#endif  // ACGC_CARLSON_HPP
