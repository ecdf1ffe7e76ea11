#pragma once

namespace amol {

// C-infinity step: 0 for t <= 0, 1 for t >= 1, step(t) + step(1 - t) = 1.
double smooth_step(double t);

// Curvelet radial profiles in the unscaled variable.
double radial_lowpass(double r);   // 1 on [0, 3/2], 0 on [2, inf)
double radial_bandpass(double r);  // 1 on [3/4, 3/2], support in (1/2, 2)

// W^(j)(r) with the 8*pi frequency scaling; j = 0 is the low-pass.
double radial_band(int j, double r);

// Angular base profile: 1 on [-pi/2, pi/2], 0 outside [-3pi/4, 3pi/4].
double angular_base(double t);

// Symmetrized, scaled and rotated angular window V^(j,l) at direction phi.
double angular(double alpha, int j, int l, double phi);

// Angles per scale and angular step for the curvelet construction.
int curvelet_angles(double alpha, int j);
double curvelet_angle_step(double alpha, int j);

// Normalizer Phi at a frequency point (continuum units), summed over the
// active radial bands only.
double phi_normalizer(double alpha, double xi1, double xi2);
// Reference version summing every scale 1..max_j and every angle.
double phi_normalizer_all(double alpha, double xi1, double xi2, int max_j);

// Meyer-type 1-D profiles used by the wavelet and shearlet systems.
// Low-pass: 1 on [0,1], 0 beyond kappa (1 < kappa <= sigma).
double meyer_lowpass(double t, double kappa);
// Band-pass with squared profile lowpass(t/sigma)^2 - lowpass(t)^2.
double meyer_bandpass(double t, double sigma, double kappa);
// Directional bump on (-1, 1) whose integer shifts square-sum to one.
double shear_bump(double u);

}  // namespace amol
