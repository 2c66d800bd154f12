// Closed-form centrifuge G-alignment geometry: yaw rate <-> G-level <-> true
// cabin alignment angle. Quasi-steady inversion: the tangential acceleration
// a_t = dOmega/dt * R is not part of the alignment target, only of the GIA
// diagnostic. All angles in radians, rates in rad/s, G-levels in g-units.
#pragma once

#include <stdexcept>

namespace coham::kin {

struct CentrifugeConfig {
    double arm_length_m = 4.0;              // cabin distance to the central yaw axis
    double gravity_mps2 = 9.80665;
    double yaw_rate_max_radps = 2.6179938779914944;   // 150 deg/s
    double cabin_rate_max_radps = 1.0;
    double cabin_accel_max_radps2 = 2.0;
    double cabin_servo_natfreq_radps = 12.0;          // critically damped cabin servo

    void validate() const;  // throws std::invalid_argument
};

// G-level in multiples of g. A centrifuge at rest yields exactly 1 G; it
// cannot produce less.
struct GLevel {
    double value_g = 1.0;
};

enum class TiltAxis { pitch, roll };

// Cabin tilt from upright. Rocket Man cueing aligns in pitch.
struct CabinAngle {
    double theta_rad = 0.0;
    TiltAxis axis = TiltAxis::pitch;
};

// a_R = Omega^2 * R_c
double centripetal_accel(double omega_radps, const CentrifugeConfig& cfg);

// |GIA| = sqrt(a_t^2 + a_R^2 + g^2), expressed in G units.
GLevel gia_magnitude(double a_t_mps2, double a_r_mps2, const CentrifugeConfig& cfg);

// theta_true = arctan(a_R/g) with the quasi-steady identity a_R = g*sqrt(G^2-1).
// Throws std::domain_error for G < 1.
CabinAngle theta_true(GLevel g, const CentrifugeConfig& cfg);

// Steady-state yaw rate producing the given G-level: sqrt(g*sqrt(G^2-1)/R_c).
// Throws std::domain_error for G < 1, std::range_error above the yaw cap.
double omega_for_g(GLevel g, const CentrifugeConfig& cfg);

// Same inversion without the yaw-cap check; the sim flags cap excess per step
// instead of failing.
double omega_for_g_unbounded(GLevel g, const CentrifugeConfig& cfg);

// Analytic dOmega/dG for the chain-rule Omega_dot. Unbounded as G -> 1; the
// caller falls back to finite differences near that edge.
double domega_dg(GLevel g, const CentrifugeConfig& cfg);

}  // namespace coham::kin
