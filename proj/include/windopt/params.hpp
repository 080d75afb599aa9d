#pragma once

#include <iosfwd>
#include <string>

namespace windopt {

/// Physical constants of the wake and power model. All SI units; angles in
/// radians. The thrust and power coefficients are always derived from the
/// axial induction factor (actuator-disk relations), never stored.
struct PhysicalParams {
    double rotor_diameter = 126.0;     ///< D [m]
    double air_density = 1.23;         ///< rho [kg/m^3]
    double freestream_speed = 8.0;     ///< U [m/s]
    double deflection_offset = -0.035; ///< a_d [-]
    double deflection_slope = -0.01;   ///< b_d [-]
    double wake_expansion = 0.03;      ///< k_r [-]
    double sigmoid_sharpness = 0.2;    ///< tau [1/m], upstream cutoff gate
    double axial_induction = 1.0 / 3.0;
    double yaw_min = -0.5235987755982988; ///< -30 deg
    double yaw_max = 0.5235987755982988;  ///< +30 deg

    double thrust_coefficient() const {
        const double a = axial_induction;
        return 4.0 * a * (1.0 - a);
    }
    double power_coefficient() const {
        const double a = axial_induction;
        return 4.0 * a * (1.0 - a) * (1.0 - a);
    }

    /// Throws std::invalid_argument on any violated invariant.
    void validate() const;
};

/// Model defaults (126 m rotor, 8 m/s freestream, +-30 deg yaw limits).
PhysicalParams default_params();

/// Power of one unwaked turbine at zero yaw: 1/2 rho (pi/4 D^2) C_P U^3.
double single_turbine_power(const PhysicalParams& p);

/// Annual energy in GWh for a mean power in watts (8760 h/yr).
double gwh_per_year(double watts);

/// Flat key-value config I/O: one `key = value` per line, `#` comments.
/// Unknown keys throw; absent keys keep their current value in `p`.
void apply_params_line(PhysicalParams& p, const std::string& line);
PhysicalParams read_params_file(const std::string& path);
void write_params_file(const PhysicalParams& p, const std::string& path);
std::string params_to_string(const PhysicalParams& p);

} // namespace windopt
