#pragma once

#include "qfric/integrands.hpp"

namespace qfric::testing {

inline ScenarioParams scenario(double beta, double z, double t1, double t2,
                               double wp = 1.0, double gd = 0.1,
                               double a0 = 1.0, double w0 = 1.0,
                               double ga = 0.1) {
  return {make_kinematics(beta, z), make_thermal(t1, t2), make_drude(wp, gd),
          make_lorentz(a0, w0, ga)};
}

// beta 0.5, z 1, T1 0.5, T2 0.2, Drude(1, 0.1), Lorentz(1, 1, 0.1)
inline ScenarioParams reference_scenario() { return scenario(0.5, 1.0, 0.5, 0.2); }

}  // namespace qfric::testing
