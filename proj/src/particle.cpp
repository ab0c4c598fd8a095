#include "spindyn/particle.hpp"

#include <cmath>
#include <stdexcept>

namespace spindyn {

void ParticleParams::validate() const {
    if (!(m0 > 0.0)) throw std::invalid_argument("m0 must be positive");
    if (!(c > 0.0)) throw std::invalid_argument("c must be positive");
    if (!(hbar >= 0.0)) throw std::invalid_argument("hbar must be non-negative");
}

FourVector four_velocity(const Vec3& beta, double c) {
    const double b2 = dot(beta, beta);
    if (!(b2 < 1.0)) throw std::domain_error("|beta| must be < 1");
    const double gamma = 1.0 / std::sqrt(1.0 - b2);
    return {c * gamma, (c * gamma) * beta};
}

}  // namespace spindyn
