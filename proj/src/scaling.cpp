#include "salpeter/scaling.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "salpeter/errors.hpp"

namespace salpeter {

namespace {

double sign_of(double q) { return q > 0.0 ? 1.0 : -1.0; }

std::mutex cache_mutex;
std::map<std::pair<double, double>, double>& cache() {
    static std::map<std::pair<double, double>, double> c;
    return c;
}

}  // namespace

PowerBaseEnergy base_energy(double exponent, const SolverConfig& config) {
    if (!(exponent > -2.0) || exponent == 0.0)
        throw DomainError("pure-power exponent must satisfy q > -2, q != 0");
    const std::pair<double, double> key{exponent, config.energy_tolerance};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (auto it = cache().find(key); it != cache().end())
            return PowerBaseEnergy{exponent, it->second};
    }
    SchrodingerProblem problem;
    problem.kinetic_coefficient = 1.0;
    problem.potential = RadialPotential::power(sign_of(exponent), exponent);
    double energy = cross_validate(problem, config).energy;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache().emplace(key, energy);
    }
    return PowerBaseEnergy{exponent, energy};
}

double scale_energy(const PowerBaseEnergy& base, double coupling) {
    if (!(coupling > 0.0)) throw DomainError("coupling must be > 0");
    return base.base_energy * std::pow(coupling, 2.0 / (2.0 + base.exponent));
}

double scale_kinetic(const PowerBaseEnergy& base, double kinetic_coefficient, double coupling) {
    if (!(kinetic_coefficient > 0.0)) throw DomainError("kinetic coefficient must be > 0");
    if (!(coupling > 0.0)) throw DomainError("coupling must be > 0");
    return kinetic_coefficient * base.base_energy *
           std::pow(coupling / kinetic_coefficient, 2.0 / (2.0 + base.exponent));
}

}  // namespace salpeter
