#include "salpeter/radial_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "salpeter/errors.hpp"

namespace salpeter {

namespace {

constexpr double kWkbDecayTarget = 18.0;   // tail amplitude ~ e^-18 ~ 1.5e-8
constexpr double kBarrierHeight = 25.0;    // require W(r_max) - E >= 25
constexpr double kRescaleThreshold = 1e250;

struct ProblemView {
    const RadialPotential* potential;
    double c;  // kinetic coefficient
};

ProblemView check_problem(const SchrodingerProblem& problem) {
    if (!problem.is_local())
        throw DomainError("eigensolvers accept local operators only; apply fourier_swap first");
    if (!(problem.kinetic_coefficient > 0.0))
        throw DomainError("kinetic coefficient must be > 0");
    if (problem.angular_momentum != 0)
        throw DomainError("only the s-wave channel (angular_momentum = 0) is supported");
    if (!problem.potential.confining())
        throw ContinuumSpectrumError("potential '" + problem.potential.to_string() +
                                     "' is not confining; no discrete ground state");
    return {&problem.potential, problem.kinetic_coefficient};
}

// Coarse global minimum of W over a multiplicative radius scan, refined by
// a short ternary search. Used for the lower energy bound and turning
// points; modest accuracy suffices.
struct PotentialMinimum {
    double r;
    double value;
};

// Dimensional estimate of the gap above the potential minimum, from the
// pure-power scaling of the dominant growth term: E ~ 3 c^(q/(q+2)) v^(2/(q+2)).
double energy_gap_guess(const RadialPotential& potential, double c) {
    const auto growth = potential.growth_exponent();
    if (!growth) return 1.0;
    const double q = *growth;
    double v = potential.coefficient_of(q);
    if (const auto& s = potential.salpeter_term(); s && q == 1.0) v += s->sign;
    if (v <= 0.0) return 1.0;
    return 3.0 * std::pow(c, q / (q + 2.0)) * std::pow(v, 2.0 / (q + 2.0));
}

PotentialMinimum scan_minimum(const RadialPotential& potential) {
    double best_r = 1e-4, best_w = std::numeric_limits<double>::infinity();
    for (double r = 1e-4; r <= 1e4; r *= 1.02) {
        double w;
        try {
            w = potential.evaluate(r);
        } catch (const EvaluationOverflow&) {
            break;
        }
        if (w < best_w) {
            best_w = w;
            best_r = r;
        }
    }
    double lo = best_r / 1.05, hi = best_r * 1.05;
    for (int i = 0; i < 60; ++i) {
        double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (potential.evaluate(m1) < potential.evaluate(m2)) hi = m2;
        else lo = m1;
    }
    double r = 0.5 * (lo + hi);
    double w = potential.evaluate(r);
    if (w > best_w) {
        r = best_r;
        w = best_w;
    }
    // The infimum may sit at the origin (e.g. W = r).
    try {
        double w0 = potential.evaluate(0.0);
        if (w0 < w) {
            r = 0.0;
            w = w0;
        }
    } catch (const Error&) {
    }
    return {r, w};
}

}  // namespace

namespace detail {

double resolve_r_max(const SchrodingerProblem& problem, double energy_estimate) {
    const auto view = check_problem(problem);
    const RadialPotential& w = *view.potential;
    const PotentialMinimum minimum = scan_minimum(w);

    // Outer turning point: march outward from the minimum until W stays
    // above the energy estimate over a factor-4 lookahead.
    double r_t = std::max(minimum.r, 1e-4);
    while (r_t < 1e8) {
        if (w.evaluate(r_t) > energy_estimate) {
            bool stays_above = true;
            for (double s = r_t; s <= 4.0 * r_t; s *= 1.25)
                if (w.evaluate(s) <= energy_estimate) {
                    stays_above = false;
                    r_t = s;
                    break;
                }
            if (stays_above) break;
        }
        r_t *= 1.05;
    }

    // Extend until the WKB decay integral and the barrier-height floor are
    // both met. The barrier floor is expressed relative to the problem's
    // own energy scale so small-coefficient operators do not demand
    // absurdly distant cutoffs.
    const double gap = std::max(std::abs(energy_estimate - minimum.value), 1e-6);
    const double barrier = kBarrierHeight * std::min(1.0, gap);
    double integral = 0.0;
    double r = r_t;
    double step = std::max(r_t, 1.0) * 1e-3;
    while (r < 1e9) {
        double mid = r + 0.5 * step;
        double excess = w.evaluate(mid) - energy_estimate;
        if (excess > 0.0) integral += std::sqrt(excess / view.c) * step;
        r += step;
        if (integral >= kWkbDecayTarget && w.evaluate(r) - energy_estimate >= barrier) break;
        step = std::max(r, 1.0) * 1e-3;
    }
    return r * 1.02;
}

}  // namespace detail

namespace {

// Tabulated reduced-potential grid on [0, r_max] with N+1 points.
struct Grid {
    double h;
    std::vector<double> w;  // w[0] unused (u(0) = 0 multiplies it)
};

Grid build_grid(const RadialPotential& potential, double r_max, int n) {
    Grid g;
    g.h = r_max / n;
    g.w.resize(n + 1);
    g.w[0] = 0.0;
    for (int i = 1; i <= n; ++i) g.w[i] = potential.evaluate(i * g.h);
    return g;
}

struct ShotOutcome {
    int nodes = 0;
    double u_end = 0.0;
};

// Outward Numerov pass for -c u'' + W u = E u, i.e. u'' = f u with
// f = (W - E)/c. Counts interior sign changes; rescales to avoid overflow
// in the classically forbidden tail. Optionally records the trajectory.
ShotOutcome numerov_outward(const Grid& g, double c, double energy, std::vector<double>* store,
                            int stop_index = -1) {
    const int n = static_cast<int>(g.w.size()) - 1;
    const int last = stop_index < 0 ? n : stop_index;
    const double h2 = g.h * g.h;
    auto f = [&](int i) { return i == 0 ? 0.0 : (g.w[i] - energy) / c; };

    double u_prev = 0.0;
    double u_curr = g.h * (1.0 + h2 * f(1) / 6.0);
    if (store) {
        store->assign(last + 1, 0.0);
        (*store)[1] = u_curr;
    }
    ShotOutcome out;
    double p_prev = 1.0 - h2 * f(0) / 12.0;
    double p_curr = 1.0 - h2 * f(1) / 12.0;
    double scale_applied = 1.0;
    for (int i = 1; i < last; ++i) {
        double p_next = 1.0 - h2 * f(i + 1) / 12.0;
        double u_next = (2.0 * u_curr * (1.0 + 5.0 * h2 * f(i) / 12.0) - u_prev * p_prev) / p_next;
        if (u_next != 0.0 && u_curr != 0.0 && std::signbit(u_next) != std::signbit(u_curr))
            ++out.nodes;
        u_prev = u_curr;
        u_curr = u_next;
        p_prev = p_curr;
        p_curr = p_next;
        if (std::abs(u_curr) > kRescaleThreshold) {
            double s = 1.0 / std::abs(u_curr);
            u_prev *= s;
            u_curr *= s;
            scale_applied *= s;
            if (store)
                for (auto& v : *store) v *= s;
        }
        if (store) (*store)[i + 1] = u_curr;
    }
    (void)scale_applied;
    out.u_end = u_curr;
    return out;
}

// Inward Numerov pass from the cutoff toward match_index (inclusive).
void numerov_inward(const Grid& g, double c, double energy, int match_index,
                    std::vector<double>& store) {
    const int n = static_cast<int>(g.w.size()) - 1;
    const double h2 = g.h * g.h;
    auto f = [&](int i) { return (g.w[i] - energy) / c; };
    store.assign(n + 1, 0.0);
    store[n] = 0.0;
    store[n - 1] = 1e-30;
    double p_next = 1.0 - h2 * f(n) / 12.0;
    double p_curr = 1.0 - h2 * f(n - 1) / 12.0;
    for (int i = n - 1; i > match_index; --i) {
        double p_prev = 1.0 - h2 * f(i - 1) / 12.0;
        store[i - 1] =
            (2.0 * store[i] * (1.0 + 5.0 * h2 * f(i) / 12.0) - store[i + 1] * p_next) / p_prev;
        p_next = p_curr;
        p_curr = p_prev;
        if (std::abs(store[i - 1]) > kRescaleThreshold) {
            double s = 1.0 / std::abs(store[i - 1]);
            for (int j = i - 1; j <= n; ++j) store[j] *= s;
        }
    }
}

// True when the trial energy sits at or above the Dirichlet ground state:
// the outward solution has acquired a node, or ends below zero.
bool at_or_above_ground(const Grid& g, double c, double energy) {
    ShotOutcome shot = numerov_outward(g, c, energy, nullptr);
    return shot.nodes >= 1 || shot.u_end < 0.0 || shot.u_end == 0.0;
}

struct ShootingSolution {
    double energy;
    double low_edge;  // certified zero-node bracket end
};

ShootingSolution shoot_bisect(const Grid& g, double c, double w_min, const SolverConfig& config) {
    double e_lo = w_min - std::max(1e-6, 1e-12 * std::abs(w_min));
    // Numerov's rational factors need h^2 |f| / 12 well below 1 everywhere.
    const double w_max = *std::max_element(g.w.begin() + 1, g.w.end());
    if (g.h * g.h * (w_max - e_lo) / c / 12.0 > 0.75)
        throw DomainError("grid too coarse for the potential across the cutoff: "
                          "increase grid_points or reduce r_max");
    for (int k = 0; k < 8 && at_or_above_ground(g, c, e_lo); ++k)
        e_lo -= std::max(1.0, 0.5 * std::abs(e_lo));
    if (at_or_above_ground(g, c, e_lo))
        throw BracketFailure("could not certify a below-ground energy near " + std::to_string(e_lo));

    double delta = std::max(1.0, 0.1 * std::abs(e_lo));
    double e_hi = e_lo + delta;
    int expansions = 0;
    while (!at_or_above_ground(g, c, e_hi)) {
        delta *= 2.0;
        e_hi = e_lo + delta;
        if (++expansions > 120)
            throw BracketFailure("no bisection bracket found below E = " + std::to_string(e_hi));
    }

    int iterations = 0;
    while (e_hi - e_lo > 0.5 * config.energy_tolerance) {
        if (++iterations > config.max_bisections)
            throw BracketFailure("bisection failed to reach tolerance within max_bisections");
        double mid = 0.5 * (e_lo + e_hi);
        if (at_or_above_ground(g, c, mid)) e_hi = mid;
        else e_lo = mid;
    }
    return {0.5 * (e_lo + e_hi), e_lo};
}

// Matched log-derivative defect at the outer turning point, evaluated at
// the certified zero-node bracket edge.
double shooting_residual(const Grid& g, double c, double energy, int* node_count) {
    const int n = static_cast<int>(g.w.size()) - 1;
    int turn = n - 1;
    while (turn > 2 && g.w[turn] > energy) --turn;
    turn = std::clamp(turn, 2, n - 2);

    std::vector<double> outward, inward;
    ShotOutcome shot = numerov_outward(g, c, energy, &outward, turn + 1);
    if (node_count) *node_count = shot.nodes;
    numerov_inward(g, c, energy, turn - 1, inward);

    auto log_derivative = [&](const std::vector<double>& u) {
        double denom = u[turn];
        if (denom == 0.0) denom = std::numeric_limits<double>::min();
        return (u[turn + 1] - u[turn - 1]) / (2.0 * g.h * denom);
    };
    double ld_out = log_derivative(outward);
    double ld_in = log_derivative(inward);
    return std::abs(ld_out - ld_in) / (1.0 + std::abs(ld_out) + std::abs(ld_in));
}

double resolve_cutoff(const SchrodingerProblem& problem, const SolverConfig& config,
                      double energy_estimate) {
    if (config.r_max) {
        if (!(*config.r_max > 0.0)) throw DomainError("r_max must be > 0");
        return *config.r_max;
    }
    return detail::resolve_r_max(problem, energy_estimate);
}

void check_config(const SolverConfig& config) {
    if (config.grid_points < 200) throw DomainError("grid_points must be >= 200");
    if (!(config.energy_tolerance > 0.0)) throw DomainError("energy_tolerance must be > 0");
    if (config.max_bisections < 1) throw DomainError("max_bisections must be >= 1");
}

// Sturm-sequence count of eigenvalues below x for the symmetric
// tridiagonal matrix with diagonal d and constant off-diagonal e.
int eigenvalues_below(const std::vector<double>& diag, double off, double x) {
    const double off2 = off * off;
    int count = 0;
    double q = diag[0] - x;
    if (q < 0.0) ++count;
    for (size_t i = 1; i < diag.size(); ++i) {
        if (q == 0.0) q = -std::numeric_limits<double>::min();
        q = (diag[i] - x) - off2 / q;
        if (q < 0.0) ++count;
    }
    return count;
}

double sturm_lowest_from_grid(const Grid& g, double c, double tolerance) {
    const int n = static_cast<int>(g.w.size()) - 1;
    const double h2 = g.h * g.h;
    const double off = -c / h2;
    std::vector<double> diag(n - 1);
    for (int i = 1; i < n; ++i) diag[i - 1] = 2.0 * c / h2 + g.w[i];

    double lo = *std::min_element(diag.begin(), diag.end()) - 2.0 * std::abs(off);
    double hi = *std::min_element(diag.begin(), diag.end());  // Rayleigh quotient of a basis vector
    while (hi - lo > tolerance) {
        double mid = 0.5 * (lo + hi);
        if (eigenvalues_below(diag, off, mid) >= 1) hi = mid;
        else lo = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

namespace detail {

double sturm_lowest_single_grid(const SchrodingerProblem& problem, double r_max, int grid_points,
                                double tolerance) {
    const auto view = check_problem(problem);
    Grid g = build_grid(*view.potential, r_max, grid_points);
    return sturm_lowest_from_grid(g, view.c, tolerance);
}

}  // namespace detail

EigenResult solve_ground_shooting(const SchrodingerProblem& problem, const SolverConfig& config) {
    check_config(config);
    const auto view = check_problem(problem);
    const PotentialMinimum minimum = scan_minimum(*view.potential);

    double energy_estimate = minimum.value + 1.0;
    double r_max = 0.0;
    ShootingSolution solution{0.0, 0.0};
    Grid grid;
    for (int pass = 0; pass < 4; ++pass) {
        double next_r_max = resolve_cutoff(problem, config, energy_estimate);
        if (pass > 0 && std::abs(next_r_max - r_max) <= 0.05 * r_max) break;
        r_max = next_r_max;
        grid = build_grid(*view.potential, r_max, config.grid_points);
        solution = shoot_bisect(grid, view.c, minimum.value, config);
        if (std::abs(solution.energy - energy_estimate) <= config.energy_tolerance) break;
        energy_estimate = solution.energy;
        if (config.r_max) break;  // fixed cutoff: nothing to adapt
    }

    EigenResult result;
    result.energy = solution.energy;
    result.method = SolveMethod::Shooting;
    result.config_used = config;
    result.r_max_used = r_max;
    result.residual = shooting_residual(grid, view.c, solution.low_edge, &result.node_count);
    return result;
}

EigenResult solve_ground_sturm(const SchrodingerProblem& problem, const SolverConfig& config) {
    check_config(config);
    const auto view = check_problem(problem);
    const PotentialMinimum minimum = scan_minimum(*view.potential);

    double energy_estimate = minimum.value + 1.0;
    double r_max = 0.0;
    double coarse = 0.0, fine = 0.0;
    const double inner_tol = config.energy_tolerance / 8.0;
    for (int pass = 0; pass < 4; ++pass) {
        double next_r_max = resolve_cutoff(problem, config, energy_estimate);
        if (pass > 0 && std::abs(next_r_max - r_max) <= 0.05 * r_max) break;
        r_max = next_r_max;
        Grid g1 = build_grid(*view.potential, r_max, config.grid_points);
        Grid g2 = build_grid(*view.potential, r_max, 2 * config.grid_points);
        coarse = sturm_lowest_from_grid(g1, view.c, inner_tol);
        fine = sturm_lowest_from_grid(g2, view.c, inner_tol);
        double richardson = (4.0 * fine - coarse) / 3.0;
        if (std::abs(richardson - energy_estimate) <= config.energy_tolerance) break;
        energy_estimate = richardson;
        if (config.r_max) break;
    }

    EigenResult result;
    result.energy = (4.0 * fine - coarse) / 3.0;
    result.method = SolveMethod::SturmFD;
    result.config_used = config;
    result.r_max_used = r_max;
    result.node_count = 0;  // smallest eigenvalue: nothing below it to oscillate against
    result.residual = std::abs(fine - coarse);
    return result;
}

EigenResult cross_validate(const SchrodingerProblem& problem, const SolverConfig& config) {
    EigenResult shooting = solve_ground_shooting(problem, config);
    EigenResult sturm = solve_ground_sturm(problem, config);
    double gap = std::abs(shooting.energy - sturm.energy);
    if (gap > 10.0 * config.energy_tolerance)
        throw OracleMismatch("shooting and Sturm solvers disagree by " + std::to_string(gap) +
                                 " on '" + problem.potential.to_string() + "'",
                             shooting.energy, sturm.energy);
    return shooting;
}

}  // namespace salpeter
