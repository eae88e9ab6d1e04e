#include "salpeter/oracles.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numbers>

#include "salpeter/bounds.hpp"
#include "salpeter/errors.hpp"
#include "salpeter/scaling.hpp"

namespace salpeter {

namespace {

using BigInt = boost::multiprecision::cpp_int;

// ln|x| for an arbitrarily large integer, via its bit length and top bits.
double log_abs(const BigInt& x) {
    if (x == 0) throw DomainError("log of zero");
    BigInt a = abs(x);
    const auto bits = msb(a);  // index of the highest set bit
    int shift = 0;
    if (bits > 52) {
        shift = static_cast<int>(bits) - 52;
        a >>= shift;
    }
    return std::log(a.convert_to<double>()) + shift * std::numbers::ln2;
}

// Physicists' Hermite polynomial coefficients, H_k(x) = sum_j c[k][j] x^j,
// from H_{k+1} = 2 x H_k - 2 k H_{k-1}.
std::vector<std::vector<BigInt>> hermite_coefficients(int max_order) {
    std::vector<std::vector<BigInt>> h(max_order + 1);
    h[0] = {BigInt(1)};
    if (max_order >= 1) h[1] = {BigInt(0), BigInt(2)};
    for (int k = 1; k < max_order; ++k) {
        std::vector<BigInt> next(k + 2, BigInt(0));
        for (int j = 0; j <= k; ++j)
            if (h[k][j] != 0) next[j + 1] += 2 * h[k][j];
        for (int j = 0; j < k; ++j)
            if (h[k - 1][j] != 0) next[j] -= 2 * k * h[k - 1][j];
        h[k + 1] = std::move(next);
    }
    return h;
}

// For odd m, H_m(x) = x * Q_m(x^2); returns the coefficients of Q_m.
std::vector<BigInt> odd_reduced(const std::vector<BigInt>& hermite) {
    std::vector<BigInt> q(hermite.size() / 2, BigInt(0));
    for (size_t j = 1; j < hermite.size(); j += 2) q[(j - 1) / 2] = hermite[j];
    return q;
}

std::vector<BigInt> poly_product(const std::vector<BigInt>& p, const std::vector<BigInt>& q) {
    std::vector<BigInt> out(p.size() + q.size() - 1, BigInt(0));
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        for (size_t j = 0; j < q.size(); ++j)
            if (q[j] != 0) out[i + j] += p[i] * q[j];
    }
    return out;
}

struct HermiteTables {
    std::vector<std::vector<BigInt>> reduced;  // Q_m for m = 4i+1
    std::vector<int> orders;                   // 4i+1
    std::vector<BigInt> factorial;             // n!
    std::vector<BigInt> double_factorial_odd;  // (2j+1)!!
};

HermiteTables build_tables(int basis_size) {
    if (basis_size < 1) throw DomainError("basis size must be >= 1");
    const int max_order = 4 * (basis_size - 1) + 1;
    HermiteTables t;
    auto h = hermite_coefficients(max_order);
    for (int i = 0; i < basis_size; ++i) {
        t.orders.push_back(4 * i + 1);
        t.reduced.push_back(odd_reduced(h[4 * i + 1]));
    }
    const int max_fact = 2 * max_order + 2;
    t.factorial.resize(max_fact + 1);
    t.factorial[0] = 1;
    for (int n = 1; n <= max_fact; ++n) t.factorial[n] = t.factorial[n - 1] * n;
    t.double_factorial_odd.resize(max_order + 1);
    t.double_factorial_odd[0] = 1;  // (2*0+1)!! = 1
    for (int j = 1; j <= max_order; ++j)
        t.double_factorial_odd[j] = t.double_factorial_odd[j - 1] * (2 * j + 1);
    return t;
}

// A_mn = <m| r |n> over the half line with the odd-extension inner product.
// Substituting u = r^2 turns the integral into sum_j c_j (j+1)! over the
// exact integer product coefficients; normalization by sqrt(pi 2^m m!) per
// side happens in log space at the end.
double r_matrix_entry(const HermiteTables& t, int i, int j) {
    const int m = t.orders[i], n = t.orders[j];
    auto product = poly_product(t.reduced[i], t.reduced[j]);
    BigInt sum = 0;
    for (size_t k = 0; k < product.size(); ++k)
        if (product[k] != 0) sum += product[k] * t.factorial[k + 1];
    if (sum == 0) return 0.0;
    double log_value = log_abs(sum) - 0.5 * std::log(std::numbers::pi) -
                       0.5 * (m + n) * std::numbers::ln2 -
                       0.5 * (log_abs(t.factorial[m]) + log_abs(t.factorial[n]));
    return (sum < 0 ? -1.0 : 1.0) * std::exp(log_value);
}

// Overlap <m|n>: the u-substitution brings in Gamma(k + 3/2), i.e.
// sqrt(pi) (2k+1)!! / 2^(k+1); the sqrt(pi) cancels against normalization.
double gram_entry(const HermiteTables& t, int i, int j) {
    const int m = t.orders[i], n = t.orders[j];
    auto product = poly_product(t.reduced[i], t.reduced[j]);
    const int top = static_cast<int>(product.size()) - 1;
    BigInt sum = 0;  // sum_k c_k (2k+1)!! 2^(top-k), i.e. scaled by 2^(top+1)
    for (int k = 0; k <= top; ++k)
        if (product[k] != 0)
            sum += product[k] * t.double_factorial_odd[k] * (BigInt(1) << (top - k));
    if (sum == 0) return 0.0;
    double log_value = log_abs(sum) - (top + 1) * std::numbers::ln2 -
                       0.5 * (m + n) * std::numbers::ln2 -
                       0.5 * (log_abs(t.factorial[m]) + log_abs(t.factorial[n]));
    return (sum < 0 ? -1.0 : 1.0) * std::exp(log_value);
}

Eigen::MatrixXd assemble(int basis_size, double (*entry)(const HermiteTables&, int, int)) {
    HermiteTables t = build_tables(basis_size);
    Eigen::MatrixXd matrix(basis_size, basis_size);
    for (int i = 0; i < basis_size; ++i)
        for (int j = i; j < basis_size; ++j) {
            double value = entry(t, i, j);
            matrix(i, j) = value;
            matrix(j, i) = value;
        }
    return matrix;
}

double oscillator_plus_linear(double lambda, const SolverConfig& config) {
    SchrodingerProblem problem;
    problem.potential = RadialPotential::power(1.0, 2.0);
    if (lambda != 0.0) problem.potential.add_power(lambda, 1.0);
    return cross_validate(problem, config).energy;
}

}  // namespace

std::vector<double> hermite_r_matrix(int basis_size) {
    Eigen::MatrixXd m = assemble(basis_size, r_matrix_entry);
    return {m.data(), m.data() + m.size()};
}

std::vector<double> hermite_gram_matrix(int basis_size) {
    Eigen::MatrixXd m = assemble(basis_size, gram_entry);
    return {m.data(), m.data() + m.size()};
}

double hermite_nonlocal_solver(const HermiteBasisSpec& spec) {
    if (spec.basis_size < 1) throw DomainError("basis size must be >= 1");
    if (!(spec.scale > 0.0)) throw DomainError("basis scale must be > 0");
    Eigen::MatrixXd r = assemble(spec.basis_size, r_matrix_entry);
    // |p| has the same matrix as r in this basis; the length scale enters
    // reciprocally between the two.
    Eigen::MatrixXd h = (spec.scale + 1.0 / spec.scale) * r;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    return solver.eigenvalues()(0);
}

std::vector<double> hermite_convergence_report(const std::vector<int>& basis_sizes, double scale) {
    std::vector<double> values;
    values.reserve(basis_sizes.size());
    for (int n : basis_sizes) values.push_back(hermite_nonlocal_solver({n, scale}));
    return values;
}

double airy_zero(const SolverConfig& config) {
    return base_energy(1.0, config).base_energy;
}

double perturbed_oscillator_slope(const SolverConfig& config) {
    auto central = [&](double lambda) {
        return (oscillator_plus_linear(lambda, config) - oscillator_plus_linear(-lambda, config)) /
               (2.0 * lambda);
    };
    const double wide = central(1e-2);
    const double narrow = central(1e-3);
    // Central-difference error is O(lambda^2); the steps differ by 10x.
    return (100.0 * narrow - wide) / 99.0;
}

LinearLimitRecord linear_case_limit_check(const std::vector<double>& s_values,
                                          const SolverConfig& config) {
    if (s_values.empty()) throw DomainError("need at least one s value");
    for (size_t i = 1; i < s_values.size(); ++i)
        if (!(s_values[i] > s_values[i - 1])) throw DomainError("s values must be increasing");

    const RadialPotential linear = RadialPotential::power(1.0, 1.0);
    const double target = 4.0 / std::sqrt(std::numbers::pi);

    LinearLimitRecord record;
    record.s_values = s_values;
    for (double s : s_values) {
        const double a = std::pow(s, 4.0);
        record.differences.push_back(difference_component_e1(0.0, linear, a, a, config) -
                                     difference_component_e2(0.0, linear, a, a, config));
    }
    record.monotone_decreasing = true;
    for (size_t i = 1; i < record.differences.size(); ++i) {
        if (record.differences[i] >= record.differences[i - 1]) record.monotone_decreasing = false;
        double prev = record.differences[i - 1] - target;
        record.excess_ratios.push_back(prev != 0.0 ? (record.differences[i] - target) / prev : 0.0);
    }

    record.limit_estimate = record.differences.back();
    if (record.differences.size() >= 2) {
        // Tail behaves like C / s^8 on the diagonal; extrapolate from the
        // last two samples.
        const size_t k = record.differences.size() - 1;
        const double ratio = std::pow(s_values[k - 1] / s_values[k], 8.0);
        record.limit_estimate = (record.differences[k] - ratio * record.differences[k - 1]) /
                                (1.0 - ratio);
    }

    // The symmetric split should beat nearby asymmetric (s, t) choices.
    const double s_mid = s_values[s_values.size() / 2];
    const double symmetric = record.differences[s_values.size() / 2];
    const double skew = 1.15;
    double asym1 = difference_component_e1(0.0, linear, std::pow(s_mid * skew, 4.0),
                                           std::pow(s_mid / skew, 4.0), config) -
                   difference_component_e2(0.0, linear, std::pow(s_mid * skew, 4.0),
                                           std::pow(s_mid / skew, 4.0), config);
    double asym2 = difference_component_e1(0.0, linear, std::pow(s_mid / skew, 4.0),
                                           std::pow(s_mid * skew, 4.0), config) -
                   difference_component_e2(0.0, linear, std::pow(s_mid / skew, 4.0),
                                           std::pow(s_mid * skew, 4.0), config);
    record.symmetric_beats_asymmetric = symmetric <= asym1 && symmetric <= asym2;
    return record;
}

}  // namespace salpeter
