#include "salpeter/potentials.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "salpeter/errors.hpp"

namespace salpeter {

namespace {

constexpr double kMergeTolerance = 0.0;  // exponents compare exactly

void validate_power(double coefficient, double exponent) {
    if (!std::isfinite(coefficient) || coefficient == 0.0)
        throw DomainError("power term coefficient must be finite and nonzero");
    if (!std::isfinite(exponent) || exponent <= -2.0 || exponent == 0.0)
        throw DomainError("power term exponent must satisfy q > -2, q != 0");
}

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

RadialPotential RadialPotential::power(double coefficient, double exponent) {
    RadialPotential v;
    v.add_power(coefficient, exponent);
    return v;
}

RadialPotential RadialPotential::salpeter(double mass, int sign) {
    RadialPotential v;
    v.add_salpeter(mass, sign);
    return v;
}

RadialPotential& RadialPotential::add_power(double coefficient, double exponent) {
    validate_power(coefficient, exponent);
    for (auto it = power_terms_.begin(); it != power_terms_.end(); ++it) {
        if (it->exponent == exponent) {
            it->coefficient += coefficient;
            if (it->coefficient == kMergeTolerance) power_terms_.erase(it);
            return *this;
        }
    }
    power_terms_.push_back({coefficient, exponent});
    std::sort(power_terms_.begin(), power_terms_.end(),
              [](const PowerTerm& a, const PowerTerm& b) { return a.exponent > b.exponent; });
    return *this;
}

RadialPotential& RadialPotential::add_salpeter(double mass, int sign) {
    if (!(mass >= 0.0) || !std::isfinite(mass))
        throw DomainError("salpeter term mass must be finite and >= 0");
    if (sign != 1 && sign != -1) throw DomainError("salpeter term sign must be +1 or -1");
    if (mass == 0.0) return add_power(static_cast<double>(sign), 1.0);  // sqrt(r^2) = r
    if (salpeter_) {
        if (salpeter_->mass == mass && salpeter_->sign == -sign) {
            salpeter_.reset();
            return *this;
        }
        throw DomainError("cannot combine two distinct salpeter terms in one potential");
    }
    salpeter_ = SalpeterTerm{mass, sign};
    return *this;
}

RadialPotential& RadialPotential::add_constant(double value) {
    if (!std::isfinite(value)) throw DomainError("constant offset must be finite");
    constant_offset_ += value;
    return *this;
}

RadialPotential RadialPotential::plus(const RadialPotential& other) const {
    RadialPotential out = *this;
    for (const auto& t : other.power_terms_) out.add_power(t.coefficient, t.exponent);
    if (other.salpeter_) out.add_salpeter(other.salpeter_->mass, other.salpeter_->sign);
    out.add_constant(other.constant_offset_);
    return out;
}

RadialPotential RadialPotential::negated() const {
    RadialPotential out;
    for (const auto& t : power_terms_) out.add_power(-t.coefficient, t.exponent);
    if (salpeter_) out.add_salpeter(salpeter_->mass, -salpeter_->sign);
    out.add_constant(-constant_offset_);
    return out;
}

double RadialPotential::evaluate(double r) const {
    if (!(r >= 0.0)) throw DomainError("potential evaluation requires r >= 0");
    double sum = constant_offset_;
    for (const auto& t : power_terms_) {
        if (r == 0.0 && t.exponent < 0.0)
            throw DomainError("singular term " + format_number(t.coefficient) + "*r^" +
                              format_number(t.exponent) + " evaluated at r = 0");
        sum += t.coefficient * std::pow(r, t.exponent);
    }
    if (salpeter_) sum += salpeter_->sign * std::sqrt(salpeter_->mass * salpeter_->mass + r * r);
    if (!std::isfinite(sum))
        throw EvaluationOverflow("potential evaluation overflowed at r = " + format_number(r));
    return sum;
}

double RadialPotential::coefficient_of(double exponent) const {
    for (const auto& t : power_terms_)
        if (t.exponent == exponent) return t.coefficient;
    return 0.0;
}

std::optional<double> RadialPotential::growth_exponent() const {
    // Rank terms by exponent; the square-root term behaves like sign * r
    // at large r. The highest exponent with a nonzero net coefficient
    // decides: positive and > 0 means confining.
    std::vector<PowerTerm> asymptotic = power_terms_;
    if (salpeter_) {
        bool merged = false;
        for (auto& t : asymptotic) {
            if (t.exponent == 1.0) {
                t.coefficient += salpeter_->sign;
                merged = true;
                break;
            }
        }
        if (!merged) asymptotic.push_back({static_cast<double>(salpeter_->sign), 1.0});
        std::sort(asymptotic.begin(), asymptotic.end(),
                  [](const PowerTerm& a, const PowerTerm& b) { return a.exponent > b.exponent; });
    }
    for (const auto& t : asymptotic) {
        if (t.coefficient == 0.0) continue;
        if (t.coefficient > 0.0 && t.exponent > 0.0) return t.exponent;
        return std::nullopt;
    }
    return std::nullopt;
}

std::string RadialPotential::to_string() const {
    std::ostringstream out;
    bool first = true;
    auto join = [&](double coefficient, const std::string& body) {
        if (!first) out << (coefficient < 0 ? " - " : " + ");
        else if (coefficient < 0) out << "-";
        first = false;
        double mag = std::abs(coefficient);
        if (body.empty()) out << format_number(mag);
        else if (mag == 1.0) out << body;
        else out << format_number(mag) << "*" << body;
    };
    for (const auto& t : power_terms_) {
        char body[64];
        if (t.exponent == 1.0) std::snprintf(body, sizeof(body), "r");
        else std::snprintf(body, sizeof(body), "r^%.17g", t.exponent);
        join(t.coefficient, body);
    }
    if (salpeter_)
        join(static_cast<double>(salpeter_->sign), "salpeter(m=" + format_number(salpeter_->mass) + ")");
    if (constant_offset_ != 0.0 || first) join(constant_offset_, "");
    return out.str();
}

bool dominates(double oscillator_coefficient, const RadialPotential& potential) {
    if (!(oscillator_coefficient > 0.0)) return false;
    for (const auto& t : potential.power_terms()) {
        if (t.exponent > 2.0 && t.coefficient > 0.0) return false;
        if (t.exponent == 2.0 && t.coefficient >= oscillator_coefficient) return false;
    }
    return true;  // square-root term grows like r, always dominated
}

namespace {

// Split a literal into top-level terms at +/- signs, keeping each term's
// sign. Exponent-notation signs ("1e-3") are not term separators.
std::vector<std::string> split_terms(std::string_view text) {
    std::vector<std::string> terms;
    std::string current;
    int depth = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        bool is_sign = (c == '+' || c == '-') && depth == 0;
        if (is_sign && i > 0) {
            size_t j = i - 1;
            while (j > 0 && std::isspace(static_cast<unsigned char>(text[j]))) --j;
            char prev = text[j];
            bool exponent_sign =
                (prev == 'e' || prev == 'E') && j > 0 &&
                (std::isdigit(static_cast<unsigned char>(text[j - 1])) || text[j - 1] == '.');
            bool after_operator = prev == '^' || prev == '*' || prev == '=' || prev == '(';
            if (exponent_sign || after_operator) is_sign = false;
        }
        if (is_sign && !current.empty() &&
            current.find_first_not_of(" \t") != std::string::npos) {
            terms.push_back(current);
            current.clear();
        }
        current += c;
    }
    if (current.find_first_not_of(" \t") != std::string::npos) terms.push_back(current);
    return terms;
}

std::string trim(std::string s) {
    auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && issp(s.front())) s.erase(s.begin());
    while (!s.empty() && issp(s.back())) s.pop_back();
    return s;
}

double parse_number(const std::string& token, const std::string& term) {
    size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &pos);
    } catch (const std::exception&) {
        throw PotentialParseError("invalid number '" + token + "' in term '" + term + "'");
    }
    if (pos != token.size())
        throw PotentialParseError("trailing characters after number in term '" + term + "'");
    return value;
}

void parse_term(const std::string& raw, RadialPotential& out) {
    std::string term = trim(raw);
    if (term.empty()) throw PotentialParseError("empty term in potential literal");

    double sign = 1.0;
    std::string body = term;
    if (body.front() == '+' || body.front() == '-') {
        if (body.front() == '-') sign = -1.0;
        body = trim(body.substr(1));
        if (body.empty()) throw PotentialParseError("dangling sign in term '" + term + "'");
    }

    double coefficient = 1.0;
    if (auto star = body.find('*'); star != std::string::npos) {
        coefficient = parse_number(trim(body.substr(0, star)), term);
        body = trim(body.substr(star + 1));
        if (body.empty()) throw PotentialParseError("missing factor after '*' in term '" + term + "'");
    }
    coefficient *= sign;

    if (body.rfind("salpeter", 0) == 0) {
        std::string args = trim(body.substr(8));
        if (args.size() < 2 || args.front() != '(' || args.back() != ')')
            throw PotentialParseError("expected salpeter(m=<mass>) in term '" + term + "'");
        std::string inner = trim(args.substr(1, args.size() - 2));
        if (inner.rfind("m", 0) != 0)
            throw PotentialParseError("expected m=<mass> inside salpeter(...) in term '" + term + "'");
        inner = trim(inner.substr(1));
        if (inner.empty() || inner.front() != '=')
            throw PotentialParseError("expected m=<mass> inside salpeter(...) in term '" + term + "'");
        double mass = parse_number(trim(inner.substr(1)), term);
        if (coefficient != 1.0 && coefficient != -1.0)
            throw PotentialParseError("salpeter term must carry coefficient +-1 in term '" + term + "'");
        if (mass < 0.0)
            throw PotentialParseError("salpeter mass must be >= 0 in term '" + term + "'");
        out.add_salpeter(mass, coefficient > 0 ? +1 : -1);
        return;
    }

    if (body.front() == 'r') {
        std::string rest = trim(body.substr(1));
        double exponent = 1.0;
        if (!rest.empty()) {
            if (rest.front() != '^')
                throw PotentialParseError("expected r or r^<exponent> in term '" + term + "'");
            exponent = parse_number(trim(rest.substr(1)), term);
        }
        if (exponent <= -2.0 || exponent == 0.0)
            throw PotentialParseError("exponent must satisfy q > -2, q != 0 in term '" + term + "'");
        if (coefficient == 0.0)
            throw PotentialParseError("zero coefficient in term '" + term + "'");
        out.add_power(coefficient, exponent);
        return;
    }

    // Bare constant.
    out.add_constant(coefficient * parse_number(body, term));
}

}  // namespace

RadialPotential parse_potential(std::string_view text) {
    std::string trimmed = trim(std::string(text));
    if (trimmed.empty()) throw PotentialParseError("empty potential literal");
    RadialPotential out;
    for (const auto& term : split_terms(trimmed)) parse_term(term, out);
    return out;
}

SchrodingerProblem fourier_swap(const SchrodingerProblem& problem) {
    const RadialPotential& v = problem.potential;
    const auto& terms = v.power_terms();
    if (terms.size() != 1 || terms[0].exponent != 2.0 || terms[0].coefficient <= 0.0 ||
        v.salpeter_term().has_value())
        throw UnsupportedSwap("potential must be a pure oscillator b*r^2 to exchange p and r; got '" +
                              v.to_string() + "'");
    if (!(problem.kinetic_coefficient >= 0.0))
        throw UnsupportedSwap("kinetic p^2 coefficient must be >= 0 to exchange p and r");
    if (problem.kinetic_coefficient == 0.0 && !problem.kinetic_salpeter)
        throw UnsupportedSwap("operator has no kinetic term to exchange");

    SchrodingerProblem out;
    out.kinetic_coefficient = terms[0].coefficient;
    out.angular_momentum = problem.angular_momentum;
    if (problem.kinetic_coefficient > 0.0)
        out.potential.add_power(problem.kinetic_coefficient, 2.0);
    if (problem.kinetic_salpeter)
        out.potential.add_salpeter(problem.kinetic_salpeter->mass, problem.kinetic_salpeter->sign);
    out.potential.add_constant(v.constant_offset());
    return out;
}

}  // namespace salpeter
