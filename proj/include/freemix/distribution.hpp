#pragma once

#include <random>

#include "moments.hpp"

namespace freemix {

// A samplable scalar law with exactly computable even moments.
struct distribution_spec {
    enum class family { rademacher, gaussian, finite_atoms };

    family kind = family::rademacher;
    bigrat sigma = 1;                                // gaussian
    std::vector<std::pair<bigrat, bigrat>> atoms;    // (value, probability)

    static distribution_spec rademacher() { return {}; }

    static distribution_spec gaussian(bigrat sigma) {
        distribution_spec d;
        d.kind = family::gaussian;
        d.sigma = std::move(sigma);
        return d;
    }

    static distribution_spec finite_atoms(std::vector<std::pair<bigrat, bigrat>> atoms) {
        distribution_spec d;
        d.kind = family::finite_atoms;
        d.atoms = std::move(atoms);
        bigrat total = 0;
        for (const auto& [value, prob] : d.atoms) {
            if (prob < 0) throw std::invalid_argument("finite_atoms: negative probability");
            total += prob;
        }
        if (total != 1) throw std::invalid_argument("finite_atoms: probabilities must sum to 1");
        return d;
    }

    std::string name() const {
        switch (kind) {
            case family::rademacher: return "rademacher";
            case family::gaussian: return "gaussian:" + freemix::to_string(sigma);
            case family::finite_atoms: return "finite-atoms";
        }
        return "?";
    }

    // Odd moments vanish for rademacher and gaussian; finite atom sets are
    // symmetric when closed under negation with matched weights.
    bool symmetric() const {
        if (kind != family::finite_atoms) return true;
        std::map<bigrat, bigrat> weight;
        for (const auto& [value, prob] : atoms) weight[value] += prob;
        for (const auto& [value, prob] : weight) {
            if (value == 0) continue;
            auto it = weight.find(-value);
            if (it == weight.end() || it->second != prob) return false;
        }
        return true;
    }

    // Exact even moments: 1 for rademacher, (2i-1)!! sigma^{2i} for gaussian,
    // sum p_v v^{2i} for atoms.
    moment_sequence even_moments(int k_max) const {
        moment_sequence seq;
        seq.label = name();
        seq.even.reserve(k_max);
        switch (kind) {
            case family::rademacher:
                seq.even.assign(k_max, bigrat(1));
                break;
            case family::gaussian: {
                bigrat sigma2 = sigma * sigma;
                bigrat value = sigma2;
                bigrat double_factorial = 1;
                for (int i = 1; i <= k_max; ++i) {
                    double_factorial *= (2 * i - 1);
                    seq.even.push_back(double_factorial * value);
                    value *= sigma2;
                }
                break;
            }
            case family::finite_atoms:
                for (int i = 1; i <= k_max; ++i) {
                    bigrat sum = 0;
                    for (const auto& [value, prob] : atoms) {
                        bigrat p = 1;
                        for (int j = 0; j < 2 * i; ++j) p *= value;
                        sum += prob * p;
                    }
                    seq.even.push_back(sum);
                }
                break;
        }
        seq.variance_warning = !seq.unit_variance();
        return seq;
    }

    double sample(std::mt19937_64& rng) const {
        switch (kind) {
            case family::rademacher:
                return (rng() & 1) ? 1.0 : -1.0;
            case family::gaussian: {
                std::normal_distribution<double> normal(0.0, to_double(sigma));
                return normal(rng);
            }
            case family::finite_atoms: {
                std::uniform_real_distribution<double> uniform(0.0, 1.0);
                double u = uniform(rng);
                double acc = 0.0;
                for (const auto& [value, prob] : atoms) {
                    acc += to_double(prob);
                    if (u < acc) return to_double(value);
                }
                return to_double(atoms.back().first);
            }
        }
        return 0.0;
    }
};

}  // namespace freemix
