#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <thread>
#include <utility>
#include <vector>

#include "mwroute/chromosome.hpp"
#include "mwroute/objective.hpp"

namespace mwroute {

using Rng = std::mt19937_64;

/// Deterministic stream split, so one user seed can feed several independent
/// generators (solver, baseline, ...).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

struct GaConfig {
    int population_size = 30;
    int max_iterations = 300;
    double improvement_epsilon = 1e-7; // relative best-cost improvement between generations
    int convergence_patience = 50;     // consecutive sub-epsilon generations before stopping
    double crossover_prob = 0.8;
    double mutation_prob = 0.1;
    int elitism_count = 1;
    double infeasibility_penalty = 1e9; // added per broken constraint
    std::uint64_t rng_seed = 0;
    int eval_workers = 1; // parallel fitness evaluation; never touches the RNG
};

inline void validate_config(const GaConfig& c) {
    if (c.population_size < 2) throw ValidationError("ga.population_size must be >= 2");
    if (c.max_iterations < 0) throw ValidationError("ga.max_iterations must be >= 0");
    if (c.convergence_patience < 1) throw ValidationError("ga.convergence_patience must be >= 1");
    if (c.crossover_prob < 0 || c.crossover_prob > 1)
        throw ValidationError("ga.crossover_prob must be in [0,1]");
    if (c.mutation_prob < 0 || c.mutation_prob > 1)
        throw ValidationError("ga.mutation_prob must be in [0,1]");
    if (c.elitism_count < 0 || c.elitism_count >= c.population_size)
        throw ValidationError("ga.elitism_count must be in [0, population_size)");
    if (c.eval_workers < 1) throw ValidationError("ga.eval_workers must be >= 1");
}

enum class TerminationReason { Converged, MaxIterations };

struct GaResult {
    Chromosome best_chromosome;
    RoutePlan best_plan;
    CostBreakdown best_cost;
    double best_objective = 0.0; // penalized blended cost of the best individual
    std::vector<double> history; // best objective per generation, entry 0 = initial population
    int generations_run = 0;
    TerminationReason termination_reason = TerminationReason::MaxIterations;
};

/// Inspection hook called after each generation is evaluated:
/// (generation index, population, objectives).
using GaObserver =
    std::function<void(int, const std::vector<Chromosome>&, const std::vector<double>&)>;

/// Penalized objective of one chromosome; lower is better. Feasible
/// chromosomes score their exact blended cost, every broken constraint adds
/// the configured penalty.
inline double fitness(const Chromosome& c, const ProblemInstance& inst, const RiskWeights& weights,
                      double alpha, const GaConfig& config) {
    const RoutePlan plan = decode(c, inst);
    const CostBreakdown cost = evaluate_plan(inst, plan, weights, alpha);
    const auto violations = check_feasibility(plan, inst);
    return cost.blended + config.infeasibility_penalty * static_cast<double>(violations.size());
}

/// Roulette share of an objective value; lower cost, larger share.
inline double selection_score(double objective) { return 1.0 / (objective + 1.0); }

inline Chromosome random_chromosome(int num_sites, int num_vehicles, Rng& rng) {
    Chromosome c;
    c.genes.resize(static_cast<std::size_t>(num_sites) + num_vehicles - 1);
    std::iota(c.genes.begin(), c.genes.end(), 1);
    std::shuffle(c.genes.begin(), c.genes.end(), rng);
    return c;
}

/// Uniform random population; each individual is resampled up to 100 times
/// towards feasibility and otherwise kept, to run with a penalty.
inline std::vector<Chromosome> initialize_population(const ProblemInstance& inst,
                                                     const GaConfig& config, Rng& rng) {
    const int n = inst.num_sites();
    const int h = inst.fleet.num_vehicles;
    auto feasible = [&](const Chromosome& c) {
        return check_feasibility(decode(c, inst), inst).empty();
    };
    std::vector<Chromosome> population;
    population.reserve(static_cast<std::size_t>(config.population_size));
    for (int i = 0; i < config.population_size; ++i) {
        Chromosome c = random_chromosome(n, h, rng);
        for (int resamples = 0; resamples < 100 && !feasible(c); ++resamples)
            c = random_chromosome(n, h, rng);
        population.push_back(std::move(c));
    }
    return population;
}

/// Roulette-wheel draw of two parent indices (they may coincide).
inline std::pair<std::size_t, std::size_t> select_parents(const std::vector<double>& scores,
                                                          Rng& rng) {
    double total = 0.0;
    for (double s : scores) {
        if (s < 0) throw DegenerateFitness("negative selection score");
        total += s;
    }
    if (!(total > 0)) throw DegenerateFitness("all selection scores are zero");
    std::uniform_real_distribution<double> u(0.0, total);
    auto draw = [&] {
        const double r = u(rng);
        double acc = 0.0;
        for (std::size_t i = 0; i < scores.size(); ++i) {
            acc += scores[i];
            if (r < acc) return i;
        }
        return scores.size() - 1;
    };
    const std::size_t a = draw();
    const std::size_t b = draw();
    return {a, b};
}

inline std::pair<Chromosome, Chromosome> select_parents(const std::vector<Chromosome>& population,
                                                        const std::vector<double>& scores,
                                                        Rng& rng) {
    const auto [i, j] = select_parents(scores, rng);
    return {population[i], population[j]};
}

/// Partially mapped crossover with explicit cut points; the exchanged segment
/// is [cut1, cut2). Conflicts outside the segment are resolved through the
/// segment's value mapping.
inline std::pair<Chromosome, Chromosome> pmx_crossover_at(const Chromosome& a, const Chromosome& b,
                                                          std::size_t cut1, std::size_t cut2) {
    const std::size_t n = a.genes.size();
    auto make_child = [n, cut1, cut2](const std::vector<int>& base, const std::vector<int>& donor) {
        std::vector<int> child(n);
        std::vector<char> in_segment(n + 1, 0);
        std::vector<int> donor_to_base(n + 1, 0);
        for (std::size_t k = cut1; k < cut2; ++k) {
            child[k] = donor[k];
            in_segment[static_cast<std::size_t>(donor[k])] = 1;
            donor_to_base[static_cast<std::size_t>(donor[k])] = base[k];
        }
        for (std::size_t k = 0; k < n; ++k) {
            if (k >= cut1 && k < cut2) continue;
            int v = base[k];
            while (in_segment[static_cast<std::size_t>(v)])
                v = donor_to_base[static_cast<std::size_t>(v)];
            child[k] = v;
        }
        return child;
    };
    return {Chromosome{make_child(a.genes, b.genes)}, Chromosome{make_child(b.genes, a.genes)}};
}

inline std::pair<Chromosome, Chromosome> pmx_crossover(const Chromosome& a, const Chromosome& b,
                                                       Rng& rng) {
    std::uniform_int_distribution<std::size_t> d(0, a.genes.size());
    std::size_t cut1 = d(rng);
    std::size_t cut2 = d(rng);
    if (cut1 > cut2) std::swap(cut1, cut2);
    return pmx_crossover_at(a, b, cut1, cut2);
}

/// Reverses genes[i..j], bounds inclusive.
inline Chromosome invert_segment(Chromosome c, std::size_t i, std::size_t j) {
    std::reverse(c.genes.begin() + static_cast<std::ptrdiff_t>(i),
                 c.genes.begin() + static_cast<std::ptrdiff_t>(j) + 1);
    return c;
}

/// With probability mutation_prob reverses a random contiguous segment,
/// otherwise returns the chromosome unchanged.
inline Chromosome inversion_mutation(Chromosome c, double mutation_prob, Rng& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    if (u(rng) >= mutation_prob) return c;
    std::uniform_int_distribution<std::size_t> d(0, c.genes.size() - 1);
    std::size_t i = d(rng);
    std::size_t j = d(rng);
    if (i > j) std::swap(i, j);
    return invert_segment(std::move(c), i, j);
}

namespace detail {

/// Runs body(i) for i in [0, count) on up to `workers` threads. Each index is
/// independent, so results cannot depend on the worker count.
template <typename F>
void parallel_for(std::size_t count, int workers, F&& body) {
    const std::size_t nthreads =
        std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), count);
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(nthreads);
    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) {
        threads.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < count; i += nthreads) body(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace detail

inline std::vector<double> evaluate_population(const std::vector<Chromosome>& population,
                                               const ProblemInstance& inst,
                                               const RiskWeights& weights, double alpha,
                                               const GaConfig& config) {
    std::vector<double> objectives(population.size());
    detail::parallel_for(population.size(), config.eval_workers, [&](std::size_t i) {
        objectives[i] = fitness(population[i], inst, weights, alpha, config);
    });
    return objectives;
}

/// The full solver loop: seeded random initialization, roulette selection,
/// PMX crossover, inversion mutation, elitism, and a dual stopping rule:
/// converged once the relative best-cost improvement stays below epsilon for
/// convergence_patience consecutive generations, else the iteration cap.
/// All randomness flows through one sequential generator, so a fixed seed
/// gives bit-identical results for any eval_workers count.
inline GaResult run_ga(const ProblemInstance& inst, const RiskWeights& weights, double alpha,
                       const GaConfig& config, const GaObserver& observer = {}) {
    validate_config(config);
    Rng rng(config.rng_seed);

    std::vector<Chromosome> population = initialize_population(inst, config, rng);
    std::vector<double> objectives = evaluate_population(population, inst, weights, alpha, config);
    if (observer) observer(0, population, objectives);

    auto best_index = [&objectives] {
        std::size_t best = 0;
        for (std::size_t i = 1; i < objectives.size(); ++i)
            if (objectives[i] < objectives[best]) best = i;
        return best;
    };

    GaResult result;
    result.history.push_back(objectives[best_index()]);

    std::vector<std::size_t> order(population.size());
    std::vector<double> scores(population.size());
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int stalled = 0;

    for (int gen = 1; gen <= config.max_iterations; ++gen) {
        for (std::size_t i = 0; i < population.size(); ++i)
            scores[i] = selection_score(objectives[i]);

        std::vector<Chromosome> next;
        next.reserve(population.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return objectives[a] < objectives[b]; });
        for (int e = 0; e < config.elitism_count; ++e)
            next.push_back(population[order[static_cast<std::size_t>(e)]]);

        while (static_cast<int>(next.size()) < config.population_size) {
            const auto [i, j] = select_parents(scores, rng);
            Chromosome c1 = population[i];
            Chromosome c2 = population[j];
            if (u(rng) < config.crossover_prob) {
                auto offspring = pmx_crossover(c1, c2, rng);
                c1 = std::move(offspring.first);
                c2 = std::move(offspring.second);
            }
            c1 = inversion_mutation(std::move(c1), config.mutation_prob, rng);
            c2 = inversion_mutation(std::move(c2), config.mutation_prob, rng);
            next.push_back(std::move(c1));
            if (static_cast<int>(next.size()) < config.population_size)
                next.push_back(std::move(c2));
        }

        population = std::move(next);
        objectives = evaluate_population(population, inst, weights, alpha, config);
        if (observer) observer(gen, population, objectives);

        const double previous = result.history.back();
        const double current = objectives[best_index()];
        result.history.push_back(current);
        result.generations_run = gen;

        const double improvement = previous > 0 ? (previous - current) / previous : 0.0;
        stalled = improvement < config.improvement_epsilon ? stalled + 1 : 0;
        if (stalled >= config.convergence_patience) {
            result.termination_reason = TerminationReason::Converged;
            break;
        }
    }

    const std::size_t best = best_index();
    result.best_chromosome = population[best];
    result.best_objective = objectives[best];
    result.best_plan = decode(population[best], inst);
    result.best_cost = evaluate_plan(inst, result.best_plan, weights, alpha);
    return result;
}

} // namespace mwroute
