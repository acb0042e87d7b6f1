#include "densityseek/solve.hpp"

#include <stdexcept>
#include <string>

#include "densityseek/distance.hpp"
#include "densityseek/loglinear.hpp"
#include "densityseek/oracle.hpp"
#include "densityseek/sweep.hpp"

namespace densityseek {

std::string_view algorithm_name(Algorithm alg)
{
    switch (alg) {
    case Algorithm::brute:
        return "brute";
    case Algorithm::skip_mismatch:
        return "skip-mismatch";
    case Algorithm::dist_map:
        return "dist-map";
    case Algorithm::dist_sort:
        return "dist-sort";
    case Algorithm::dist_matrix:
        return "dist-matrix";
    case Algorithm::position_sweep:
        return "position-sweep";
    case Algorithm::automatic:
        return "auto";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view text)
{
    for (Algorithm alg : { Algorithm::brute, Algorithm::skip_mismatch, Algorithm::dist_map,
                           Algorithm::dist_sort, Algorithm::dist_matrix,
                           Algorithm::position_sweep, Algorithm::automatic })
        if (text == algorithm_name(alg))
            return alg;
    return std::nullopt;
}

bool algorithm_supports(Algorithm alg, Problem problem)
{
    switch (alg) {
    case Algorithm::brute:
    case Algorithm::dist_sort:
    case Algorithm::automatic:
        return true;
    case Algorithm::skip_mismatch:
    case Algorithm::dist_map:
    case Algorithm::dist_matrix:
        return problem == Problem::fixed;
    case Algorithm::position_sweep:
        return problem == Problem::bounded;
    }
    return false;
}

Algorithm resolve_algorithm(Algorithm alg, Problem problem)
{
    if (alg != Algorithm::automatic)
        return alg;
    return problem == Problem::fixed ? Algorithm::dist_matrix : Algorithm::position_sweep;
}

SpanResult solve(const Bitstream& s, const Ratio& theta, Problem problem, Algorithm alg,
                 SolverCounters* counters, MatrixStats* matrix)
{
    alg = resolve_algorithm(alg, problem);
    if (!algorithm_supports(alg, problem))
        throw std::invalid_argument(std::string(algorithm_name(alg)) + " does not answer the "
                                    + (problem == Problem::fixed ? "fixed" : "bounded")
                                    + " problem");
    if (theta.extreme())
        return trivial_extremes(s, theta, problem);
    switch (alg) {
    case Algorithm::brute:
        return problem == Problem::fixed ? brute_fixed(s, theta) : brute_bounded(s, theta);
    case Algorithm::skip_mismatch:
        return skip_mismatch(s, theta, counters);
    case Algorithm::dist_map:
        return dist_map(s, theta, counters);
    case Algorithm::dist_sort:
        return dist_sort(s, theta, problem, counters);
    case Algorithm::dist_matrix:
        return dist_matrix(s, theta, matrix);
    case Algorithm::position_sweep:
        return position_sweep(s, theta, counters);
    case Algorithm::automatic:
        break; // resolved above
    }
    throw std::logic_error("unreachable solver dispatch");
}

} // namespace densityseek
