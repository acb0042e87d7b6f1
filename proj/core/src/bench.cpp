#include "densityseek/bench.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "densityseek/counters.hpp"
#include "densityseek/distance.hpp"
#include "densityseek/random.hpp"

namespace densityseek {

namespace {

using Clock = std::chrono::steady_clock;

struct CaseOutcome {
    double seconds = 0.0;
    std::int64_t length = 0;
    std::uint64_t ops = 0;
    std::uint64_t alloc = 0;
};

CaseOutcome run_case(const Bitstream& s, const Ratio& theta, Problem problem, Algorithm alg)
{
    CaseOutcome out;
    if (alg == Algorithm::dist_matrix && !theta.extreme()
        && static_cast<std::size_t>(theta.beta) <= s.size()) {
        // Run against an explicit matrix so its link and pool counters are
        // visible; construction is part of the timed solve.
        check_distance_overflow(s.size(), theta);
        const auto t0 = Clock::now();
        MappingMatrix m(theta, MatrixChecks::none, s.size());
        const SpanResult r = dist_matrix(s, m);
        const auto t1 = Clock::now();
        out.seconds = std::chrono::duration<double>(t1 - t0).count();
        out.length = r ? r->length() : 0;
        out.ops = m.stats().walk_links_followed;
        out.alloc = m.pool_peak_bytes();
        return out;
    }
    SolverCounters c;
    const auto t0 = Clock::now();
    const SpanResult r = solve(s, theta, problem, alg, &c);
    const auto t1 = Clock::now();
    out.seconds = std::chrono::duration<double>(t1 - t0).count();
    out.length = r ? r->length() : 0;
    switch (alg) {
    case Algorithm::brute:
        out.alloc = 4 * (static_cast<std::uint64_t>(s.size()) + 1); // its rank table
        break;
    case Algorithm::skip_mismatch:
        out.ops = c.comparisons;
        out.alloc = c.alloc_bytes;
        break;
    case Algorithm::dist_map:
        out.ops = c.map_operations;
        out.alloc = c.alloc_bytes;
        break;
    case Algorithm::dist_sort:
        out.ops = c.comparisons;
        out.alloc = c.alloc_bytes;
        break;
    case Algorithm::position_sweep:
        out.ops = c.positions_scanned;
        out.alloc = c.alloc_bytes;
        break;
    default:
        break;
    }
    return out;
}

void emit_row(std::ostream& csv, std::string_view alg, std::size_t n, const Ratio& theta,
              const BenchRecord& rec)
{
    csv << alg << ',' << n << ',' << theta.text() << ',' << rec.repeat << ',' << std::fixed
        << std::setprecision(9) << rec.seconds << ',' << rec.result_length << ',' << rec.ops
        << ',' << rec.alloc_bytes << '\n';
}

} // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& cfg, std::ostream& csv, std::ostream* diag)
{
    if (cfg.repeats == 0)
        throw std::invalid_argument("bench repeats must be at least 1");

    std::vector<Algorithm> active;
    for (Algorithm alg : cfg.algorithms) {
        if (algorithm_supports(alg, cfg.problem)) {
            active.push_back(resolve_algorithm(alg, cfg.problem));
        } else if (diag != nullptr) {
            *diag << "note: " << algorithm_name(alg) << " does not answer the "
                  << (cfg.problem == Problem::fixed ? "fixed" : "bounded")
                  << " problem; skipped\n";
        }
    }

    std::vector<BenchRecord> records;
    csv << "algorithm,n,theta,repeat,seconds,result_length,ops,alloc_bytes\n";

    for (std::size_t li = 0; li < cfg.lengths.size(); ++li) {
        const std::size_t n = cfg.lengths[li];
        for (std::size_t ti = 0; ti < cfg.thetas.size(); ++ti) {
            const Ratio theta = cfg.thetas[ti];
            std::vector<Bitstream> streams;
            streams.reserve(cfg.repeats);
            for (std::size_t ri = 0; ri < cfg.repeats; ++ri)
                streams.push_back(random_bitstream(derive_seed(cfg.seed, li, ti, ri), n,
                                                   cfg.rho));
            std::vector<std::int64_t> case_length(cfg.repeats, -1);
            for (Algorithm alg : active) {
                double sum_seconds = 0.0;
                double sum_length = 0.0;
                double sum_ops = 0.0;
                double sum_alloc = 0.0;
                for (std::size_t ri = 0; ri < cfg.repeats; ++ri) {
                    const CaseOutcome got = run_case(streams[ri], theta, cfg.problem, alg);
                    BenchRecord rec { alg, n, theta, ri, got.seconds,
                                      got.length, got.ops, got.alloc };
                    emit_row(csv, algorithm_name(alg), n, theta, rec);
                    records.push_back(rec);
                    sum_seconds += got.seconds;
                    sum_length += static_cast<double>(got.length);
                    sum_ops += static_cast<double>(got.ops);
                    sum_alloc += static_cast<double>(got.alloc);
                    if (case_length[ri] < 0) {
                        case_length[ri] = got.length;
                    } else if (case_length[ri] != got.length && diag != nullptr) {
                        *diag << "warning: " << algorithm_name(alg) << " reported length "
                              << got.length << " but an earlier solver reported "
                              << case_length[ri] << " (n=" << n << ", theta=" << theta.text()
                              << ", repeat=" << ri << ")\n";
                    }
                }
                const auto reps = static_cast<double>(cfg.repeats);
                csv << algorithm_name(alg) << ',' << n << ',' << theta.text() << ",mean,"
                    << std::fixed << std::setprecision(9) << sum_seconds / reps << ','
                    << std::setprecision(2) << sum_length / reps << ',' << sum_ops / reps
                    << ',' << sum_alloc / reps << '\n';
            }
        }
    }
    return records;
}

} // namespace densityseek
