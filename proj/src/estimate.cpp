#include "hetsec/estimate.hpp"

#include "hetsec/analytic.hpp"
#include "hetsec/secrecy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace hetsec::mc {

namespace {

// Runs fn(engine, first_trial, count, out) over fixed-size partitions on a
// small pool. Partition k always gets stream (seed, domain, k).
template <class T, class Fn>
std::vector<T> run_partitioned(std::uint64_t trials, const McConfig& cfg, StreamDomain domain,
                               Fn fn) {
    std::vector<T> out(trials);
    const std::uint64_t parts = (trials + kPartitionSize - 1) / kPartitionSize;
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::uint64_t k = next.fetch_add(1);
            if (k >= parts) {
                return;
            }
            try {
                Engine eng = make_stream(cfg.seed, domain, k);
                const std::uint64_t begin = k * kPartitionSize;
                const std::uint64_t end = std::min(trials, begin + kPartitionSize);
                for (std::uint64_t i = begin; i < end; ++i) {
                    out[i] = fn(eng);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next = parts;
            }
        }
    };
    const unsigned n_threads =
        static_cast<unsigned>(std::min<std::uint64_t>(cfg.threads, std::max<std::uint64_t>(parts, 1)));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return out;
}

struct Moments {
    double mean;
    double var;   // sample variance
    std::size_t n;
};

Moments moments(const std::vector<double>& xs) {
    if (xs.empty()) {
        throw std::invalid_argument("no samples to average");
    }
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t n = 0;
    for (double x : xs) {
        ++n;
        const double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }
    return {mean, n > 1 ? m2 / static_cast<double>(n - 1) : 0.0, n};
}

std::vector<double> tier_values(const std::vector<UserTrial>& trials, TierId tier,
                                double (*f)(const UserTrial&, double), double arg) {
    std::vector<double> out;
    for (const auto& t : trials) {
        if (t.tier == tier) {
            out.push_back(f(t, arg));
        }
    }
    if (out.empty()) {
        throw std::runtime_error(std::string("no realization associated with the ") +
                                 std::string(to_string(tier)) + " tier");
    }
    return out;
}

std::vector<double> outage_indicators(const std::vector<double>& eve, double threshold) {
    std::vector<double> out;
    out.reserve(eve.size());
    for (double s : eve) {
        out.push_back(s >= threshold ? 1.0 : 0.0);
    }
    return out;
}

double analytic_rate(TierId tier, const SystemParams& p) {
    return tier == TierId::Macro ? analytic::rate_lower_bound_macro(p).value
                                 : analytic::ergodic_rate_pico(p).value;
}

std::vector<double> tier_outages(TierId tier, const std::vector<double>& eve, const SystemParams& p) {
    const auto q = secrecy::SecrecyQuery::relative(p.rho_secrecy);
    return outage_indicators(eve, secrecy::eve_threshold(analytic_rate(tier, p), q));
}

McEstimate with_trials(McEstimate e, std::uint64_t trials) {
    e.trials = trials;
    return e;
}

bool needs_sinr(const Metric& m) {
    return m.kind == MetricKind::ErgodicRateMacro ||
           m.kind == MetricKind::ErgodicRatePico || m.kind == MetricKind::PicoSinrCdf;
}

bool needs_eve(const Metric& m, TierId tier) {
    switch (m.kind) {
    case MetricKind::SecrecyOutageOverall:
        return true;
    case MetricKind::SecrecyOutageMacro:
    case MetricKind::EveCdfMacro:
        return tier == TierId::Macro;
    case MetricKind::SecrecyOutagePico:
    case MetricKind::EveCdfPico:
        return tier == TierId::Pico;
    default:
        return false;
    }
}

}  // namespace

void McConfig::validate() const {
    if (trials < 100) {
        throw std::invalid_argument("Monte Carlo needs at least 100 trials, got " +
                                    std::to_string(trials));
    }
    if (threads == 0) {
        throw std::invalid_argument("threads must be >= 1");
    }
}

McEstimate mean_estimate(const std::vector<double>& xs) {
    const Moments m = moments(xs);
    return {m.mean, 1.96 * std::sqrt(m.var / static_cast<double>(m.n)), m.n};
}

std::vector<UserTrial> run_user_trials(const SystemParams& p, const McConfig& cfg) {
    p.validate();
    cfg.validate();
    return run_partitioned<UserTrial>(cfg.trials, cfg, StreamDomain::User,
                                      [&](Engine& eng) { return sample_user_trial(p, eng); });
}

std::vector<UserTrial> run_association_trials(const SystemParams& p, const McConfig& cfg) {
    p.validate();
    cfg.validate();
    return run_partitioned<UserTrial>(cfg.trials, cfg, StreamDomain::User,
                                      [&](Engine& eng) { return sample_association_trial(p, eng); });
}

std::vector<double> run_eve_trials(TierId tier, const SystemParams& p, const McConfig& cfg) {
    p.validate();
    cfg.validate();
    const auto domain = tier == TierId::Macro ? StreamDomain::EveMacro : StreamDomain::EvePico;
    return run_partitioned<double>(cfg.trials, cfg, domain, [&](Engine& eng) {
        return sample_eve_trial(tier, p, cfg.eve_mode, eng);
    });
}

McSamples draw_samples(const std::vector<Metric>& metrics, const SystemParams& p,
                       const McConfig& cfg) {
    McSamples s;
    const auto any = [&](auto pred) { return std::any_of(metrics.begin(), metrics.end(), pred); };
    if (any(needs_sinr)) {
        s.user = run_user_trials(p, cfg);
    } else if (any([](const Metric& m) { return m.kind == MetricKind::AssocFracMacro; })) {
        s.user = run_association_trials(p, cfg);
    }
    if (p.lambda_m > 0.0 && any([](const Metric& m) { return needs_eve(m, TierId::Macro); })) {
        s.eve_macro = run_eve_trials(TierId::Macro, p, cfg);
    }
    if (p.lambda_p > 0.0 && any([](const Metric& m) { return needs_eve(m, TierId::Pico); })) {
        s.eve_pico = run_eve_trials(TierId::Pico, p, cfg);
    }
    return s;
}

McEstimate estimate_from_samples(const Metric& m, const McSamples& s, const SystemParams& p) {
    const auto realizations = [](const auto& v) {
        if (v.empty()) {
            throw std::invalid_argument("samples for this metric were not drawn");
        }
        return static_cast<std::uint64_t>(v.size());
    };
    switch (m.kind) {
    case MetricKind::AssocFracMacro: {
        std::vector<double> xs;
        xs.reserve(s.user.size());
        for (const auto& t : s.user) {
            xs.push_back(t.tier == TierId::Macro ? 1.0 : 0.0);
        }
        return with_trials(mean_estimate(xs), realizations(s.user));
    }
    case MetricKind::ErgodicRateMacro:
    case MetricKind::ErgodicRatePico: {
        const TierId tier = m.kind == MetricKind::ErgodicRateMacro ? TierId::Macro : TierId::Pico;
        const auto xs = tier_values(
            s.user, tier, [](const UserTrial& t, double) { return std::log2(1.0 + t.sinr); }, 0.0);
        return with_trials(mean_estimate(xs), realizations(s.user));
    }
    case MetricKind::PicoSinrCdf: {
        const auto xs = tier_values(
            s.user, TierId::Pico,
            [](const UserTrial& t, double g) { return t.sinr <= g ? 1.0 : 0.0; }, m.gamma);
        return with_trials(mean_estimate(xs), realizations(s.user));
    }
    case MetricKind::EveCdfMacro:
    case MetricKind::EveCdfPico: {
        const auto& eve = m.kind == MetricKind::EveCdfMacro ? s.eve_macro : s.eve_pico;
        std::vector<double> xs;
        xs.reserve(eve.size());
        for (double v : eve) {
            xs.push_back(v <= m.gamma ? 1.0 : 0.0);
        }
        return with_trials(mean_estimate(xs), realizations(eve));
    }
    case MetricKind::SecrecyOutageMacro:
        return mean_estimate(tier_outages(TierId::Macro, s.eve_macro, p));
    case MetricKind::SecrecyOutagePico:
        return mean_estimate(tier_outages(TierId::Pico, s.eve_pico, p));
    case MetricKind::SecrecyOutageOverall: {
        const double a_m = analytic::assoc_prob_macro(p).value;
        const double a_p = analytic::assoc_prob_pico(p).value;
        double mean = 0.0;
        double var = 0.0;
        std::uint64_t n = 0;
        if (p.lambda_m > 0.0) {
            const Moments mm = moments(tier_outages(TierId::Macro, s.eve_macro, p));
            mean += a_m * mm.mean;
            var += a_m * a_m * mm.var / static_cast<double>(mm.n);
            n = std::max<std::uint64_t>(n, mm.n);
        }
        if (p.lambda_p > 0.0) {
            const Moments mp = moments(tier_outages(TierId::Pico, s.eve_pico, p));
            mean += a_p * mp.mean;
            var += a_p * a_p * mp.var / static_cast<double>(mp.n);
            n = std::max<std::uint64_t>(n, mp.n);
        }
        return {mean, 1.96 * std::sqrt(var), n};
    }
    }
    throw std::logic_error("estimate_from_samples: unhandled metric");
}

std::vector<McEstimate> estimate_metrics(const std::vector<Metric>& metrics, const SystemParams& p,
                                         const McConfig& cfg) {
    if (metrics.empty()) {
        throw std::invalid_argument("no metrics requested");
    }
    const McSamples s = draw_samples(metrics, p, cfg);
    std::vector<McEstimate> out;
    out.reserve(metrics.size());
    for (const auto& m : metrics) {
        out.push_back(estimate_from_samples(m, s, p));
    }
    return out;
}

}  // namespace hetsec::mc
