// SPDX-License-Identifier: Apache-2.0
#include "pcrank/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <charconv>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "pcrank/bounds.hpp"
#include "pcrank/inconsistency.hpp"
#include "pcrank/prioritize.hpp"
#include "pcrank/rankstats.hpp"
#include "rng.hpp"

namespace pcrank {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

void validate(const McConfig& cfg) {
    if (cfg.n < 2)
        throw std::invalid_argument("McConfig: need n >= 2");
    if (cfg.base_count < 1)
        throw std::invalid_argument("McConfig: need base_count >= 1");
    if (!(cfg.beta_start >= 1.0))
        throw std::invalid_argument("McConfig: beta_start must be >= 1");
    if (!(cfg.beta_step > 0.0))
        throw std::invalid_argument("McConfig: beta_step must be > 0");
    if (!(cfg.beta_end >= cfg.beta_start))
        throw std::invalid_argument("McConfig: beta_end must be >= beta_start");
    if (cfg.ki_bins.count < 1 || cfg.ci_bins.count < 1)
        throw std::invalid_argument("McConfig: bin counts must be >= 1");
}

// Smallest adjacent gap, tolerant of ties (unlike weight_gaps).
double raw_min_gap(const PriorityVector& w) {
    std::vector<double> sorted = w.weights();
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double gap = sorted[0] - sorted[1];
    for (std::size_t i = 1; i + 1 < sorted.size(); ++i)
        gap = std::min(gap, sorted[i] - sorted[i + 1]);
    return gap;
}

struct TrialSlot {
    TrialRecord record{};
    bool converged = false;
};

TrialSlot run_trial(const PCMatrix& base, long trial_id, int base_index, double beta,
                    std::uint64_t seed, const std::optional<ScaleBound>& clamp) {
    TrialSlot slot;
    const PCMatrix m = disturb(base, beta, seed, clamp);

    std::optional<PriorityVector> ev;
    try {
        ev.emplace(evm(m));
    } catch (const Error& e) {
        if (e.code() == errc::no_convergence)
            return slot;
        throw;
    }
    slot.converged = true;
    const PriorityVector& w_ev = *ev;

    const PriorityVector w_gm = gmm(m);
    const double ki = koczkodaj_ki(m);
    const OrdinalRanking rank_ev = ordinal_ranking(w_ev);
    const OrdinalRanking rank_gm = ordinal_ranking(w_gm);
    const bool tied = rank_ev.tied() || rank_gm.tied();

    TrialRecord& r = slot.record;
    r.trial_id = trial_id;
    r.base_index = base_index;
    r.beta = beta;
    r.ki = ki;
    r.ci = saaty_ci(*w_ev.lambda_max(), m.size());
    r.min_gap = raw_min_gap(w_ev);
    r.md_upper = md_bounds(ki).upper;
    r.tied = tied;
    r.order_identical = rank_ev.order() == rank_gm.order();
    r.top_identical = rank_ev.order()[0] == rank_gm.order()[0];
    r.md = manhattan_distance(w_ev, w_gm);
    if (tied) {
        r.order_certified = false;
        r.top_certified = false;
        r.tau = kNan;
        r.rho = kNan;
    } else {
        const StabilityCertificate cert = make_certificate(w_ev, ki);
        r.order_certified = cert.order_certified;
        r.top_certified = cert.top_certified;
        r.tau = kendall_tau(rank_ev, rank_gm);
        r.rho = spearman_rho(rank_ev, rank_gm);
        assert(!r.order_certified || r.order_identical);
        assert(!r.top_certified || r.top_identical);
    }
    return slot;
}

Histogram bin_records(const std::vector<TrialRecord>& records, const BinSpec& spec,
                      bool ci_axis) {
    std::vector<const TrialRecord*> kept;
    kept.reserve(records.size());
    for (const auto& r : records)
        if (!r.tied)
            kept.push_back(&r);
    if (kept.empty())
        return {};

    double lo;
    double hi;
    if (spec.lo && spec.hi) {
        lo = *spec.lo;
        hi = *spec.hi;
    } else if (!ci_axis) {
        lo = 0.0;
        hi = 1.0;
    } else {
        lo = hi = kept.front()->ci;
        for (const auto* r : kept) {
            lo = std::min(lo, r->ci);
            hi = std::max(hi, r->ci);
        }
        if (hi - lo < 1e-12)
            hi = lo + 1.0;
    }

    Histogram hist(static_cast<std::size_t>(spec.count));
    const double width = (hi - lo) / spec.count;
    for (int b = 0; b < spec.count; ++b) {
        hist[static_cast<std::size_t>(b)].lo = lo + b * width;
        hist[static_cast<std::size_t>(b)].hi = lo + (b + 1) * width;
    }
    for (const auto* r : kept) {
        const double v = ci_axis ? r->ci : r->ki;
        int idx = static_cast<int>((v - lo) / (hi - lo) * spec.count);
        idx = std::clamp(idx, 0, spec.count - 1);
        auto& bin = hist[static_cast<std::size_t>(idx)];
        if (r->order_certified)
            ++bin.met;
        else if (r->order_identical)
            ++bin.unmet_identical;
        else
            ++bin.not_identical;
    }
    return hist;
}

std::string fmt(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

void append_row(std::string& out, const TrialRecord& r) {
    out += std::to_string(r.trial_id);
    out += ',';
    out += std::to_string(r.base_index);
    out += ',';
    out += fmt(r.beta);
    out += ',';
    out += fmt(r.ki);
    out += ',';
    out += fmt(r.ci);
    out += ',';
    out += fmt(r.min_gap);
    out += ',';
    out += fmt(r.md_upper);
    out += ',';
    out += r.order_certified ? '1' : '0';
    out += ',';
    out += r.top_certified ? '1' : '0';
    out += ',';
    out += r.order_identical ? '1' : '0';
    out += ',';
    out += r.top_identical ? '1' : '0';
    out += ',';
    out += fmt(r.md);
    out += ',';
    out += fmt(r.tau);
    out += ',';
    out += fmt(r.rho);
    out += ',';
    out += r.tied ? '1' : '0';
    out += '\n';
}

nlohmann::ordered_json histogram_json(const Histogram& h) {
    nlohmann::ordered_json bins = nlohmann::ordered_json::array();
    for (const auto& b : h)
        bins.push_back({b.lo, b.hi, b.met, b.unmet_identical, b.not_identical});
    return bins;
}

} // namespace

std::vector<double> beta_values(const McConfig& cfg) {
    validate(cfg);
    // index-scale epsilon so 29 / 0.02 lands on 1450, not 1449
    const int last = static_cast<int>(
        std::floor((cfg.beta_end - cfg.beta_start) / cfg.beta_step + 1e-6));
    std::vector<double> betas(static_cast<std::size_t>(last) + 1);
    for (int j = 0; j <= last; ++j)
        betas[static_cast<std::size_t>(j)] = cfg.beta_start + j * cfg.beta_step;
    return betas;
}

McResult run_experiment(const McConfig& cfg, int threads) {
    const std::vector<double> betas = beta_values(cfg);
    const long nbetas = static_cast<long>(betas.size());
    const long total_slots = static_cast<long>(cfg.base_count) * nbetas;

    if (threads <= 0)
        threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::clamp(threads, 1, cfg.base_count);

    std::vector<TrialSlot> slots(static_cast<std::size_t>(total_slots));
    std::atomic<int> next_base{0};
    std::atomic<bool> failed{false};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        try {
            while (true) {
                const int b = next_base.fetch_add(1);
                if (b >= cfg.base_count || failed.load())
                    break;
                const PCMatrix base = PCMatrix::random_consistent(
                    cfg.n, detail::derive_seed(cfg.master_seed, 0, static_cast<std::uint64_t>(b)));
                for (long j = 0; j < nbetas; ++j) {
                    const long id = b * nbetas + j;
                    slots[static_cast<std::size_t>(id)] = run_trial(
                        base, id, b, betas[static_cast<std::size_t>(j)],
                        detail::derive_seed(cfg.master_seed, static_cast<std::uint64_t>(b) + 1,
                                            static_cast<std::uint64_t>(j)),
                        cfg.clamp);
                }
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failed.exchange(true))
                failure = std::current_exception();
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    McResult result;
    result.config = cfg;
    result.records.reserve(static_cast<std::size_t>(total_slots));
    for (const auto& slot : slots) {
        if (!slot.converged) {
            ++result.no_convergence_count;
            continue;
        }
        result.records.push_back(slot.record);
        if (slot.record.tied)
            ++result.tied_trial_count;
        if (slot.record.order_certified)
            ++result.trials_meeting_condition;
    }
    result.total_trials = static_cast<long>(result.records.size());
    result.fraction_meeting =
        result.total_trials == 0
            ? 0.0
            : static_cast<double>(result.trials_meeting_condition) / result.total_trials;
    result.ki_histogram = bin_records(result.records, cfg.ki_bins, false);
    result.ci_histogram = bin_records(result.records, cfg.ci_bins, true);
    return result;
}

std::string histogram_csv(const McResult& r, HistAxis axis) {
    const Histogram& h = axis == HistAxis::ki ? r.ki_histogram : r.ci_histogram;
    std::string out = "bin_low,bin_high,met,unmet_identical,not_identical\n";
    for (const auto& b : h) {
        out += fmt(b.lo);
        out += ',';
        out += fmt(b.hi);
        out += ',';
        out += std::to_string(b.met);
        out += ',';
        out += std::to_string(b.unmet_identical);
        out += ',';
        out += std::to_string(b.not_identical);
        out += '\n';
    }
    return out;
}

std::string trials_csv(const McResult& r) {
    std::string out =
        "trial,base,beta,ki,ci,min_gap,md_upper,order_certified,top_certified,"
        "order_identical,top_identical,md,tau,rho,tied\n";
    for (const auto& rec : r.records)
        append_row(out, rec);
    return out;
}

std::string result_json(const McResult& r) {
    auto bins_json = [](const BinSpec& b) {
        nlohmann::ordered_json j{{"count", b.count}};
        if (b.lo)
            j["lo"] = *b.lo;
        if (b.hi)
            j["hi"] = *b.hi;
        return j;
    };
    nlohmann::ordered_json cfg{
        {"n", r.config.n},
        {"base_count", r.config.base_count},
        {"beta_start", r.config.beta_start},
        {"beta_step", r.config.beta_step},
        {"beta_end", r.config.beta_end},
        {"master_seed", r.config.master_seed},
        {"clamp", nullptr},
        {"ki_bins", bins_json(r.config.ki_bins)},
        {"ci_bins", bins_json(r.config.ci_bins)},
    };
    if (r.config.clamp)
        cfg["clamp"] = {{"lo", r.config.clamp->lo()}, {"hi", r.config.clamp->hi()}};

    nlohmann::ordered_json j{
        {"config", cfg},
        {"total_trials", r.total_trials},
        {"trials_meeting_condition", r.trials_meeting_condition},
        {"fraction_meeting", r.fraction_meeting},
        {"tied_trial_count", r.tied_trial_count},
        {"no_convergence_count", r.no_convergence_count},
        {"ki_histogram", histogram_json(r.ki_histogram)},
        {"ci_histogram", histogram_json(r.ci_histogram)},
    };
    return j.dump(2) + "\n";
}

} // namespace pcrank
