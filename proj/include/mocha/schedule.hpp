#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "mocha/errors.hpp"
#include "mocha/hypervolume.hpp"
#include "mocha/metrics.hpp"
#include "mocha/scalarize.hpp"

namespace mocha {

// Exponential decay of the exploration threshold with consumed budget.
// tau_end = 0 never reaches zero exactly, so mode_epsilon makes the paper's
// "tau ~ 0" switch operational: at the defaults it lands near b = 0.46 B.
struct AnnealSchedule {
    double tau0 = 0.1;
    double tau_end = 0.0;
    double lambda = 10.0;
    double mode_epsilon = 1e-3;

    void validate() const {
        if (!(tau0 >= tau_end) || !(tau_end >= 0.0))
            throw contract_error("anneal: need tau0 >= tau_end >= 0");
        if (!(lambda > 0.0)) throw contract_error("anneal: need lambda > 0");
    }
};

inline double tau(const AnnealSchedule& s, long consumed, long total) {
    if (total <= 0) throw contract_error("tau: total budget must be > 0");
    if (consumed < 0 || consumed > total) throw contract_error("tau: need 0 <= b <= B");
    const double frac = static_cast<double>(consumed) / static_cast<double>(total);
    return s.tau_end + (s.tau0 - s.tau_end) * std::exp(-s.lambda * frac);
}

// Capacity-bounded queue of not-yet-validated candidates, ranked by the
// hypervolume contribution they had when inserted. Contributions are not
// rescored as the pool grows; staleness is bounded by the capacity.
template <class Payload>
class SpeculativeBuffer {
public:
    struct Entry {
        double stored_hvc;
        MetricVector scores;
        Payload payload;
    };

    explicit SpeculativeBuffer(std::size_t capacity = 5) : capacity_(capacity) {}

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    std::size_t capacity() const { return capacity_; }
    const std::vector<Entry>& entries() const { return entries_; }

    // Insert in rank order (descending stored HVC, ties keep older entries
    // ahead). When over capacity the lowest-ranked entry is evicted and
    // returned; that may be the entry just inserted.
    std::optional<Entry> insert(Payload payload, MetricVector scores, double stored_hvc) {
        if (!(stored_hvc > 0.0))
            throw contract_error("buffer_insert: stored hvc must be > 0");
        auto pos = std::find_if(entries_.begin(), entries_.end(),
                                [&](const Entry& e) { return e.stored_hvc < stored_hvc; });
        entries_.insert(pos, Entry{stored_hvc, std::move(scores), std::move(payload)});
        if (entries_.size() > capacity_) {
            Entry evicted = std::move(entries_.back());
            entries_.pop_back();
            return evicted;
        }
        return std::nullopt;
    }

    Entry pop_best() {
        if (entries_.empty()) throw contract_error("buffer: pop_best on empty buffer");
        Entry best = std::move(entries_.front());
        entries_.erase(entries_.begin());
        return best;
    }

    std::vector<MetricVector> entry_scores() const {
        std::vector<MetricVector> out;
        out.reserve(entries_.size());
        for (const auto& e : entries_) out.push_back(e.scores);
        return out;
    }

    void clear() { entries_.clear(); }

private:
    std::size_t capacity_;
    std::vector<Entry> entries_;
};

enum class Decision {
    CommitFromBuffer,
    CommitCandidate,
    Buffered,
    Reject,
    MutatorFailure,  // engine-level outcome; never produced by decide()
};

inline const char* to_string(Decision d) {
    switch (d) {
        case Decision::CommitFromBuffer: return "committed_from_buffer";
        case Decision::CommitCandidate: return "committed";
        case Decision::Buffered: return "buffered";
        case Decision::Reject: return "rejected";
        case Decision::MutatorFailure: return "mutator_failure";
    }
    return "unknown";
}

template <class Payload>
struct DecideResult {
    Decision decision = Decision::Reject;
    // Present iff decision == CommitFromBuffer: the popped best entry.
    std::optional<typename SpeculativeBuffer<Payload>::Entry> popped;
    double hvc_vs_pool = 0.0;  // exploration only; 0 in exploitation
};

// Two-mode acceptance. Exploration (mode_tau above the epsilon): the
// candidate enters the buffer when it adds volume over pool and buffer
// together, and a commit pops the buffer's best entry once the candidate's
// contribution over the pool alone clears mode_tau. The candidate is
// inserted before the pop, so it may be the entry popped. Exploitation:
// strict Chebyshev improvement over the parent on the same minibatch; the
// buffer is never consulted.
template <class Payload>
DecideResult<Payload> decide(const AnnealSchedule& schedule, double mode_tau,
                             const Payload& candidate, const MetricVector& candidate_scores,
                             const std::vector<MetricVector>& pool_scores,
                             SpeculativeBuffer<Payload>& buffer, const WeightVector& w,
                             double parent_score) {
    DecideResult<Payload> result;
    if (mode_tau > schedule.mode_epsilon) {
        std::vector<MetricVector> pool_and_buffer = pool_scores;
        for (const auto& e : buffer.entries()) pool_and_buffer.push_back(e.scores);
        const double hvc_insert = hvc(candidate_scores, pool_and_buffer);
        bool candidate_resident = false;
        if (hvc_insert > 0.0) {
            const bool stays = buffer.size() < buffer.capacity() ||
                               hvc_insert > buffer.entries().back().stored_hvc;
            buffer.insert(candidate, candidate_scores, hvc_insert);
            candidate_resident = stays;
        }
        result.hvc_vs_pool = hvc(candidate_scores, pool_scores);
        if (result.hvc_vs_pool > mode_tau) {
            result.decision = Decision::CommitFromBuffer;
            result.popped = buffer.pop_best();
            return result;
        }
        result.decision = candidate_resident ? Decision::Buffered : Decision::Reject;
        return result;
    }
    const double candidate_score = chebyshev(candidate_scores, w);
    result.decision =
        candidate_score < parent_score ? Decision::CommitCandidate : Decision::Reject;
    return result;
}

}  // namespace mocha
