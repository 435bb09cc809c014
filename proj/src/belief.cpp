#include "colearn/belief.hpp"

#include "colearn/errors.hpp"

#include <algorithm>
#include <cmath>

namespace colearn {

char to_char(TruthValue v) noexcept {
    switch (v) {
    case TruthValue::False: return '0';
    case TruthValue::True: return '1';
    default: return 'u';
    }
}

Belief Belief::parse(std::string_view text) {
    std::vector<TruthValue> values;
    values.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '0': values.push_back(TruthValue::False); break;
        case '1': values.push_back(TruthValue::True); break;
        case 'u': values.push_back(TruthValue::Unknown); break;
        default: throw std::invalid_argument(std::string("invalid belief character '") + c + "'");
        }
    }
    return Belief(std::move(values));
}

std::size_t Belief::certainty() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(values_.begin(), values_.end(), [](TruthValue v) { return is_certain(v); }));
}

std::string Belief::to_string() const {
    std::string out;
    out.reserve(values_.size());
    for (TruthValue v : values_) out.push_back(to_char(v));
    return out;
}

Belief GroundTruth::as_belief() const {
    std::vector<TruthValue> values;
    values.reserve(values_.size());
    for (bool b : values_) values.push_back(b ? TruthValue::True : TruthValue::False);
    return Belief(std::move(values));
}

Belief fuse_beliefs(const Belief& lhs, const Belief& rhs) {
    if (lhs.size() != rhs.size()) {
        throw DimensionError("fuse_beliefs: lengths " + std::to_string(lhs.size()) + " and " +
                             std::to_string(rhs.size()) + " differ");
    }
    std::vector<TruthValue> out(lhs.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = fuse_value(lhs[i], rhs[i]);
    return Belief(std::move(out));
}

bool is_evidence(const Belief& evidence) noexcept {
    return evidence.certainty() == 1;
}

Belief update_with_evidence(const Belief& belief, const Belief& evidence) {
    if (!is_evidence(evidence)) {
        throw ContractViolation("update_with_evidence: evidence must have exactly one certain entry, found " +
                                std::to_string(evidence.certainty()));
    }
    return fuse_beliefs(belief, evidence);
}

std::vector<PropositionIndex> uncertain_indices(const Belief& belief) {
    std::vector<PropositionIndex> out;
    for (std::size_t i = 0; i < belief.size(); ++i) {
        if (belief[i] == TruthValue::Unknown) out.push_back(i);
    }
    return out;
}

double belief_error(const Belief& belief, const GroundTruth& truth) {
    if (belief.size() != truth.size()) {
        throw DimensionError("belief_error: belief length " + std::to_string(belief.size()) +
                             " vs ground truth length " + std::to_string(truth.size()));
    }
    if (belief.size() == 0) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < belief.size(); ++i) {
        sum += std::abs(numeric(belief[i]) - numeric(truth[i]));
    }
    return sum / static_cast<double>(belief.size());
}

} // namespace colearn
