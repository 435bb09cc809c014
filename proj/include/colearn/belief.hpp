#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace colearn {

using PropositionIndex = std::size_t;

/// Three-valued truth assignment. Numeric interpretation {0, 1/2, 1} is
/// applied only when measuring error; the algebra itself stays discrete.
enum class TruthValue : std::uint8_t { False = 0, Unknown = 1, True = 2 };

constexpr double numeric(TruthValue v) noexcept {
    return static_cast<double>(static_cast<std::uint8_t>(v)) * 0.5;
}

constexpr bool is_certain(TruthValue v) noexcept { return v != TruthValue::Unknown; }

constexpr TruthValue negate(TruthValue v) noexcept {
    switch (v) {
    case TruthValue::False: return TruthValue::True;
    case TruthValue::True: return TruthValue::False;
    default: return TruthValue::Unknown;
    }
}

/// The fusion operator. Certainty wins over uncertainty, agreement is kept,
/// and a direct disagreement collapses to Unknown.
constexpr TruthValue fuse_value(TruthValue a, TruthValue b) noexcept {
    constexpr TruthValue F = TruthValue::False;
    constexpr TruthValue U = TruthValue::Unknown;
    constexpr TruthValue T = TruthValue::True;
    constexpr TruthValue table[3][3] = {
        {F, F, U},
        {F, U, T},
        {U, T, T},
    };
    return table[static_cast<std::uint8_t>(a)][static_cast<std::uint8_t>(b)];
}

char to_char(TruthValue v) noexcept;

/// An agent's world model: one truth value per proposition.
class Belief {
public:
    Belief() = default;
    explicit Belief(std::vector<TruthValue> values) : values_(std::move(values)) {}

    static Belief all_unknown(std::size_t n) { return Belief(std::vector<TruthValue>(n, TruthValue::Unknown)); }

    /// Parses the compact "0u1" form used by logs and golden tests.
    static Belief parse(std::string_view text);

    std::size_t size() const noexcept { return values_.size(); }
    TruthValue operator[](PropositionIndex i) const { return values_[i]; }
    TruthValue& operator[](PropositionIndex i) { return values_[i]; }
    TruthValue at(PropositionIndex i) const { return values_.at(i); }

    const std::vector<TruthValue>& values() const noexcept { return values_; }

    /// Number of non-Unknown entries.
    std::size_t certainty() const noexcept;
    bool fully_certain() const noexcept { return certainty() == size(); }

    std::string to_string() const;

    friend bool operator==(const Belief&, const Belief&) = default;

private:
    std::vector<TruthValue> values_;
};

/// Hidden state of the world: every proposition is True or False.
class GroundTruth {
public:
    GroundTruth() = default;
    explicit GroundTruth(std::vector<bool> values) : values_(std::move(values)) {}

    std::size_t size() const noexcept { return values_.size(); }
    TruthValue operator[](PropositionIndex i) const {
        return values_[i] ? TruthValue::True : TruthValue::False;
    }
    const std::vector<bool>& values() const noexcept { return values_; }

    /// The same assignment viewed as a (fully certain) belief.
    Belief as_belief() const;

    friend bool operator==(const GroundTruth&, const GroundTruth&) = default;

private:
    std::vector<bool> values_;
};

/// Element-wise fusion. Throws DimensionError on a length mismatch.
Belief fuse_beliefs(const Belief& lhs, const Belief& rhs);

/// True iff `evidence` is Unknown everywhere except exactly one index.
bool is_evidence(const Belief& evidence) noexcept;

/// Evidential updating. `evidence` must carry exactly one certain entry,
/// otherwise ContractViolation is thrown; the update itself is plain fusion.
Belief update_with_evidence(const Belief& belief, const Belief& evidence);

std::vector<PropositionIndex> uncertain_indices(const Belief& belief);

/// Normalised L1 distance between a belief and the ground truth, in [0, 1].
double belief_error(const Belief& belief, const GroundTruth& truth);

} // namespace colearn
