#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "colearn/belief.hpp"
#include "colearn/errors.hpp"

#include <array>
#include <random>

using namespace colearn;

namespace {

constexpr TruthValue F = TruthValue::False;
constexpr TruthValue U = TruthValue::Unknown;
constexpr TruthValue T = TruthValue::True;
constexpr std::array<TruthValue, 3> kAll = {F, U, T};

Belief b(const char* text) { return Belief::parse(text); }

Belief random_belief(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 2);
    std::vector<TruthValue> values(n);
    for (auto& v : values) v = kAll[static_cast<std::size_t>(pick(rng))];
    return Belief(std::move(values));
}

} // namespace

TEST_CASE("truth values map onto 0, 1/2, 1") {
    CHECK(numeric(F) == 0.0);
    CHECK(numeric(U) == 0.5);
    CHECK(numeric(T) == 1.0);
    CHECK(negate(F) == T);
    CHECK(negate(T) == F);
    CHECK(negate(U) == U);
}

TEST_CASE("fusion operator matches the published table cell by cell") {
    // rows: B(p_i) in {0, 1/2, 1}; columns: B'(p_i) in {0, 1/2, 1}
    const TruthValue expected[3][3] = {
        {F, F, U},
        {F, U, T},
        {U, T, T},
    };
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) CHECK(fuse_value(kAll[r], kAll[c]) == expected[r][c]);

    CHECK(fuse_value(F, F) == F);
    CHECK(fuse_value(U, T) == T);
    CHECK(fuse_value(T, F) == U);
}

TEST_CASE("fusion operator laws over all nine pairs") {
    for (TruthValue a : kAll) {
        CHECK(fuse_value(a, a) == a);
        CHECK(fuse_value(a, U) == a);
        CHECK(fuse_value(U, a) == a);
        for (TruthValue c : kAll) {
            CHECK(fuse_value(a, c) == fuse_value(c, a));
            if (is_certain(a) && is_certain(c) && a != c) CHECK(fuse_value(a, c) == U);
        }
    }
}

TEST_CASE("fuse_beliefs") {
    CHECK(fuse_beliefs(b("01"), b("uu")) == b("01"));
    CHECK(fuse_beliefs(b("1"), b("0")) == b("u"));
    CHECK(fuse_beliefs(b("0u1"), b("0u1")) == b("0u1"));
    CHECK_THROWS_AS(fuse_beliefs(b("01"), b("011")), DimensionError);
}

TEST_CASE("update_with_evidence") {
    CHECK(update_with_evidence(b("uu"), b("1u")) == b("1u"));
    CHECK(update_with_evidence(b("01"), b("1u")) == b("u1"));
    CHECK(update_with_evidence(b("10"), b("1u")) == b("10"));

    SUBCASE("malformed evidence is a contract violation") {
        CHECK_THROWS_AS(update_with_evidence(b("uu"), b("11")), ContractViolation);
        CHECK_THROWS_AS(update_with_evidence(b("uu"), b("uu")), ContractViolation);
    }
    SUBCASE("evidence of the wrong length") {
        CHECK_THROWS_AS(update_with_evidence(b("uu"), b("1")), DimensionError);
    }
}

TEST_CASE("evidence locality and certainty growth hold for random beliefs") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 500; ++round) {
        const std::size_t n = 1 + rng() % 40;
        const Belief belief = random_belief(n, rng);
        const std::size_t i = rng() % n;
        Belief evidence = Belief::all_unknown(n);
        evidence[i] = (rng() & 1) ? T : F;

        const Belief updated = update_with_evidence(belief, evidence);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) CHECK(updated[j] == belief[j]);
        }
        if (belief[i] == U) CHECK(updated.certainty() == belief.certainty() + 1);
        if (belief[i] == evidence[i]) CHECK(updated == belief);
    }
}

TEST_CASE("uncertain_indices") {
    CHECK(uncertain_indices(b("u1u")) == std::vector<PropositionIndex>{0, 2});
    CHECK(uncertain_indices(b("10")).empty());
    const auto all = uncertain_indices(Belief::all_unknown(126));
    REQUIRE(all.size() == 126);
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i] == i);
}

TEST_CASE("belief_error") {
    const GroundTruth truth({false, true});
    CHECK(belief_error(truth.as_belief(), truth) == 0.0);
    CHECK(belief_error(Belief::all_unknown(2), truth) == 0.5);
    CHECK(belief_error(b("1u"), truth) == doctest::Approx(0.75));
    CHECK_THROWS_AS(belief_error(b("1"), truth), DimensionError);

    SUBCASE("bounded, and zero only on an exact match") {
        std::mt19937_64 rng(11);
        for (int round = 0; round < 300; ++round) {
            const std::size_t n = 1 + rng() % 30;
            std::vector<bool> bits(n);
            for (std::size_t i = 0; i < n; ++i) bits[i] = rng() & 1;
            const GroundTruth s(bits);
            const Belief belief = random_belief(n, rng);
            const double e = belief_error(belief, s);
            CHECK(e >= 0.0);
            CHECK(e <= 1.0);
            CHECK((e == 0.0) == (belief == s.as_belief()));
        }
    }
}

TEST_CASE("compact string form") {
    const Belief belief = b("0u1u");
    CHECK(belief.to_string() == "0u1u");
    CHECK(belief.certainty() == 2);
    CHECK_FALSE(belief.fully_certain());
    CHECK(b("01").fully_certain());
    CHECK_THROWS(Belief::parse("0x1"));
}
