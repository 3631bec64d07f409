#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "permutex/chaotic_keygen.hpp"
#include "permutex/errors.hpp"

using permutex::ChaosParams;
using permutex::ChaoticSequence;
using permutex::PermutationKey;

namespace {

bool is_permutation(const std::vector<std::uint32_t>& key) {
    std::vector<bool> seen(key.size(), false);
    for (std::uint32_t v : key) {
        if (v >= key.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

ChaoticSequence seq_of(std::vector<double> values) {
    ChaoticSequence s;
    s.values = std::move(values);
    return s;
}

} // namespace

TEST_CASE("parameter validation covers every field") {
    ChaosParams p;
    p.n = 4;
    CHECK_NOTHROW(p.validate());

    p.r = 0.0;
    CHECK_THROWS_AS(p.validate(), permutex::ParamError);
    p.r = 4.0000001;
    CHECK_THROWS_AS(p.validate(), permutex::ParamError);
    p.r = 4.0;
    CHECK_NOTHROW(p.validate());

    p.x0 = 0.0;
    CHECK_THROWS_AS(p.validate(), permutex::ParamError);
    p.x0 = 1.0;
    CHECK_THROWS_AS(p.validate(), permutex::ParamError);
    p.x0 = 0.41;

    p.scale = 0;
    CHECK_THROWS_AS(p.validate(), permutex::ParamError);
    p.scale = 1000;

    p.n = 0;
    CHECK_THROWS_AS(p.validate(), permutex::ParamError);
}

TEST_CASE("map step: zero is a fixed point") {
    CHECK(permutex::logistic_sine_step(0.0, 3.5) == 0.0);
    CHECK(permutex::logistic_sine_step(0.0, 4.0) == 0.0);
}

TEST_CASE("map step: r=4 drops the sine term") {
    CHECK(permutex::logistic_sine_step(0.3, 4.0) == doctest::Approx(0.84).epsilon(1e-12));
}

TEST_CASE("map step: r=2 at x=0.5 wraps to zero") {
    CHECK(permutex::logistic_sine_step(0.5, 2.0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("map step rejects r outside (0,4]") {
    CHECK_THROWS_AS(permutex::logistic_sine_step(0.5, 0.0), permutex::ParamError);
    CHECK_THROWS_AS(permutex::logistic_sine_step(0.5, -1.0), permutex::ParamError);
    CHECK_THROWS_AS(permutex::logistic_sine_step(0.5, 4.5), permutex::ParamError);
}

TEST_CASE("two-step hand iteration for n=1") {
    ChaosParams p;
    p.r = 4.0;
    p.x0 = 0.3;
    p.n = 1;
    const ChaoticSequence seq = permutex::generate_sequence(p);
    REQUIRE(seq.values.size() == 1);
    CHECK(seq.values[0] == doctest::Approx(0.5376).epsilon(1e-12));
}

TEST_CASE("sequence length and range match the contract") {
    ChaosParams p;
    p.n = 300;
    const ChaoticSequence seq = permutex::generate_sequence(p);
    CHECK(seq.values.size() == 300);
    for (double v : seq.values) {
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("identical params give identical sequences") {
    ChaosParams p;
    p.r = 3.7;
    p.x0 = 0.2;
    p.n = 64;
    const ChaoticSequence a = permutex::generate_sequence(p);
    const ChaoticSequence b = permutex::generate_sequence(p);
    CHECK(a.values == b.values);
}

TEST_CASE("r=4 trajectory equals the pure logistic map bit for bit") {
    double x_hybrid = 0.41;
    double x_logistic = 0.41;
    for (int i = 0; i < 200; ++i) {
        x_hybrid = permutex::logistic_sine_step(x_hybrid, 4.0);
        double v = 4.0 * x_logistic * (1.0 - x_logistic);
        v = std::fmod(v, 1.0);
        if (v < 0.0) v += 1.0;
        x_logistic = v;
        CHECK(x_hybrid == x_logistic);
    }
}

TEST_CASE("hand-derived key for a 3-value sequence") {
    const PermutationKey key = permutex::derive_permutation_key(seq_of({0.2, 0.7, 0.5}), 1000);
    CHECK(key.key == std::vector<std::uint32_t>{0, 2, 1});
}

TEST_CASE("all-equal quantized values give the identity key") {
    const PermutationKey key =
        permutex::derive_permutation_key(seq_of({0.31, 0.31, 0.31, 0.31}), 100);
    CHECK(key.key == std::vector<std::uint32_t>{0, 1, 2, 3});
}

TEST_CASE("rounding is half away from zero") {
    // 0.25*2 = 0.5 exactly and 0.75*2 = 1.5 exactly, both must round up.
    const PermutationKey key = permutex::derive_permutation_key(seq_of({0.25, 0.75, 0.1}), 2);
    CHECK(key.key == oracles::key_reference({0.25, 0.75, 0.1}, 2));
    CHECK(key.key == std::vector<std::uint32_t>{1, 2, 0});
}

TEST_CASE("keys match the selection-sort reference") {
    std::mt19937_64 gen(31);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> s(40);
        for (double& v : s) {
            v = static_cast<double>(gen() % 10000) / 10000.0;
        }
        const PermutationKey key = permutex::derive_permutation_key(seq_of(s), 100);
        CHECK(key.key == oracles::key_reference(s, 100));
    }
}

TEST_CASE("keys are permutations across random parameter draws") {
    std::mt19937_64 gen(32);
    for (int trial = 0; trial < 20; ++trial) {
        ChaosParams p;
        p.r = 0.5 + 3.5 * (static_cast<double>(gen() % 10000) / 10000.0);
        p.x0 = 0.001 + 0.998 * (static_cast<double>(gen() % 10000) / 10000.0);
        p.n = 1 + static_cast<std::uint32_t>(gen() % 10000);
        const PermutationKey key =
            permutex::derive_permutation_key(permutex::generate_sequence(p), p.scale);
        CHECK(key.key.size() == p.n);
        CHECK(is_permutation(key.key));
    }
}

TEST_CASE("empty sequences are rejected") {
    CHECK_THROWS_AS(permutex::derive_permutation_key(seq_of({}), 1000), permutex::ParamError);
}

TEST_CASE("collision statistic counts quantization ties") {
    CHECK(permutex::quantization_collisions(seq_of({0.25, 0.25, 0.75}), 2) == 1);
    CHECK(permutex::quantization_collisions(seq_of({0.1, 0.5, 0.9}), 1000) == 0);
}

TEST_CASE("nearby seeds diverge almost everywhere") {
    ChaosParams a;
    a.n = 65536;
    ChaosParams b = a;
    b.x0 = a.x0 + 1e-10;
    const PermutationKey ka = permutex::derive_permutation_key(permutex::generate_sequence(a),
                                                               a.scale);
    const PermutationKey kb = permutex::derive_permutation_key(permutex::generate_sequence(b),
                                                               b.scale);
    std::size_t agree = 0;
    for (std::size_t i = 0; i < ka.key.size(); ++i) {
        if (ka.key[i] == kb.key[i]) ++agree;
    }
    CHECK(agree < ka.key.size() / 100);
}
