#pragma once

#include <cstdint>
#include <string>

namespace forumlens {

/// Seeded synthetic forum generator: desk-scale stand-ins for a real
/// course dump. Cohort arrivals spread across the weeks, repliers attach
/// preferentially to busy threads and posts, and comment fan-out
/// occasionally exceeds the usual sub-thread threshold. Output is
/// byte-deterministic in the seed.
struct SynthConfig {
    std::uint64_t seed = 1;
    int n_students = 100;
    int n_threads = 50;
    int weeks = 7;
};

struct SynthOutput {
    std::string dataset_json;
    std::string schedule_json;
};

SynthOutput synth_fixture(const SynthConfig& cfg);

}  // namespace forumlens
