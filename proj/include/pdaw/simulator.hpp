#pragma once

// Placement, XOR delivery and one-shot decoding of a PDA scheme on concrete
// byte payloads. Users, rows and files are 0-based in memory; reports and
// JSON output use 1-based numbering.

#include "pdaw/core/pda_grid.hpp"
#include "pdaw/rational.hpp"
#include "pdaw/row_set.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pdaw {

inline constexpr std::size_t kDefaultPacketLen = 64;

/// N files of F packets each, packet_len bytes per packet, from a seeded
/// generator (same seed, same bytes).
class FileLibrary {
public:
    FileLibrary() = default;
    static FileLibrary generate(std::size_t files, std::size_t rows, std::size_t packet_len, std::uint64_t seed);

    std::size_t files() const noexcept { return files_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t packet_len() const noexcept { return packet_len_; }

    std::span<const std::byte> packet(std::size_t file, std::size_t row) const;

private:
    std::size_t files_ = 0;
    std::size_t rows_ = 0;
    std::size_t packet_len_ = 0;
    std::vector<std::byte> data_;
};

struct DemandVector {
    std::vector<std::size_t> files;  // d_k, 0-based

    /// Parses "1,2,3" (1-based file numbers).
    static DemandVector parse(const std::string& text);
    std::vector<int> one_based() const;
};

/// Every demand vector over N files for K users, in odometer order (user 1
/// slowest). Throws CapacityError when N^K exceeds `limit`.
std::vector<DemandVector> all_demands(std::size_t files, std::size_t users, std::uint64_t limit = 10'000'000);

/// `count` demand vectors drawn uniformly with a seeded generator.
std::vector<DemandVector> sample_demands(std::size_t files, std::size_t users, std::size_t count, std::uint64_t seed);

/// What user k holds after placement: W_{n,j} for every file n and every
/// row j starred in column k.
class UserCache {
public:
    UserCache(std::size_t user, RowSet rows, const FileLibrary& lib);

    std::size_t user() const noexcept { return user_; }
    const RowSet& rows() const noexcept { return rows_; }
    std::size_t packet_count() const noexcept { return rows_.count() * files_; }

    /// The cached packet, or nothing if (file, row) is not in this cache.
    std::optional<std::span<const std::byte>> lookup(std::size_t file, std::size_t row) const;

private:
    std::size_t user_;
    RowSet rows_;
    std::size_t files_;
    std::size_t packet_len_;
    std::vector<std::size_t> slot_;  // row -> position among cached rows
    std::vector<std::byte> data_;    // [file][cached row][byte]
};

std::vector<UserCache> place(const PdaGrid& grid, const FileLibrary& lib);

struct SignalTerm {
    std::size_t user = 0;
    std::size_t row = 0;
    friend bool operator==(const SignalTerm&, const SignalTerm&) = default;
};

struct Signal {
    Symbol symbol = 0;
    std::vector<SignalTerm> terms;  // sorted by user
    std::vector<std::byte> payload;
};

struct DeliveryTranscript {
    std::vector<Signal> signals;  // signals[s-1] carries symbol s
    DemandVector demand;
    std::size_t rows = 0;

    Rational load() const
    {
        return Rational(static_cast<long long>(signals.size()), static_cast<long long>(rows));
    }
};

/// One signal per symbol: the XOR of W_{d_k, j} over the cells (j, k) that
/// hold it. Throws ParameterError for a demand of the wrong length or range.
DeliveryTranscript deliver(const PdaGrid& grid, const FileLibrary& lib, const DemandVector& d);

struct DecodeStep {
    std::size_t row = 0;
    Symbol signal = 0;
};

struct DecodeFailure {
    Symbol signal = 0;  // 0 when no signal carries the needed packet
    std::size_t user = 0;
    std::size_t row = 0;  // the packet that could not be obtained
    std::string reason;
};

struct DecodeResult {
    /// True iff every user rebuilt its requested file byte for byte.
    bool verified = false;
    std::vector<std::vector<std::byte>> files;  // per user, F * packet_len bytes
    std::vector<std::vector<DecodeStep>> log;   // per user, one step per uncached row
    std::vector<DecodeFailure> failures;
};

/// Each user finds, for every row it lacks, the signal naming (user, row) and
/// cancels the other terms with packets from its own cache.
DecodeResult decode(const PdaGrid& grid, const DeliveryTranscript& transcript, const std::vector<UserCache>& caches,
                    const FileLibrary& lib);

/// Largest signals/F over the demands. PDA delivery always sends S signals,
/// so the value is S/F for every demand; std::logic_error otherwise.
Rational measure_rate(const PdaGrid& grid, const FileLibrary& lib, const std::vector<DemandVector>& demands);

struct SweepSummary {
    std::size_t demands = 0;
    std::size_t decoded = 0;  // demands where every user verified
    Rational rate;
    std::optional<DecodeFailure> first_failure;
};

/// place + deliver + decode for every demand; `threads` workers (0 = auto).
SweepSummary simulate_sweep(const PdaGrid& grid, const FileLibrary& lib, const std::vector<DemandVector>& demands,
                            unsigned threads = 1);

} // namespace pdaw
