#include "pdaw/simulator.hpp"

#include "pdaw/error.hpp"
#include "pdaw/simd/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pdaw {

FileLibrary FileLibrary::generate(std::size_t files, std::size_t rows, std::size_t packet_len, std::uint64_t seed)
{
    if (files == 0 || rows == 0 || packet_len == 0)
        throw ParameterError("library needs N, F and packet_len all positive");
    FileLibrary lib;
    lib.files_ = files;
    lib.rows_ = rows;
    lib.packet_len_ = packet_len;
    lib.data_.resize(files * rows * packet_len);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < lib.data_.size(); i += 8) {
        std::uint64_t word = rng();
        for (std::size_t b = 0; b < 8 && i + b < lib.data_.size(); ++b, word >>= 8)
            lib.data_[i + b] = static_cast<std::byte>(word & 0xFF);
    }
    return lib;
}

std::span<const std::byte> FileLibrary::packet(std::size_t file, std::size_t row) const
{
    return {data_.data() + (file * rows_ + row) * packet_len_, packet_len_};
}

DemandVector DemandVector::parse(const std::string& text)
{
    DemandVector d;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != item.size() || v < 1)
            throw ParameterError("demand entries are positive file numbers, got '" + item + "'");
        d.files.push_back(static_cast<std::size_t>(v - 1));
    }
    if (d.files.empty())
        throw ParameterError("empty demand vector");
    return d;
}

std::vector<int> DemandVector::one_based() const
{
    std::vector<int> out;
    for (auto f : files)
        out.push_back(static_cast<int>(f) + 1);
    return out;
}

std::vector<DemandVector> all_demands(std::size_t files, std::size_t users, std::uint64_t limit)
{
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < users; ++k) {
        if (total > limit / std::max<std::size_t>(files, 1))
            throw CapacityError("N^K demand vectors exceed the sweep limit");
        total *= files;
    }
    std::vector<DemandVector> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<std::size_t> d(users, 0);
    for (std::uint64_t i = 0; i < total; ++i) {
        out.push_back({d});
        for (std::size_t k = users; k-- > 0;) {
            if (++d[k] < files)
                break;
            d[k] = 0;
        }
    }
    return out;
}

std::vector<DemandVector> sample_demands(std::size_t files, std::size_t users, std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, files - 1);
    std::vector<DemandVector> out(count);
    for (auto& d : out) {
        d.files.resize(users);
        for (auto& f : d.files)
            f = pick(rng);
    }
    return out;
}

UserCache::UserCache(std::size_t user, RowSet rows, const FileLibrary& lib)
    : user_(user), rows_(std::move(rows)), files_(lib.files()), packet_len_(lib.packet_len()),
      slot_(lib.rows(), lib.rows())
{
    const auto members = rows_.members();
    for (std::size_t i = 0; i < members.size(); ++i)
        slot_[members[i]] = i;
    data_.reserve(files_ * members.size() * packet_len_);
    for (std::size_t n = 0; n < files_; ++n)
        for (auto j : members) {
            const auto p = lib.packet(n, j);
            data_.insert(data_.end(), p.begin(), p.end());
        }
}

std::optional<std::span<const std::byte>> UserCache::lookup(std::size_t file, std::size_t row) const
{
    if (file >= files_ || row >= slot_.size() || slot_[row] == slot_.size())
        return std::nullopt;
    const std::size_t cached = rows_.count();
    return std::span<const std::byte>(data_.data() + (file * cached + slot_[row]) * packet_len_, packet_len_);
}

std::vector<UserCache> place(const PdaGrid& grid, const FileLibrary& lib)
{
    if (grid.rows() != lib.rows())
        throw ParameterError("library has F=" + std::to_string(lib.rows()) + " packets per file, grid has " +
                             std::to_string(grid.rows()) + " rows");
    std::vector<UserCache> caches;
    caches.reserve(grid.cols());
    for (std::size_t k = 0; k < grid.cols(); ++k) {
        RowSet rows(grid.rows());
        for (std::size_t j = 0; j < grid.rows(); ++j)
            if (grid.is_star(j, k))
                rows.set(j);
        caches.emplace_back(k, std::move(rows), lib);
    }
    return caches;
}

DeliveryTranscript deliver(const PdaGrid& grid, const FileLibrary& lib, const DemandVector& d)
{
    if (d.files.size() != grid.cols())
        throw ParameterError("demand has " + std::to_string(d.files.size()) + " entries for " +
                             std::to_string(grid.cols()) + " users");
    for (auto f : d.files)
        if (f >= lib.files())
            throw ParameterError("demand names file " + std::to_string(f + 1) + " but the library has " +
                                 std::to_string(lib.files()));
    if (grid.rows() != lib.rows())
        throw ParameterError("library and grid disagree on F");

    DeliveryTranscript t;
    t.demand = d;
    t.rows = grid.rows();
    const auto S = static_cast<std::size_t>(grid.max_symbol());
    t.signals.resize(S);
    for (std::size_t s = 0; s < S; ++s) {
        t.signals[s].symbol = static_cast<Symbol>(s + 1);
        t.signals[s].payload.assign(lib.packet_len(), std::byte{0});
    }
    // Column-major scan keeps each signal's terms sorted by user.
    for (std::size_t k = 0; k < grid.cols(); ++k)
        for (std::size_t j = 0; j < grid.rows(); ++j) {
            const Symbol s = grid.at(j, k);
            if (s == kStar)
                continue;
            auto& sig = t.signals[static_cast<std::size_t>(s - 1)];
            sig.terms.push_back({k, j});
            simd::xor_bytes(sig.payload, lib.packet(d.files[k], j));
        }
    return t;
}

DecodeResult decode(const PdaGrid& grid, const DeliveryTranscript& transcript, const std::vector<UserCache>& caches,
                    const FileLibrary& lib)
{
    const std::size_t K = grid.cols(), F = grid.rows(), len = lib.packet_len();
    const auto& d = transcript.demand.files;
    if (caches.size() != K || d.size() != K)
        throw ParameterError("decode needs one cache and one demand per user");

    // (user, row) -> index of the signal naming it.
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> where(K * F, kNone);
    for (std::size_t i = 0; i < transcript.signals.size(); ++i)
        for (const auto& term : transcript.signals[i].terms)
            where[term.user * F + term.row] = i;

    DecodeResult out;
    out.files.assign(K, std::vector<std::byte>(F * len));
    out.log.resize(K);
    std::vector<std::byte> work(len);
    for (std::size_t k = 0; k < K; ++k) {
        auto& file = out.files[k];
        for (std::size_t j = 0; j < F; ++j) {
            std::byte* dst = file.data() + j * len;
            if (auto cached = caches[k].lookup(d[k], j)) {
                std::copy(cached->begin(), cached->end(), dst);
                continue;
            }
            const std::size_t idx = where[k * F + j];
            if (idx == kNone) {
                out.failures.push_back({0, k, j, "no signal carries this packet"});
                continue;
            }
            const Signal& sig = transcript.signals[idx];
            work.assign(sig.payload.begin(), sig.payload.end());
            bool ok = true;
            for (const auto& term : sig.terms) {
                if (term.user == k && term.row == j)
                    continue;
                auto other = caches[k].lookup(d[term.user], term.row);
                if (!other) {
                    out.failures.push_back({sig.symbol, k, term.row,
                                            "term of user " + std::to_string(term.user + 1) + " is not cached"});
                    ok = false;
                    break;
                }
                simd::xor_bytes(work, *other);
            }
            if (!ok)
                continue;
            std::copy(work.begin(), work.end(), dst);
            out.log[k].push_back({j, sig.symbol});
        }
    }
    out.verified = out.failures.empty();
    for (std::size_t k = 0; k < K && out.verified; ++k)
        for (std::size_t j = 0; j < F && out.verified; ++j) {
            const auto want = lib.packet(d[k], j);
            out.verified = std::equal(want.begin(), want.end(), out.files[k].begin() + static_cast<std::ptrdiff_t>(j * len));
        }
    return out;
}

Rational measure_rate(const PdaGrid& grid, const FileLibrary& lib, const std::vector<DemandVector>& demands)
{
    std::optional<std::size_t> sent;
    for (const auto& d : demands) {
        const auto n = deliver(grid, lib, d).signals.size();
        if (sent && *sent != n)
            throw std::logic_error("signal count depends on the demand");
        sent = n;
    }
    return Rational(static_cast<long long>(sent.value_or(0)), static_cast<long long>(grid.rows()));
}

SweepSummary simulate_sweep(const PdaGrid& grid, const FileLibrary& lib, const std::vector<DemandVector>& demands,
                            unsigned threads)
{
    const auto caches = place(grid, lib);
    SweepSummary summary;
    summary.demands = demands.size();
    if (threads == 0)
        threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(demands.size(), 1)));

    std::vector<char> ok(demands.size(), 0);
    std::vector<std::optional<DecodeFailure>> fail(demands.size());
    std::vector<std::size_t> sent(demands.size(), 0);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < demands.size();) {
            const auto t = deliver(grid, lib, demands[i]);
            const auto r = decode(grid, t, caches, lib);
            sent[i] = t.signals.size();
            ok[i] = r.verified;
            if (!r.failures.empty())
                fail[i] = r.failures.front();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(work);
    work();
    for (auto& t : pool)
        t.join();

    std::size_t max_sent = 0;
    for (std::size_t i = 0; i < demands.size(); ++i) {
        summary.decoded += ok[i] ? 1 : 0;
        max_sent = std::max(max_sent, sent[i]);
        if (!summary.first_failure && fail[i])
            summary.first_failure = fail[i];
        if (sent[i] != sent.front())
            throw std::logic_error("signal count depends on the demand");
    }
    summary.rate = Rational(static_cast<long long>(max_sent), static_cast<long long>(grid.rows()));
    return summary;
}

} // namespace pdaw
