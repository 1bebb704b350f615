#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmds/constructions.hpp"

namespace qmds {

enum class DistanceMethod { brute, rank, by_construction };

/// "brute", "rank", "by-construction".
std::string_view distance_method_tag(DistanceMethod m) noexcept;

struct VerifyLimits {
    std::uint64_t codeword_cap = kCodewordCap;
    std::uint64_t minor_cap = kMinorCap;
};

struct VerificationReport {
    std::string code_id;
    std::size_t length = 0;
    std::size_t dimension = 0;
    SelfOrthogonality hermitian;
    DistanceMethod distance_method = DistanceMethod::by_construction;
    std::optional<std::size_t> measured_distance;
    bool mds = false;
    bool singleton_equality = false;
    QuantumParams quantum;
    std::chrono::nanoseconds elapsed{0};

    bool passed() const noexcept { return hermitian.holds && mds && singleton_equality; }
};

/// Full re-check of a GRS code: Hermitian self-orthogonality, distance by the
/// cheapest available exact method (enumeration, then k-column ranks, then
/// the GRS MDS property), and the quantum Singleton equality of the derived
/// [[N, N-2k, k+1]]_q. Never throws on a failed check.
VerificationReport verify_code(const GrsCode& code, std::string code_id, VerifyLimits limits = {});

/// As verify_code, additionally requiring the construction's claimed quantum
/// parameters to match the derived ones.
VerificationReport verify_construction(const ConstructionResult& result, VerifyLimits limits = {});

std::string construction_id(const ConstructionResult& result);

// --- sweeps -------------------------------------------------------------------

enum class Family { theorem1, theorem2 };
enum class FamilyFilter { theorem1, theorem2, both };
enum class RowStatus { verified, failed, excluded };

std::string_view family_tag(Family f) noexcept;
std::optional<FamilyFilter> parse_family_filter(std::string_view s) noexcept;
/// "verified", "failed", "excluded-by-paper".
std::string_view row_status_tag(RowStatus s) noexcept;

struct SweepRow {
    unsigned q = 0;
    unsigned t = 0;
    std::size_t k = 0;  // classical dimension
    Family family = Family::theorem1;
    std::size_t N = 0, K = 0, D = 0;
    std::size_t n = 0;
    long kq = 0;
    std::size_t d = 0;
    RowStatus status = RowStatus::failed;

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

inline const std::vector<unsigned> kDefaultSweepQs{2, 3, 4, 5, 7, 8, 9};

struct SweepOptions {
    unsigned threads = 0;  // 0: hardware concurrency
    VerifyLimits limits{};
    std::size_t element_bound = kDefaultElementBound;
};

/// One row per admissible (q, t, k), ordered by q (input order), family,
/// t, k. Rows are verified concurrently; the order never depends on
/// scheduling. Throws std::invalid_argument for a bad q.
std::vector<SweepRow> sweep(std::span<const unsigned> qs, FamilyFilter family, const SweepOptions& options = {});

bool all_passed(std::span<const SweepRow> rows) noexcept;

// --- nonexistence -------------------------------------------------------------

struct NonexistenceRecord {
    bool nonexistence_confirmed = false;
    std::uint64_t vectors_enumerated = 0;    // all of GF(4)^5
    std::uint64_t skipped_zero_coordinate = 0;
    std::uint64_t candidates_examined = 0;   // full-weight generators
    std::uint64_t scalar_classes = 0;
    std::optional<std::vector<Elem>> counterexample;
};

/// Exhaustive search for a Hermitian self-orthogonal [5, 1, 5] code over
/// GF(4): every full-weight generator c must fail sum c_i^3 = 0.
NonexistenceRecord search_hermitian_515_over_f4();

}  // namespace qmds
