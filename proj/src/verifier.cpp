#include "qmds/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace qmds {

std::string_view distance_method_tag(DistanceMethod m) noexcept {
    switch (m) {
        case DistanceMethod::brute: return "brute";
        case DistanceMethod::rank: return "rank";
        case DistanceMethod::by_construction: return "by-construction";
    }
    return "by-construction";
}

VerificationReport verify_code(const GrsCode& code, std::string code_id, VerifyLimits limits) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.code_id = std::move(code_id);
    const LinearCode lin = to_linear_code(code);
    const std::size_t N = lin.length();
    const std::size_t k = lin.dimension();
    rep.length = N;
    rep.dimension = k;
    rep.hermitian = hermitian_self_orthogonal(lin);

    try {
        rep.measured_distance = min_distance_bruteforce(lin, limits.codeword_cap);
        rep.distance_method = DistanceMethod::brute;
        rep.mds = *rep.measured_distance == N - k + 1;
    } catch (const CapExceeded&) {
        try {
            rep.mds = is_mds_by_rank(lin, limits.minor_cap);
            rep.distance_method = DistanceMethod::rank;
        } catch (const CapExceeded&) {
            rep.mds = true;  // GRS and extended GRS codes are MDS
            rep.distance_method = DistanceMethod::by_construction;
        }
    }

    rep.quantum = QuantumParams{N, static_cast<long>(N) - 2 * static_cast<long>(k), k + 1, code.field->q(),
                                Provenance::external, false};
    rep.singleton_equality = rep.quantum.singleton_equality();
    rep.elapsed = std::chrono::steady_clock::now() - start;
    return rep;
}

std::string construction_id(const ConstructionResult& r) {
    return std::string(provenance_tag(r.quantum.provenance)) + "(q=" + std::to_string(r.quantum.q) +
           ",t=" + std::to_string(r.t) + ",k=" + std::to_string(r.code.dimension) + ")";
}

VerificationReport verify_construction(const ConstructionResult& result, VerifyLimits limits) {
    VerificationReport rep = verify_code(result.code, construction_id(result), limits);
    const QuantumParams& claimed = result.quantum;
    rep.singleton_equality = rep.singleton_equality && claimed.singleton_equality() &&
                             claimed.n == rep.quantum.n && claimed.k == rep.quantum.k &&
                             claimed.d == rep.quantum.d && claimed.q == rep.quantum.q;
    rep.quantum.provenance = claimed.provenance;
    return rep;
}

// --- sweeps -------------------------------------------------------------------

std::string_view family_tag(Family f) noexcept { return f == Family::theorem1 ? "theorem1" : "theorem2"; }

std::optional<FamilyFilter> parse_family_filter(std::string_view s) noexcept {
    if (s == "theorem1") return FamilyFilter::theorem1;
    if (s == "theorem2") return FamilyFilter::theorem2;
    if (s == "both") return FamilyFilter::both;
    return std::nullopt;
}

std::string_view row_status_tag(RowStatus s) noexcept {
    switch (s) {
        case RowStatus::verified: return "verified";
        case RowStatus::failed: return "failed";
        case RowStatus::excluded: return "excluded-by-paper";
    }
    return "failed";
}

namespace {

SweepRow make_row(unsigned q, unsigned t, std::size_t k, Family family) {
    SweepRow row;
    row.q = q;
    row.t = t;
    row.k = k;
    row.family = family;
    row.N = family == Family::theorem1 ? static_cast<std::size_t>(t) * q : static_cast<std::size_t>(t) * (q + 1) + 2;
    row.K = k;
    row.D = row.N - k + 1;
    row.n = row.N;
    row.kq = static_cast<long>(row.N) - 2 * static_cast<long>(k);
    row.d = k + 1;
    return row;
}

}  // namespace

std::vector<SweepRow> sweep(std::span<const unsigned> qs, FamilyFilter family, const SweepOptions& options) {
    std::map<unsigned, FieldPtr> fields;
    for (unsigned q : qs)
        if (!fields.count(q)) fields.emplace(q, make_field_for_q(q, options.element_bound));

    std::vector<SweepRow> rows;
    for (unsigned q : qs) {
        if (family != FamilyFilter::theorem2)
            for (unsigned t = 1; t <= q; ++t)
                for (std::size_t k = 1; k <= additive_max_dimension(q, t); ++k)
                    rows.push_back(make_row(q, t, k, Family::theorem1));
        if (family != FamilyFilter::theorem1)
            for (unsigned t = 1; t + 1 <= q; ++t)
                for (std::size_t k = 1; k <= t + 1; ++k) {
                    SweepRow row = make_row(q, t, k, Family::theorem2);
                    if (is_excluded_extended(q, t, k)) row.status = RowStatus::excluded;
                    rows.push_back(row);
                }
    }

    auto verify_row = [&](SweepRow& row) {
        if (row.status == RowStatus::excluded) return;
        const FieldPtr& F = fields.at(row.q);
        const auto result = row.family == Family::theorem1 ? construct_additive(F, row.t, row.k)
                                                           : construct_extended(F, row.t, row.k);
        const auto rep = verify_construction(result, options.limits);
        const bool ok = rep.passed() && result.code.length() == row.N && result.quantum.k == row.kq &&
                        result.quantum.d == row.d;
        row.status = ok ? RowStatus::verified : RowStatus::failed;
    };

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(rows.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < rows.size();) verify_row(rows[i]);
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    return rows;
}

bool all_passed(std::span<const SweepRow> rows) noexcept {
    return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.status != RowStatus::failed; });
}

// --- nonexistence -------------------------------------------------------------

NonexistenceRecord search_hermitian_515_over_f4() {
    const auto F = make_field(2, 1);
    NonexistenceRecord rec;
    constexpr std::size_t len = 5;
    const std::uint32_t Q = static_cast<std::uint32_t>(F->size());
    std::vector<Elem> c(len);
    for (;;) {
        ++rec.vectors_enumerated;
        if (std::any_of(c.begin(), c.end(), [](Elem x) { return x.is_zero(); })) {
            ++rec.skipped_zero_coordinate;
        } else {
            ++rec.candidates_examined;
            Matrix G(0, len);
            G.append_row(c);
            if (hermitian_self_orthogonal(*F, G).holds && !rec.counterexample) rec.counterexample = c;
        }
        std::size_t i = 0;
        while (i < len && c[i].code + 1 == Q) c[i++] = Elem{};
        if (i == len) break;
        c[i].code += 1;
    }
    rec.scalar_classes = rec.candidates_examined / (Q - 1);
    rec.nonexistence_confirmed = !rec.counterexample.has_value();
    return rec;
}

}  // namespace qmds
