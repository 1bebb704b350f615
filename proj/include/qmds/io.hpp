#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmds/constructions.hpp"
#include "qmds/verifier.hpp"

namespace qmds {

/// Unreadable or unwritable files.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using nlohmann::json;

/// {"p", "e", "modulus"}; elements elsewhere use the canonical encoding.
json field_to_json(const FieldTower& F);
/// Rebuilds the tower and insists the stored modulus is the canonical one,
/// since element codes are only meaningful relative to it.
FieldPtr field_from_json(const json& j, std::size_t element_bound = kDefaultElementBound);

json elements_to_json(std::span<const Elem> xs);
json matrix_to_json(const Matrix& m);

/// {"field", "a", "v", "k", "extended"}.
json code_to_json(const GrsCode& code);
/// Throws std::invalid_argument on schema or invariant violations.
GrsCode code_from_json(const json& j, std::size_t element_bound = kDefaultElementBound);

json quantum_to_json(const QuantumParams& qp);

/// Code file plus "quantum", "provenance", "witnesses", and "generator".
json construction_to_json(const ConstructionResult& r);

/// Omits the timing unless asked, so the default output is reproducible.
json report_to_json(const VerificationReport& rep, bool include_timing = false);

json nonexistence_to_json(const NonexistenceRecord& rec);

/// Throws IoError when the file cannot be read, std::invalid_argument when
/// it does not hold a valid code.
GrsCode parse_code_file(const std::string& path, std::size_t element_bound = kDefaultElementBound);
void write_code_file(const std::string& path, const json& j);

enum class RowFormat { csv, json };

inline constexpr const char* kSweepCsvHeader = "q,t,k,family,N,K,D,n,kq,d,status";

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);
void write_sweep_json(std::ostream& out, std::span<const SweepRow> rows);
std::vector<SweepRow> sweep_rows_from_json(const json& j);

/// Writes to `path`, or to `fallback` when path is empty or "-".
/// Throws IoError when the destination cannot be written.
void emit(std::span<const SweepRow> rows, RowFormat format, const std::string& path, std::ostream& fallback);

}  // namespace qmds
