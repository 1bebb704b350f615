#include "qmds/io.hpp"

#include <fstream>
#include <ostream>

namespace qmds {

json field_to_json(const FieldTower& F) {
    return json{{"p", F.characteristic()}, {"e", F.subfield_degree()}, {"modulus", F.modulus()}};
}

FieldPtr field_from_json(const json& j, std::size_t element_bound) {
    try {
        const auto p = j.at("p").get<unsigned>();
        const auto e = j.at("e").get<unsigned>();
        auto F = make_field(p, e, element_bound);
        if (j.contains("modulus") && j.at("modulus").get<std::vector<unsigned>>() != F->modulus())
            throw std::invalid_argument("field modulus differs from the canonical modulus");
        return F;
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("malformed field description: ") + ex.what());
    }
}

json elements_to_json(std::span<const Elem> xs) {
    json out = json::array();
    for (Elem x : xs) out.push_back(x.code);
    return out;
}

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(elements_to_json(m.row(r)));
    return out;
}

json code_to_json(const GrsCode& code) {
    return json{{"field", field_to_json(*code.field)},
                {"a", elements_to_json(code.points)},
                {"v", elements_to_json(code.multipliers)},
                {"k", code.dimension},
                {"extended", code.extended}};
}

namespace {

std::vector<Elem> elements_from_json(const json& j, const FieldTower& F, const char* what) {
    std::vector<Elem> out;
    for (const auto& x : j) {
        const auto c = x.get<std::int64_t>();
        if (c < 0 || static_cast<std::uint64_t>(c) >= F.size())
            throw std::invalid_argument(std::string(what) + " contains an element code outside the field");
        out.push_back(Elem{static_cast<std::uint32_t>(c)});
    }
    return out;
}

}  // namespace

GrsCode code_from_json(const json& j, std::size_t element_bound) {
    try {
        auto F = field_from_json(j.at("field"), element_bound);
        auto a = elements_from_json(j.at("a"), *F, "a");
        auto v = elements_from_json(j.at("v"), *F, "v");
        const auto k = j.at("k").get<std::int64_t>();
        if (k < 1) throw std::invalid_argument("k must be positive");
        return make_grs(std::move(F), std::move(a), std::move(v), static_cast<std::size_t>(k),
                        j.at("extended").get<bool>());
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("malformed code file: ") + ex.what());
    }
}

json quantum_to_json(const QuantumParams& qp) {
    return json{{"n", qp.n}, {"k", qp.k}, {"d", qp.d}, {"q", qp.q}};
}

json construction_to_json(const ConstructionResult& r) {
    json j = code_to_json(r.code);
    j["quantum"] = quantum_to_json(r.quantum);
    j["provenance"] = provenance_tag(r.quantum.provenance);
    j["witnesses"] = json{{"w", elements_to_json(r.witnesses.w)},
                          {"m_coeffs", elements_to_json(r.witnesses.m.coeffs())},
                          {"gamma", elements_to_json(r.witnesses.gamma)}};
    j["generator"] = matrix_to_json(generator_matrix(r.code));
    return j;
}

json report_to_json(const VerificationReport& rep, bool include_timing) {
    json j{{"code", rep.code_id},
           {"length", rep.length},
           {"dimension", rep.dimension},
           {"hermitian_self_orthogonal", rep.hermitian.holds},
           {"distance_method", distance_method_tag(rep.distance_method)},
           {"measured_distance", rep.measured_distance ? json(*rep.measured_distance) : json(nullptr)},
           {"mds", rep.mds},
           {"singleton_equality", rep.singleton_equality},
           {"quantum", quantum_to_json(rep.quantum)},
           {"passed", rep.passed()}};
    if (rep.hermitian.witness) {
        const auto& w = *rep.hermitian.witness;
        j["witness"] = json{{"row_a", w.row_a}, {"row_b", w.row_b}, {"value", w.value.code}};
    }
    if (include_timing)
        j["elapsed_ms"] = std::chrono::duration<double, std::milli>(rep.elapsed).count();
    return j;
}

json nonexistence_to_json(const NonexistenceRecord& rec) {
    json j{{"claim", "no Hermitian self-orthogonal [5,1,5] code over GF(4)"},
           {"nonexistence_confirmed", rec.nonexistence_confirmed},
           {"vectors_enumerated", rec.vectors_enumerated},
           {"skipped_zero_coordinate", rec.skipped_zero_coordinate},
           {"candidates_examined", rec.candidates_examined},
           {"scalar_classes", rec.scalar_classes}};
    if (rec.counterexample) j["counterexample"] = elements_to_json(*rec.counterexample);
    return j;
}

GrsCode parse_code_file(const std::string& path, std::size_t element_bound) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& ex) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + ex.what());
    }
    return code_from_json(j, element_bound);
}

void write_code_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << j.dump(2) << '\n';
    if (!out) throw IoError("write failed for " + path);
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
    out << kSweepCsvHeader << '\n';
    for (const auto& r : rows)
        out << r.q << ',' << r.t << ',' << r.k << ',' << family_tag(r.family) << ',' << r.N << ',' << r.K << ','
            << r.D << ',' << r.n << ',' << r.kq << ',' << r.d << ',' << row_status_tag(r.status) << '\n';
}

void write_sweep_json(std::ostream& out, std::span<const SweepRow> rows) {
    json arr = json::array();
    for (const auto& r : rows)
        arr.push_back(json{{"q", r.q}, {"t", r.t}, {"k", r.k}, {"family", family_tag(r.family)},
                           {"N", r.N}, {"K", r.K}, {"D", r.D}, {"n", r.n}, {"kq", r.kq}, {"d", r.d},
                           {"status", row_status_tag(r.status)}});
    out << arr.dump(2) << '\n';
}

std::vector<SweepRow> sweep_rows_from_json(const json& j) {
    std::vector<SweepRow> rows;
    try {
        for (const auto& o : j) {
            SweepRow r;
            r.q = o.at("q").get<unsigned>();
            r.t = o.at("t").get<unsigned>();
            r.k = o.at("k").get<std::size_t>();
            const auto fam = o.at("family").get<std::string>();
            if (fam != "theorem1" && fam != "theorem2") throw std::invalid_argument("unknown family " + fam);
            r.family = fam == "theorem1" ? Family::theorem1 : Family::theorem2;
            r.N = o.at("N").get<std::size_t>();
            r.K = o.at("K").get<std::size_t>();
            r.D = o.at("D").get<std::size_t>();
            r.n = o.at("n").get<std::size_t>();
            r.kq = o.at("kq").get<long>();
            r.d = o.at("d").get<std::size_t>();
            const auto st = o.at("status").get<std::string>();
            bool known = false;
            for (auto s : {RowStatus::verified, RowStatus::failed, RowStatus::excluded})
                if (row_status_tag(s) == st) {
                    r.status = s;
                    known = true;
                }
            if (!known) throw std::invalid_argument("unknown status " + st);
            rows.push_back(r);
        }
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("malformed sweep rows: ") + ex.what());
    }
    return rows;
}

void emit(std::span<const SweepRow> rows, RowFormat format, const std::string& path, std::ostream& fallback) {
    auto write = [&](std::ostream& out) {
        if (format == RowFormat::csv)
            write_sweep_csv(out, rows);
        else
            write_sweep_json(out, rows);
    };
    if (path.empty() || path == "-") {
        write(fallback);
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    write(out);
    out.flush();
    if (!out) throw IoError("write failed for " + path);
}

}  // namespace qmds
