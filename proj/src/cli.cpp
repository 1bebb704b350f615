#include "qmds/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qmds/checks.hpp"
#include "qmds/io.hpp"

namespace qmds::cli {

namespace {

struct Options {
    std::size_t element_bound = kDefaultElementBound;
    bool verbose = false;
    std::string out_path;

    unsigned q = 0;
    unsigned t = 0;
    std::size_t k = 0;
    std::size_t d = 0;

    std::string file;
    std::vector<unsigned> qs = kDefaultSweepQs;
    std::string family = "both";
    std::string format = "csv";
    unsigned threads = 0;
    std::uint64_t seed = 1;
};

std::size_t bound_from_env() {
    const char* s = std::getenv(kElementBoundEnv);
    if (!s || !*s) return kDefaultElementBound;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (*end != '\0' || v < 4) throw std::invalid_argument(std::string(kElementBoundEnv) + " must be an integer >= 4");
    return static_cast<std::size_t>(v);
}

// Range checks that must pass before any field is built.
void require_field_size(unsigned q, std::size_t bound) {
    if (!split_prime_power(q)) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    if (static_cast<std::uint64_t>(q) * q > bound)
        throw std::invalid_argument("q^2 = " + std::to_string(static_cast<std::uint64_t>(q) * q) +
                                    " exceeds the element bound " + std::to_string(bound));
}

void write_json(const json& j, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << j.dump(2) << '\n';
        return;
    }
    write_code_file(path, j);
}

std::string bracket(const QuantumParams& qp) {
    std::ostringstream os;
    os << "[[" << qp.n << "," << qp.k << "," << qp.d << "]]_" << qp.q;
    return os.str();
}

int emit_construction(const ConstructionResult& r, const Options& opt, std::ostream& out, std::ostream& err) {
    const auto rep = verify_construction(r);
    json j = construction_to_json(r);
    j["verification"] = report_to_json(rep);
    write_json(j, opt.out_path, out);
    if (opt.verbose)
        err << construction_id(r) << ": " << bracket(r.quantum) << (rep.passed() ? " verified" : " FAILED")
            << " (distance " << distance_method_tag(rep.distance_method) << ", "
            << std::chrono::duration<double, std::milli>(rep.elapsed).count() << " ms)\n";
    return rep.passed() ? kSuccess : kVerificationFailure;
}

int cmd_theorem1(const Options& opt, std::ostream& out, std::ostream& err) {
    require_field_size(opt.q, opt.element_bound);
    if (opt.t < 1 || opt.t > opt.q) throw std::invalid_argument("t must satisfy 1 <= t <= q");
    const std::size_t kmax = additive_max_dimension(opt.q, opt.t);
    if (opt.k < 1 || opt.k > kmax)
        throw std::invalid_argument("k must satisfy 1 <= k <= floor((tq+q-1)/(q+1)) = " + std::to_string(kmax));
    return emit_construction(construct_additive(opt.q, opt.t, opt.k, opt.element_bound), opt, out, err);
}

int cmd_theorem2(const Options& opt, std::ostream& out, std::ostream& err) {
    require_field_size(opt.q, opt.element_bound);
    return emit_construction(construct_extended_for_distance(opt.q, opt.t, opt.d, opt.element_bound), opt, out,
                             err);
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    const GrsCode code = parse_code_file(opt.file, opt.element_bound);
    const auto rep = verify_code(code, opt.file);
    write_json(report_to_json(rep), opt.out_path, out);
    if (!rep.passed() && rep.hermitian.witness)
        err << "not Hermitian self-orthogonal: rows " << rep.hermitian.witness->row_a << " and "
            << rep.hermitian.witness->row_b << '\n';
    return rep.passed() ? kSuccess : kVerificationFailure;
}

int cmd_sweep(const Options& opt, std::ostream& out, std::ostream& err) {
    const auto family = parse_family_filter(opt.family);
    if (!family) throw std::invalid_argument("family must be theorem1, theorem2, or both");
    if (opt.format != "csv" && opt.format != "json") throw std::invalid_argument("format must be csv or json");
    for (unsigned q : opt.qs) require_field_size(q, opt.element_bound);
    SweepOptions so;
    so.threads = opt.threads;
    so.element_bound = opt.element_bound;
    const auto rows = sweep(opt.qs, *family, so);
    emit(rows, opt.format == "csv" ? RowFormat::csv : RowFormat::json, opt.out_path, out);
    const auto failed = std::count_if(rows.begin(), rows.end(),
                                      [](const SweepRow& r) { return r.status == RowStatus::failed; });
    if (opt.verbose || failed > 0) err << rows.size() << " rows, " << failed << " failed\n";
    return failed == 0 ? kSuccess : kVerificationFailure;
}

int cmd_check_lemmas(const Options& opt, std::ostream& out, std::ostream& err) {
    require_field_size(opt.q, opt.element_bound);
    const auto results = run_lemma_checks(opt.q, opt.seed, opt.element_bound);
    json arr = json::array();
    bool ok = true;
    for (const auto& r : results) {
        arr.push_back(json{{"check", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
        ok = ok && r.passed;
        if (!r.passed) err << "check " << r.name << " failed: " << r.detail << '\n';
    }
    write_json(json{{"q", opt.q}, {"seed", opt.seed}, {"checks", arr}, {"passed", ok}}, opt.out_path, out);
    return ok ? kSuccess : kVerificationFailure;
}

int cmd_no515(const Options& opt, std::ostream& out, std::ostream&) {
    const auto rec = search_hermitian_515_over_f4();
    write_json(nonexistence_to_json(rec), opt.out_path, out);
    return rec.nonexistence_confirmed ? kSuccess : kVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Hermitian self-orthogonal GRS codes and quantum MDS parameters", "qmds"};
    app.require_subcommand(1);
    app.add_option("--element-bound", opt.element_bound, "Maximum number of elements of GF(q^2)");
    app.add_flag("-v,--verbose", opt.verbose, "Human-readable progress on stderr");

    auto* construct = app.add_subcommand("construct", "Build and verify one code");
    construct->require_subcommand(1);
    auto* th1 = construct->add_subcommand("theorem1", "GRS code of length tq on additive cosets");
    th1->add_option("--q", opt.q, "Base field size")->required();
    th1->add_option("--t", opt.t, "Number of cosets, 1 <= t <= q")->required();
    th1->add_option("--k", opt.k, "Classical dimension; quantum distance is k+1")->required();
    th1->add_option("--out", opt.out_path, "Output file (default stdout)");
    auto* th2 = construct->add_subcommand("theorem2", "Extended GRS code of length t(q+1)+2");
    th2->add_option("--q", opt.q, "Base field size")->required();
    th2->add_option("--t", opt.t, "Number of cosets, 1 <= t <= q-1")->required();
    th2->add_option("--d", opt.d, "Quantum minimum distance, 2 <= d <= t+2")->required();
    th2->add_option("--out", opt.out_path, "Output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "Verify a code file");
    verify->add_option("file", opt.file, "Code file (JSON)")->required();
    verify->add_option("--out", opt.out_path, "Report file (default stdout)");

    auto* sw = app.add_subcommand("sweep", "Construct and verify whole families");
    sw->add_option("--q", opt.qs, "Comma-separated q values")->delimiter(',');
    sw->add_option("--family", opt.family, "theorem1, theorem2, or both");
    sw->add_option("--format", opt.format, "csv or json");
    sw->add_option("--out", opt.out_path, "Output file (default stdout)");
    sw->add_option("--threads", opt.threads, "Worker threads (0: all cores)");

    auto* lemmas = app.add_subcommand("check-lemmas", "Run the identity checks for one q");
    lemmas->add_option("--q", opt.q, "Base field size")->required();
    lemmas->add_option("--seed", opt.seed, "Seed for the randomized checks");
    lemmas->add_option("--out", opt.out_path, "Output file (default stdout)");

    auto* no515 = app.add_subcommand("no515", "Exhaustive [5,1,5] nonexistence check over GF(4)");
    no515->add_option("--out", opt.out_path, "Output file (default stdout)");

    try {
        opt.element_bound = bound_from_env();
    } catch (const std::invalid_argument& ex) {
        err << ex.what() << '\n';
        return kInvalidParameters;
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& ex) {
        err << ex.what() << "\n\n" << app.help();
        return kInvalidParameters;
    }

    try {
        if (*th1) return cmd_theorem1(opt, out, err);
        if (*th2) return cmd_theorem2(opt, out, err);
        if (*verify) return cmd_verify(opt, out, err);
        if (*sw) return cmd_sweep(opt, out, err);
        if (*lemmas) return cmd_check_lemmas(opt, out, err);
        if (*no515) return cmd_no515(opt, out, err);
    } catch (const IoError& ex) {
        err << "I/O error: " << ex.what() << '\n';
        return kIoError;
    } catch (const ExcludedParameters& ex) {
        err << "excluded parameters: " << ex.what() << '\n';
        return kInvalidParameters;
    } catch (const std::invalid_argument& ex) {
        err << "invalid parameters: " << ex.what() << '\n';
        return kInvalidParameters;
    }
    err << app.help();
    return kInvalidParameters;
}

}  // namespace qmds::cli
