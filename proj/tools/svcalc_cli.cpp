// Command-line front end over the C API in svcalc.h. Exit codes: 0 all
// checks passed, 1 a violation or theorem failure was certified, 2 input
// error. Paths accept '-' for stdin.

#include <svcalc.h>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

template <class T, void (*F)(T*)>
struct Deleter {
    void operator()(T* p) const { F(p); }
};
using SystemPtr = std::unique_ptr<svc_system, Deleter<svc_system, svc_system_free>>;
using ArrPtr = std::unique_ptr<svc_arrangement, Deleter<svc_arrangement, svc_arrangement_free>>;
using ReportPtr = std::unique_ptr<svc_report, Deleter<svc_report, svc_report_free>>;

int report_failure(svc_status st) {
    std::fprintf(stderr, "error: %s\n", svc_last_error());
    return st == SVC_ERROR_INPUT ? 2 : 1;
}

bool read_source(const std::string& path, std::string& text) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) return false;
        ss << in.rdbuf();
    }
    text = ss.str();
    return true;
}

// 0 on success, otherwise the exit code.
int load_system(const std::string& path, SystemPtr& out) {
    std::string text;
    if (!read_source(path, text)) {
        std::fprintf(stderr, "error: cannot read %s\n", path.c_str());
        return 2;
    }
    svc_system* raw = nullptr;
    if (svc_status st = svc_system_parse(text.c_str(), &raw); st != SVC_OK)
        return report_failure(st);
    out.reset(raw);
    return 0;
}

int load_arrangement(const std::string& path, ArrPtr& out) {
    std::string text;
    if (!read_source(path, text)) {
        std::fprintf(stderr, "error: cannot read %s\n", path.c_str());
        return 2;
    }
    svc_arrangement* raw = nullptr;
    if (svc_status st = svc_arrangement_parse(text.c_str(), &raw); st != SVC_OK)
        return report_failure(st);
    out.reset(raw);
    return 0;
}

int print_system(const svc_system* s, bool json) {
    char* text = nullptr;
    svc_status st = json ? svc_system_json(s, &text) : svc_system_format(s, &text);
    if (st != SVC_OK) return report_failure(st);
    std::fputs(text, stdout);
    svc_string_free(text);
    return 0;
}

int print_report(const svc_report* r, bool json) {
    char* text = nullptr;
    svc_status st = json ? svc_report_json(r, &text) : svc_report_text(r, &text);
    if (st != SVC_OK) return report_failure(st);
    std::fputs(text, stdout);
    svc_string_free(text);
    return svc_report_passed(r) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sign vector calculus: axiom checks, derived systems, arrangement cells"};
    app.require_subcommand(1);
    app.set_version_flag("--version", svc_version());

    bool json = false;
    std::uint64_t seed = 1;
    std::size_t seed_count = 20, max_n = 5, max_dim = 3;
    app.add_flag("--json", json, "render output as JSON");
    app.add_option("--seed", seed, "first generation seed (verify)");
    app.add_option("--max-n", max_n, "hyperplanes per generated arrangement (verify)");
    app.add_option("--max-dim", max_dim, "ambient dimension bound (verify)");

    auto* check = app.add_subcommand("check", "test a system against the om / aom / com axioms");
    check->fallthrough();
    std::string check_input = "-", check_mode, check_strategy;
    check->add_option("--mode", check_mode, "om | aom | com")->required();
    check->add_option("--strategy", check_strategy, "aom only: axioms | dagger | both");
    check->add_option("input", check_input, "system file, - for stdin");

    auto* derive = app.add_subcommand("derive", "print a derived system");
    derive->fallthrough();
    std::string derive_which, derive_input = "-";
    derive->add_option("which", derive_which, "sym | asym | topes | P | N | Q | dagger")
        ->required();
    derive->add_option("input", derive_input, "system file, - for stdin");

    auto* enumerate = app.add_subcommand("enumerate", "list the cells of an arrangement");
    enumerate->fallthrough();
    std::string enum_input = "-";
    enumerate->add_option("input", enum_input, "arrangement file, - for stdin");

    auto* lift = app.add_subcommand("lift", "centrally extend a system by a new coordinate");
    lift->fallthrough();
    std::string lift_input = "-", lift_label;
    lift->add_option("input", lift_input, "system file, - for stdin");
    lift->add_option("label", lift_label, "name for the new coordinate (fresh when omitted)");

    auto* restrict_cmd =
        app.add_subcommand("restrict", "keep members positive at a coordinate and drop it");
    restrict_cmd->fallthrough();
    std::string restrict_input = "-", restrict_label;
    restrict_cmd->add_option("input", restrict_input, "system file, - for stdin")->required();
    restrict_cmd->add_option("label", restrict_label, "coordinate to restrict at")->required();

    auto* verify = app.add_subcommand("verify", "run the theorem suite over a generated corpus");
    verify->fallthrough();
    std::vector<std::string> verify_files;
    verify->add_option("--seed-count", seed_count, "number of generation seeds");
    verify->add_option("files", verify_files, "extra system files joined to the corpus");

    auto* flaw = app.add_subcommand("flaw-demo",
                                    "show that a composed pair cannot certify a parallel vector");
    flaw->fallthrough();
    std::string flaw_input = "-", flaw_n1, flaw_n2;
    flaw->add_option("--n1", flaw_n1, "first parallel vector (row syntax)");
    flaw->add_option("--n2", flaw_n2, "second parallel vector (row syntax)");
    flaw->add_option("input", flaw_input, "system file, - for stdin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help or the error message
        return code == 0 ? 0 : 2;
    }

    if (app.got_subcommand(check)) {
        SystemPtr sys;
        if (int rc = load_system(check_input, sys)) return rc;
        svc_report* raw = nullptr;
        svc_status st = svc_check(sys.get(), check_mode.c_str(),
                                  check_strategy.empty() ? nullptr : check_strategy.c_str(),
                                  &raw);
        if (st != SVC_OK) return report_failure(st);
        return print_report(ReportPtr(raw).get(), json);
    }

    if (app.got_subcommand(derive)) {
        SystemPtr sys;
        if (int rc = load_system(derive_input, sys)) return rc;
        svc_system* raw = nullptr;
        if (svc_status st = svc_derive(sys.get(), derive_which.c_str(), &raw); st != SVC_OK)
            return report_failure(st);
        return print_system(SystemPtr(raw).get(), json);
    }

    if (app.got_subcommand(enumerate)) {
        ArrPtr arr;
        if (int rc = load_arrangement(enum_input, arr)) return rc;
        svc_system* raw = nullptr;
        if (svc_status st = svc_enumerate(arr.get(), &raw); st != SVC_OK)
            return report_failure(st);
        return print_system(SystemPtr(raw).get(), json);
    }

    if (app.got_subcommand(lift)) {
        SystemPtr sys;
        if (int rc = load_system(lift_input, sys)) return rc;
        svc_system* raw = nullptr;
        svc_status st =
            svc_lift(sys.get(), lift_label.empty() ? nullptr : lift_label.c_str(), &raw);
        if (st != SVC_OK) return report_failure(st);
        return print_system(SystemPtr(raw).get(), json);
    }

    if (app.got_subcommand(restrict_cmd)) {
        SystemPtr sys;
        if (int rc = load_system(restrict_input, sys)) return rc;
        svc_system* raw = nullptr;
        if (svc_status st = svc_restrict(sys.get(), restrict_label.c_str(), &raw); st != SVC_OK)
            return report_failure(st);
        return print_system(SystemPtr(raw).get(), json);
    }

    if (app.got_subcommand(verify)) {
        std::vector<SystemPtr> extras;
        std::vector<const svc_system*> raw_extras;
        std::vector<const char*> names;
        for (const auto& path : verify_files) {
            SystemPtr sys;
            if (int rc = load_system(path, sys)) return rc;
            raw_extras.push_back(sys.get());
            names.push_back(path.c_str());
            extras.push_back(std::move(sys));
        }
        svc_verify_options opt;
        svc_verify_options_default(&opt);
        opt.base_seed = seed;
        opt.seed_count = seed_count;
        opt.max_n = max_n;
        opt.max_dim = max_dim;
        svc_report* raw = nullptr;
        svc_status st = svc_verify(&opt, raw_extras.empty() ? nullptr : raw_extras.data(),
                                   names.empty() ? nullptr : names.data(), raw_extras.size(),
                                   &raw);
        if (st != SVC_OK) return report_failure(st);
        return print_report(ReportPtr(raw).get(), json);
    }

    if (app.got_subcommand(flaw)) {
        SystemPtr sys;
        if (int rc = load_system(flaw_input, sys)) return rc;
        svc_report* raw = nullptr;
        svc_status st = svc_flaw_demo(sys.get(), flaw_n1.empty() ? nullptr : flaw_n1.c_str(),
                                      flaw_n2.empty() ? nullptr : flaw_n2.c_str(), &raw);
        if (st != SVC_OK) return report_failure(st);
        return print_report(ReportPtr(raw).get(), json);
    }

    return 2; // unreachable: require_subcommand(1)
}
