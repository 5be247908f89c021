#include "rqc/cli.hpp"

#include "rqc/commands.hpp"
#include "rqc/error.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>

namespace rqc::cli {

namespace {

ContractDocument read_document(const std::string& path, std::istream& in) {
    if (path == "-") {
        return load_document(in);
    }
    std::ifstream file(path);
    if (!file) {
        throw Error("cannot open '" + path + "'");
    }
    return load_document(file);
}

void emit(const Report& report, const std::string& format, bool quiet, std::ostream& out) {
    if (quiet) {
        return;
    }
    if (format == "json") {
        out << report.data.dump(2) << "\n";
    } else {
        out << report.text;
    }
}

} // namespace

int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"requirements contract toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    bool quiet = false;
    app.add_option("--format", format, "report rendering: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--quiet", quiet, "suppress report output; exit code only");

    struct {
        std::string file;
        CheckRpOptions check_rp;
        std::string prop;
        unsigned retry = 3;
        bool coupled = false;
    } opts;

    auto add_file = [&opts](CLI::App* sub) {
        sub->add_option("file", opts.file, "contract document (JSON), or - for stdin")
            ->required();
    };

    CLI::App* validate = app.add_subcommand("validate", "schema, formula and network checks");
    add_file(validate);

    CLI::App* check_rp = app.add_subcommand("check-rp", "decide the requirements problem");
    add_file(check_rp);
    check_rp->add_option("--k", opts.check_rp.k_from, "section feeding K (kR, rR, s, none)");
    check_rp->add_option("--s", opts.check_rp.s_from, "section feeding S (kR, rR, s, none)");
    check_rp->add_option("--r", opts.check_rp.r_from, "section feeding R (kR, rR, s, none)");

    CLI::App* gate = app.add_subcommand("gate", "requirement-role status per proposition");
    add_file(gate);
    gate->add_option("--prop", opts.prop, "gate a single proposition by name");

    CLI::App* enact = app.add_subcommand("enact", "simulate the schedule over the network");
    add_file(enact);
    enact->add_option("--retry", opts.retry, "max validation retries (0 disables loop-back)");

    CLI::App* align = app.add_subcommand("align", "expected values, budget and conflicts");
    add_file(align);
    align->add_flag("--coupled", opts.coupled, "also apply the budget-coupled rewrite");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        ContractDocument doc = read_document(opts.file, in);
        Report report;
        if (validate->parsed()) {
            report = cmd_validate(doc);
        } else if (check_rp->parsed()) {
            report = cmd_check_rp(doc, opts.check_rp);
        } else if (gate->parsed()) {
            report = cmd_gate(doc, opts.prop.empty()
                                       ? std::nullopt
                                       : std::optional<std::string>(opts.prop));
        } else if (enact->parsed()) {
            RetryPolicy policy{opts.retry > 0, opts.retry};
            report = cmd_enact(doc, policy);
        } else {
            report = cmd_align(doc, opts.coupled);
        }
        emit(report, format, quiet, out);
        return report.exit_code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace rqc::cli
