#include "qfano/family.hpp"
#include "qfano/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

qfano::Catalog select(const qfano::Catalog& cat, std::optional<int> id) {
    if (!id) return cat;
    try {
        return {qfano::find_family(cat, *id)};
    } catch (const std::out_of_range&) {
        throw UsageError("unknown family " + std::to_string(*id));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qfano: verification of Q-Fano 3-fold weighted hypersurface computations"};
    app.require_subcommand(1);
    std::string catalog_path;
    app.add_option("--catalog", catalog_path, "catalog JSON (default: built in)");

    auto* table = app.add_subcommand("table", "print the recomputed big table");

    auto* verify = app.add_subcommand("verify", "run every check");
    std::optional<int> family;
    qfano::VerifyOptions opt;
    std::string format = "text";
    verify->add_option("--family", family, "family number");
    verify->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    verify->add_option("--prime", opt.prime, "scan prime")->capture_default_str();
    verify->add_option("--samples", opt.samples, "members sampled per family")->capture_default_str()->check(
        CLI::PositiveNumber);
    verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* scan = app.add_subcommand("scan", "quasismoothness and J_phi scans only");
    int scan_family = 0;
    scan->add_option("--family", scan_family, "family number")->required();
    scan->add_option("--prime", opt.prime, "scan prime")->capture_default_str();
    scan->add_option("--samples", opt.samples, "members sampled")->capture_default_str();

    auto* ident = app.add_subcommand("identities", "symbolic identity checks only");
    int ident_family = 0;
    ident->add_option("--family", ident_family, "family number")->required();
    ident->add_option("--samples", opt.samples, "members sampled")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        const qfano::Catalog cat =
            catalog_path.empty() ? qfano::builtin_catalog() : qfano::load_catalog_file(catalog_path);
        if (*table) {
            std::cout << qfano::table_text(cat);
            return 0;
        }
        std::vector<qfano::VerificationReport> reports;
        if (*verify) {
            reports = qfano::verify_all(select(cat, family), opt);
        } else if (*scan) {
            opt.catalog = opt.identities = false;
            reports = qfano::verify_all(select(cat, scan_family), opt);
        } else {
            opt.catalog = opt.scans = false;
            reports = qfano::verify_all(select(cat, ident_family), opt);
        }
        std::cout << (format == "json" ? qfano::format_json(reports) : qfano::format_text(reports));
        return qfano::any_fail(reports) ? 1 : 0;
    } catch (const UsageError& e) {
        std::cerr << "qfano: " << e.what() << "\n";
        return 2;
    } catch (const qfano::CatalogError& e) {
        std::cerr << "qfano: catalog: " << e.what() << "\n";
        return 2;
    }
}
