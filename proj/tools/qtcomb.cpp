// qtcomb: verification harness and query tool for q,t-identities on
// decorated lattice paths and Macdonald-operator symmetric functions.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qtcomb/expr.hpp"
#include "qtcomb/identities.hpp"

using namespace qtcomb;

namespace {

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

int cmd_verify(const RunConfig& cfg) {
    if (cfg.n_max > cfg.degree_bound)
        throw std::runtime_error("--n-max exceeds --degree-bound");
    IdentityChecker checker(cfg.degree_bound);
    std::vector<IdentityReport> reports = checker.run(cfg);
    std::ofstream file;
    std::ostream& os = open_out(file, cfg.out_path);
    write_reports(os, reports, cfg.format);
    for (const auto& r : reports)
        if (r.category == "theorem" && r.status == "unequal") return 1;
    return 0;
}

struct EnumerateOptions {
    std::string family;
    int n = 0, m = 0, k = 0, d = 0;
    bool refine = false;
    bool stats_only = false;
    std::string contains_path;
    std::string format = "text";
    std::string out_path;
};

int cmd_enumerate(const EnumerateOptions& opt) {
    FamilyParams params{family_from_name(opt.family), opt.m, opt.n, opt.k, opt.d};
    std::ofstream file;
    std::ostream& os = open_out(file, opt.out_path);

    if (!opt.contains_path.empty()) {
        std::string text;
        if (opt.contains_path == "-") {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            text = buf.str();
        } else {
            std::ifstream in(opt.contains_path);
            if (!in) throw std::runtime_error("cannot open " + opt.contains_path);
            std::ostringstream buf;
            buf << in.rdbuf();
            text = buf.str();
        }
        DecoratedPath p = DecoratedPath::from_json_string(text);
        bool member = family_contains(params, p);
        nlohmann::json j;
        j["member"] = member;
        if (static_cast<int>(p.labels.size()) == p.size()) {
            j["area"] = p.area();
            DinvBreakdown b = p.dinv_breakdown();
            j["dinv"] = b.total();
            j["dinv_breakdown"] = {{"primary", b.primary},
                                   {"secondary", b.secondary},
                                   {"bonus", b.bonus},
                                   {"decorated_valleys", b.decorated}};
            std::ostringstream rw;
            for (int w : p.reading_word()) rw << w;
            j["reading_word"] = rw.str();
            j["shift"] = p.path.shift();
        }
        if (opt.format == "json") {
            os << j.dump() << "\n";
        } else {
            os << "member: " << (member ? "true" : "false") << "\n";
            if (j.contains("area"))
                os << "area: " << j["area"] << "\ndinv: " << j["dinv"]
                   << "\nreading word: " << j["reading_word"].get<std::string>() << "\n";
        }
        return member ? 0 : 1;
    }

    Enumerator en;
    if (!opt.stats_only) {
        enumerate_paths(params, [&](const DecoratedPath& p) {
            MPoly term = MPoly::monomial(1, static_cast<std::uint32_t>(p.dinv()),
                                         static_cast<std::uint32_t>(p.area()));
            en.total += term;
            en.by_r[p.diagonal_touch()] += term;
            ++en.count;
            if (opt.format == "json") {
                os << p.to_json_string(family_name(params.family)) << "\n";
            } else {
                os << p.path.steps() << "  labels=[";
                for (std::size_t i = 0; i < p.labels.size(); ++i)
                    os << (i ? "," : "") << p.labels[i];
                os << "]";
                if (!p.dv.empty()) {
                    os << " dv=[";
                    for (std::size_t i = 0; i < p.dv.size(); ++i) os << (i ? "," : "") << p.dv[i];
                    os << "]";
                }
                os << "  dinv=" << p.dinv() << " area=" << p.area() << " r=" << p.diagonal_touch()
                   << "\n";
            }
        });
    } else {
        en = qt_enumerator(params);
    }
    if (opt.format == "json") {
        nlohmann::json j;
        j["count"] = en.count;
        j["enumerator"] = en.total.str();
        if (opt.refine) {
            nlohmann::json ref = nlohmann::json::object();
            for (const auto& [r, poly] : en.by_r) ref[std::to_string(r)] = poly.str();
            j["refined"] = std::move(ref);
        }
        os << j.dump() << "\n";
    } else {
        os << "count: " << en.count << "\n";
        os << "enumerator: " << en.total.str() << "\n";
        if (opt.refine)
            for (const auto& [r, poly] : en.by_r)
                os << "  r=" << r << ": " << poly.str() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q,t-verification of valley Delta identities on decorated lattice paths"};
    app.require_subcommand(1);

    RunConfig vcfg;
    int vk = -1, vd = -1, vm = -1, vr = -1;
    auto* verify = app.add_subcommand("verify", "run an identity sweep and report per-tuple equality");
    verify->add_option("identity", vcfg.identity, "identity id")
        ->required()
        ->check(CLI::IsMember(IdentityChecker::identity_ids()));
    verify->add_option("--n-max", vcfg.n_max, "sweep bound (combined d+n bound where applicable)");
    verify->add_option("--k", vk, "restrict k");
    verify->add_option("--d", vd, "restrict d");
    verify->add_option("--m", vm, "restrict m");
    verify->add_option("--r", vr, "restrict r");
    verify->add_option("--degree-bound", vcfg.degree_bound, "symmetric-function table bound");
    verify->add_option("--jobs", vcfg.jobs, "parallel workers over parameter tuples");
    verify->add_option("--format", vcfg.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", vcfg.out_path, "write the report stream to FILE");

    EnumerateOptions ecfg;
    auto* enumerate = app.add_subcommand("enumerate", "list a path family and its q,t-enumerator");
    enumerate->add_option("family", ecfg.family, "LD | LSQ | LSQ' | D | SQ'")->required();
    enumerate->add_option("--n", ecfg.n, "positive labels")->required();
    enumerate->add_option("--m", ecfg.m, "zero labels");
    enumerate->add_option("--k", ecfg.k, "decorated contractible valleys");
    enumerate->add_option("--d", ecfg.d, "decorated peaks (peak families)");
    enumerate->add_flag("--refine", ecfg.refine, "print the r-refined enumerators");
    enumerate->add_flag("--stats-only", ecfg.stats_only, "skip the path listing");
    enumerate->add_option("--contains", ecfg.contains_path,
                          "path JSON file ('-' for stdin): membership + statistics");
    enumerate->add_option("--format", ecfg.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    enumerate->add_option("--out", ecfg.out_path, "write output to FILE");

    std::string expr_text_arg, sfmt = "text", sout;
    int sbound = 8;
    auto* symfunc = app.add_subcommand("symfunc", "evaluate a symmetric-function expression");
    symfunc->add_option("expression", expr_text_arg, "e.g. \"inner(nabla(e(3)), e(3))\"")
        ->required();
    symfunc->add_option("--degree-bound", sbound, "symmetric-function table bound");
    symfunc->add_option("--format", sfmt, "text|json")->check(CLI::IsMember({"text", "json"}));
    symfunc->add_option("--out", sout, "write output to FILE");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            if (vk >= 0) vcfg.k = vk;
            if (vd >= 0) vcfg.d = vd;
            if (vm >= 0) vcfg.m = vm;
            if (vr >= 0) vcfg.r = vr;
            return cmd_verify(vcfg);
        }
        if (enumerate->parsed()) return cmd_enumerate(ecfg);
        if (symfunc->parsed()) {
            SymEngine eng(sbound);
            MacdonaldOps mac(eng);
            ExprValue v = eval_expression(eng, mac, expr_text_arg);
            std::ofstream file;
            std::ostream& os = open_out(file, sout);
            os << (sfmt == "json" ? expr_json(eng, v) : expr_text(eng, v)) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
