#include "nilbu/cli.hpp"

#include "nilbu/bu_index.hpp"
#include "nilbu/coverings.hpp"
#include "nilbu/io.hpp"
#include "nilbu/sweep.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace nilbu::cli {

namespace {

enum class Format { Text, Json };

struct Options {
    Format format = Format::Text;
    std::string manifold;
    std::string phi;
    Int b_max = 16;
};

void add_format(CLI::App* cmd, Options& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}},
            CLI::ignore_case));
}

unsigned threads_from_env() {
    const char* raw = std::getenv("NILBU_THREADS");
    if (raw == nullptr)
        return 0;
    try {
        return static_cast<unsigned>(std::stoul(raw));
    } catch (const std::exception&) {
        return 0;
    }
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

int cmd_classify(const Options& o, std::ostream& out) {
    const SeifertInvariant inv = normalize(parse_loose_seifert(o.manifold));
    const NilManifold m = classify(inv);
    if (o.format == Format::Json) {
        out << Json{{"input", o.manifold},
                    {"normalized", to_string(inv)},
                    {"manifold", to_string(m)},
                    {"euler_number", euler_number(inv).to_string()}}
                   .dump(2)
            << '\n';
    } else {
        out << to_string(m) << '\n';
    }
    return Success;
}

int cmd_h1(const Options& o, std::ostream& out) {
    const NilManifold m = parse_manifold(o.manifold);
    const AbelianGroup g = h1(m);
    if (o.format == Format::Json) {
        out << to_json(g).dump(2) << '\n';
        return Success;
    }
    out << "H1(" << to_string(m) << ") = " << describe(g) << '\n';
    for (std::size_t j = 0; j < g.generator_names.size(); ++j) {
        out << "  " << pad(g.generator_names[j], 3) << " -> (";
        for (std::size_t k = 0; k < g.gen_images[j].size(); ++k)
            out << (k ? ", " : "") << g.gen_images[j][k];
        out << ")\n";
    }
    return Success;
}

int cmd_epis(const Options& o, std::ostream& out) {
    const NilManifold m = parse_manifold(o.manifold);
    const auto epis = enumerate_epis(m);
    const auto partition = equivalence_classes(m);
    if (o.format == Format::Json) {
        Json list = Json::array();
        for (const auto& phi : epis)
            list.push_back(Json{{"phi", to_json(phi)}, {"class", partition.class_of(phi)}});
        Json classes = Json::array();
        for (const auto& cls : partition.classes) {
            Json members = Json::array();
            for (const auto& phi : cls.members)
                members.push_back(to_json(phi));
            classes.push_back(
                Json{{"representative", to_json(cls.representative)}, {"members", members}});
        }
        out << Json{{"manifold", to_string(m)}, {"epimorphisms", list}, {"classes", classes}}.dump(2)
            << '\n';
        return Success;
    }
    out << to_string(m) << ": " << epis.size() << " epimorphism(s) onto Z_2, "
        << partition.classes.size() << " class(es)\n";
    for (std::size_t i = 0; i < epis.size(); ++i)
        out << "  [" << i << "] " << pad(to_string(epis[i]), 28) << " class "
            << partition.class_of(epis[i]) << '\n';
    return Success;
}

int cmd_cover(const Options& o, std::ostream& out) {
    const NilManifold m = parse_manifold(o.manifold);
    const Z2Char phi = parse_character(o.phi, m);
    const auto partition = equivalence_classes(m);
    const Z2Char rep = partition.classes[partition.class_of(phi)].representative;
    const CoveringDescriptor d{m, rep, double_cover(m, phi), z2_index(m, phi)};
    if (o.format == Format::Json) {
        out << to_json(d).dump(2) << '\n';
        return Success;
    }
    const CoverCheck check = check_cover(m, phi, d.cover);
    out << to_string(d.cover) << " -> " << to_string(m) << "  (phi class " << to_string(rep)
        << ", index " << d.index << ")\n";
    out << "  kernel H1 " << describe(check.kernel_h1) << ", cover H1 "
        << describe(check.claimed_h1) << ", e " << check.base_euler << " -> "
        << check.claimed_euler << (check.ok() ? "  [verified]" : "  [MISMATCH]") << '\n';
    return check.ok() ? Success : VerificationFailure;
}

int cmd_index(const Options& o, std::ostream& out) {
    const NilManifold m = parse_manifold(o.manifold);
    const Z2Char phi = parse_character(o.phi, m);
    const IndexTrace trace = explain_index(m, phi);
    const auto listing = trace.index == 3   ? index_three_listing(m, phi)
                         : trace.index == 1 ? index_one_listing(m, phi)
                                            : std::optional<std::string>{};
    if (o.format == Format::Json) {
        Json j{{"manifold", to_string(m)},
               {"phi", to_json(phi)},
               {"index", trace.index},
               {"criterion", trace.criterion}};
        j["listing"] = listing ? Json(*listing) : Json(nullptr);
        out << j.dump(2) << '\n';
        return Success;
    }
    out << trace.index << '\n' << "  " << trace.criterion << '\n';
    if (listing)
        out << "  listed: " << *listing << '\n';
    return Success;
}

int cmd_involutions(const Options& o, std::ostream& out) {
    const NilManifold m = parse_manifold(o.manifold);
    const auto quotients = quotients_of(m);
    const std::string note =
        quotients.empty() ? to_string(m) + " does not support any free involution" : "";
    if (o.format == Format::Json) {
        Json list = Json::array();
        for (const auto& d : quotients)
            list.push_back(to_json(d));
        Json j{{"manifold", to_string(m)}, {"quotients", list}};
        if (!note.empty())
            j["note"] = note;
        out << j.dump(2) << '\n';
        return Success;
    }
    if (quotients.empty()) {
        out << note << '\n';
        return Success;
    }
    out << to_string(m) << " double covers " << quotients.size() << " manifold(s):\n";
    out << "  " << pad("base", 18) << pad("phi class", 30) << "index\n";
    for (const auto& d : quotients)
        out << "  " << pad(to_string(d.base), 18) << pad(to_string(d.phi), 30) << d.index << '\n';
    return Success;
}

std::string linear(Int slope, Int offset) {
    std::ostringstream os;
    if (slope == 1)
        os << 'b';
    else
        os << slope << 'b';
    if (offset > 0)
        os << '+' << offset;
    else if (offset < 0)
        os << offset;
    return os.str();
}

int cmd_table(const Options& o, std::ostream& out) {
    Json rows = Json::array();
    if (o.format == Format::Text)
        out << pad("family", 16) << pad("g'", 4) << pad("eps", 5) << pad("pairs", 22)
            << pad("b_min", 7) << pad("c", 8) << "d\n";
    for (Family f : kAllFamilies)
        for (const auto& option : family_options(f)) {
            const auto pairs = family_pairs(f, option);
            const Int lowest = b_min(pairs);
            const NilManifold first(f, lowest, option);
            const NilManifold second(f, lowest + 1, option);
            const CdInvariants c0 = cd_invariants(first.expand());
            const CdInvariants c1 = cd_invariants(second.expand());
            const Int slope = c1.c - c0.c;
            const Int offset = c0.c - slope * lowest;
            const SeifertInvariant inv = first.expand();
            std::string label = std::string(family_tag(f)) + "(b";
            for (std::size_t i = 0; i < option.size(); ++i)
                label += (i == 0 ? ";" : ",") + std::to_string(option[i]);
            label += ")";
            if (o.format == Format::Text) {
                std::string ps;
                for (const auto& p : inv.pairs())
                    ps += "(" + std::to_string(p.a) + "," + std::to_string(p.beta) + ")";
                out << pad(label, 16) << pad(std::to_string(inv.g_prime()), 4)
                    << pad(inv.epsilon_sign() > 0 ? "+1" : "-1", 5) << pad(ps.empty() ? "-" : ps, 22)
                    << pad(std::to_string(lowest), 7) << pad(linear(slope, offset), 8) << c0.d
                    << '\n';
                continue;
            }
            Json values = Json::array();
            for (Int b = lowest; b <= lowest + o.b_max; ++b) {
                const CdInvariants cd = cd_invariants(NilManifold(f, b, option).expand());
                values.push_back(Json{{"b", b}, {"c", cd.c}, {"d", cd.d}});
            }
            rows.push_back(Json{{"family", label},
                                {"g_prime", inv.g_prime()},
                                {"epsilon", inv.epsilon_sign()},
                                {"invariant", to_string(inv)},
                                {"b_min", lowest},
                                {"c", linear(slope, offset)},
                                {"d", c0.d},
                                {"values", values}});
        }
    if (o.format == Format::Json)
        out << rows.dump(2) << '\n';
    return Success;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const VerifyReport report = run_verification(o.b_max, threads_from_env());
    if (o.format == Format::Json) {
        Json checks = Json::array();
        for (const auto& c : report.checks)
            checks.push_back(Json{{"name", c.name},
                                  {"passed", c.passed},
                                  {"failed", c.failed},
                                  {"failures", c.failures}});
        out << Json{{"manifolds", report.manifolds}, {"ok", report.ok()}, {"checks", checks}}.dump(2)
            << '\n';
    } else {
        out << "swept " << report.manifolds << " manifolds (b from b_min to b_min+" << o.b_max
            << ")\n";
        for (const auto& c : report.checks) {
            out << "  " << (c.ok() ? "PASS " : "FAIL ") << pad(c.name, 14) << c.passed
                << " passed, " << c.failed << " failed\n";
            for (const auto& msg : c.failures)
                out << "      " << msg << '\n';
        }
        out << (report.ok() ? "all checks passed" : "verification FAILED") << '\n';
    }
    return report.ok() ? Success : VerificationFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Nil-geometry 3-manifolds: homology, double coverings and Z2-indices", "nilbu"};
    app.require_subcommand(1);
    Options opts;

    auto* classify_cmd = app.add_subcommand("classify", "Classify a Seifert invariant SF(...)");
    classify_cmd->add_option("invariant", opts.manifold, "SF(b; eps; g'; (a1,b1)...)")->required();

    auto* h1_cmd = app.add_subcommand("h1", "First homology group");
    auto* epis_cmd = app.add_subcommand("epis", "Epimorphisms onto Z_2 and their classes");
    auto* cover_cmd = app.add_subcommand("cover", "Double covering of a characteristic class");
    auto* index_cmd = app.add_subcommand("index", "Z2-index of a double covering");
    auto* invol_cmd = app.add_subcommand("involutions", "Free involutions (2-quotients)");
    for (auto* cmd : {h1_cmd, epis_cmd, cover_cmd, index_cmd, invol_cmd})
        cmd->add_option("manifold", opts.manifold, "e.g. T(2), 236(0;1,5) or SF(...)")->required();
    for (auto* cmd : {cover_cmd, index_cmd})
        cmd->add_option("--phi", opts.phi, "JSON {\"s\":[..],\"v\":[..],\"h\":k} or epimorphism index")
            ->required();

    auto* table_cmd = app.add_subcommand("table", "Table of Nil manifolds with c, d, b_min");
    auto* verify_cmd = app.add_subcommand("verify", "Run the full cross-check sweep");
    for (auto* cmd : {table_cmd, verify_cmd})
        cmd->add_option("--b-max", opts.b_max, "Sweep b from b_min to b_min + k")
            ->check(CLI::NonNegativeNumber);
    for (auto* cmd : {classify_cmd, h1_cmd, epis_cmd, cover_cmd, index_cmd, invol_cmd, table_cmd,
                      verify_cmd})
        add_format(cmd, opts);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return DomainError;
    }

    try {
        if (*classify_cmd)
            return cmd_classify(opts, out);
        if (*h1_cmd)
            return cmd_h1(opts, out);
        if (*epis_cmd)
            return cmd_epis(opts, out);
        if (*cover_cmd)
            return cmd_cover(opts, out);
        if (*index_cmd)
            return cmd_index(opts, out);
        if (*invol_cmd)
            return cmd_involutions(opts, out);
        if (*table_cmd)
            return cmd_table(opts, out);
        if (*verify_cmd)
            return cmd_verify(opts, out);
    } catch (const NotNilError& e) {
        err << "NotNil: " << e.what() << '\n';
        return DomainError;
    } catch (const OrientationError& e) {
        err << "OrientationError: " << e.what() << '\n';
        return DomainError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return DomainError;
    }
    return DomainError;
}

} // namespace nilbu::cli
