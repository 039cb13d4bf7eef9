#pragma once

// Command-line front end. run() takes its streams as parameters so tests can
// drive it in-process; tools/pfg.cpp wires it to the real ones.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pfg/pfg.hpp"

namespace pfg::cli {

enum ExitCode { kOk = 0, kDomainError = 1, kUsageError = 2 };

namespace detail {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Restores the global tolerance when a run finishes.
class ToleranceScope {
public:
    ToleranceScope() : saved_(tolerance()) {}
    ~ToleranceScope() { set_tolerance(saved_); }
    ToleranceScope(const ToleranceScope&) = delete;
    ToleranceScope& operator=(const ToleranceScope&) = delete;

private:
    double saved_;
};

inline void apply_env_tolerance() {
    const char* raw = std::getenv("PFG_EPSILON");
    if (raw == nullptr || *raw == '\0') return;
    char* end = nullptr;
    const double eps = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(eps >= 0.0)) {
        throw UsageError(std::string("PFG_EPSILON must be a non-negative decimal, got '") + raw + "'");
    }
    set_tolerance(eps);
}

inline std::string read_source(const std::string& path, std::istream& in) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

inline Graph load(const std::string& path, std::istream& in, std::ostream& err) {
    ParseResult parsed = parse_with_warnings(read_source(path, in));
    for (const auto& w : parsed.warnings) err << Json{{"warning", w}}.dump() << "\n";
    return std::move(parsed.graph);
}

inline bool is_parse_error(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedDocument:
        case ErrorKind::DuplicateVertex:
        case ErrorKind::DuplicateEdge:
        case ErrorKind::DanglingEdge:
        case ErrorKind::SelfLoop:
        case ErrorKind::InvalidLabel:
            return true;
        default:
            return false;
    }
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

inline MorphismKind morphism_kind(const std::string& name) {
    static const std::map<std::string, MorphismKind> kinds = {
        {"homo", MorphismKind::Homomorphism},
        {"iso", MorphismKind::Isomorphism},
        {"weak", MorphismKind::WeakIsomorphism},
        {"coweak", MorphismKind::CoweakIsomorphism},
    };
    return kinds.at(name);
}

inline ComplementVariant complement_variant(const std::string& name) {
    if (name == "strong") return ComplementVariant::Strong;
    if (name == "complete") return ComplementVariant::Complete;
    return ComplementVariant::General;
}

inline Family family(const std::string& name) {
    if (name == "strong") return Family::Strong;
    if (name == "complete") return Family::Complete;
    if (name == "half_strong") return Family::HalfStrong;
    return Family::General;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    detail::ToleranceScope tolerance_scope;

    CLI::App app{"Pythagorean fuzzy graph toolkit", "pfg"};
    app.require_subcommand(1);

    std::string path1;
    std::string path2;

    auto* validate_cmd = app.add_subcommand("validate", "Check a document against the PFG constraints");
    validate_cmd->add_option("graph", path1, "graph document, - for stdin")->required();

    std::string op_name;
    bool force = false;
    auto* op_cmd = app.add_subcommand("op", "Apply a graph operation");
    op_cmd->add_option("operation", op_name)
        ->required()
        ->check(CLI::IsMember({"cartesian", "compose", "union", "join", "complement",
                               "strong-complement", "complete-complement"}));
    op_cmd->add_option("g1", path1)->required();
    op_cmd->add_option("g2", path2);
    op_cmd->add_flag("--force", force, "skip the strong/complete precondition");

    auto* classify_cmd = app.add_subcommand("classify", "Strength and completeness flags");
    classify_cmd->add_option("graph", path1)->required();

    bool strong_sums = false;
    auto* sums_cmd = app.add_subcommand("sums", "Degree-sum identities");
    sums_cmd->add_option("graph", path1)->required();
    sums_cmd->add_flag("--strong", strong_sums, "use the un-halved form for strong graphs");

    std::string kind_name;
    std::size_t cap = SearchOptions{}.max_vertices;
    bool require_found = false;
    auto* iso_cmd = app.add_subcommand("iso", "Search for a morphism g1 -> g2");
    iso_cmd->add_option("g1", path1)->required();
    iso_cmd->add_option("g2", path2)->required();
    iso_cmd->add_option("--kind", kind_name)
        ->required()
        ->check(CLI::IsMember({"homo", "iso", "weak", "coweak"}));
    iso_cmd->add_option("--cap", cap, "largest source graph to search")->check(CLI::NonNegativeNumber);
    iso_cmd->add_flag("--require", require_found, "exit 1 when no morphism exists");

    std::string variant_name = "general";
    auto* selfcomp_cmd = app.add_subcommand("selfcomp", "Is the graph isomorphic to its complement");
    selfcomp_cmd->add_option("graph", path1)->required();
    selfcomp_cmd->add_option("--variant", variant_name)
        ->check(CLI::IsMember({"general", "strong", "complete"}));
    selfcomp_cmd->add_option("--cap", cap)->check(CLI::NonNegativeNumber);

    GenConfig gen_cfg;
    std::string family_name = "general";
    int quantize = -1;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random PFG");
    gen_cmd->add_option("--seed", gen_cfg.seed)->required();
    gen_cmd->add_option("--n", gen_cfg.n_vertices)->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--p", gen_cfg.edge_probability)->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_option("--family", family_name)
        ->check(CLI::IsMember({"general", "strong", "complete", "half_strong"}));
    gen_cmd->add_option("--quantize", quantize, "decimal places")->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--prefix", gen_cfg.label_prefix, "vertex label prefix");

    auto* dot_cmd = app.add_subcommand("dot", "Export DOT");
    dot_cmd->add_option("graph", path1)->required();

    std::vector<const char*> argv;
    argv.push_back("pfg");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        detail::emit(err, {{"error", "UsageError"}, {"message", e.what()}});
        return kUsageError;
    }

    try {
        detail::apply_env_tolerance();

        if (*validate_cmd) {
            ParseResult parsed = parse_candidate(detail::read_source(path1, in));
            for (const auto& w : parsed.warnings) err << Json{{"warning", w}}.dump() << "\n";
            const ValidationReport report = validate(parsed.graph);
            detail::emit(out, to_json(report));
            return report.valid() ? kOk : kDomainError;
        }
        if (*op_cmd) {
            const bool binary = op_name == "cartesian" || op_name == "compose" ||
                                op_name == "union" || op_name == "join";
            if (binary && path2.empty()) throw detail::UsageError("op " + op_name + " takes two graphs");
            if (!binary && !path2.empty()) throw detail::UsageError("op " + op_name + " takes one graph");
            const Graph g1 = detail::load(path1, in, err);
            Graph result;
            if (binary) {
                const Graph g2 = detail::load(path2, in, err);
                if (op_name == "cartesian") result = cartesian_product(g1, g2);
                else if (op_name == "compose") result = composition(g1, g2);
                else if (op_name == "union") result = graph_union(g1, g2);
                else result = join(g1, g2);
            } else if (op_name == "complement") {
                result = complement(g1);
            } else if (op_name == "strong-complement") {
                result = strong_complement(g1, force);
            } else {
                result = complete_complement(g1, force);
            }
            out << render(result);
            return kOk;
        }
        if (*classify_cmd) {
            detail::emit(out, to_json(classify(detail::load(path1, in, err))));
            return kOk;
        }
        if (*sums_cmd) {
            const Graph g = detail::load(path1, in, err);
            detail::emit(out, to_json(strong_sums ? strong_sum_identity(g) : sum_identity(g)));
            return kOk;
        }
        if (*iso_cmd) {
            const Graph g1 = detail::load(path1, in, err);
            const Graph g2 = detail::load(path2, in, err);
            const MorphismReport report =
                find_morphism(g1, g2, detail::morphism_kind(kind_name), SearchOptions{cap});
            detail::emit(out, to_json(report));
            return (require_found && !report.found) ? kDomainError : kOk;
        }
        if (*selfcomp_cmd) {
            const Graph g = detail::load(path1, in, err);
            detail::emit(out, to_json(is_self_complementary(g, detail::complement_variant(variant_name),
                                                            SearchOptions{cap})));
            return kOk;
        }
        if (*gen_cmd) {
            gen_cfg.family = detail::family(family_name);
            if (quantize >= 0) gen_cfg.quantize = quantize;
            out << render(generate(gen_cfg));
            return kOk;
        }
        if (*dot_cmd) {
            out << to_dot(detail::load(path1, in, err));
            return kOk;
        }
    } catch (const detail::UsageError& e) {
        detail::emit(err, {{"error", "UsageError"}, {"message", e.what()}});
        return kUsageError;
    } catch (const Error& e) {
        detail::emit(err, error_json(e));
        return detail::is_parse_error(e.kind()) ? kUsageError : kDomainError;
    } catch (const std::invalid_argument& e) {
        detail::emit(err, {{"error", "UsageError"}, {"message", e.what()}});
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace pfg::cli
