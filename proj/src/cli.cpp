#include "paracon/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "paracon/error.hpp"
#include "paracon/kb_io.hpp"

namespace paracon {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

Rational parse_threshold(const std::string& text) {
    Rational theta;
    try {
        theta = parse_rational(text);
    } catch (const PreconditionError& e) {
        throw UsageError(e.what());
    }
    if (theta < Rational(-1) || theta > Rational(1))
        throw UsageError("threshold " + text + " is outside [-1, 1]");
    return theta;
}

template <class Enum>
CLI::Option* add_enum(CLI::App* cmd, const std::string& name, Enum& target, std::map<std::string, Enum> values,
                      const std::string& help) {
    return cmd->add_option(name, target, help)->transform(CLI::CheckedTransformer(values, CLI::ignore_case));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Paraconsistent similarity, contradiction repair and threshold clustering over literal-set "
                 "knowledge bases."};
    app.name(args.empty() ? "paracon" : args.front());
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    std::string file, id1, id2, theta_text = "2/5";
    std::vector<std::string> theta_list;
    JaccardMode jaccard_mode = JaccardMode::PositiveOnly;
    bool enumerate = false;
    RepairOptions repair_options;

    add_enum<OutputFormat>(&app, "--format", config.output_format,
                           {{"human", OutputFormat::Human}, {"tsv", OutputFormat::Tsv},
                            {"json", OutputFormat::Structured}, {"structured", OutputFormat::Structured}},
                           "Output format: human, tsv or json");
    app.add_option("--precision", config.decimal_precision, "Fractional digits of decimal renderings")
        ->check(CLI::Range(0, 18));

    const std::map<std::string, RepairPolicy> policies{{"drop-negative", RepairPolicy::DropNegative},
                                                       {"drop-positive", RepairPolicy::DropPositive},
                                                       {"enumerate", RepairPolicy::Enumerate}};

    auto* sim = app.add_subcommand("sim", "S+, D± and S* for a pair, with shared and contradictory listings");
    auto* matrix = app.add_subcommand("matrix", "Pairwise S* matrix of the whole knowledge base");
    auto* jac = app.add_subcommand("jaccard", "Jaccard similarity of a pair");
    auto* extract = app.add_subcommand("extract", "Contradiction extractor E(K) and repairability");
    auto* repair = app.add_subcommand("repair", "Minimal repairs of an entity");
    auto* xirp = app.add_subcommand("xirp", "S* after repairing both entities");
    auto* cluster = app.add_subcommand("cluster", "Super-categories at a threshold");
    auto* hierarchy = app.add_subcommand("hierarchy", "Super-categories across ascending thresholds");
    auto* compare = app.add_subcommand("compare", "S* against Jaccard for a pair");

    for (auto* cmd : {sim, matrix, jac, extract, repair, xirp, cluster, hierarchy, compare})
        cmd->add_option("file", file, "Knowledge base file")->required();
    for (auto* cmd : {sim, jac, xirp, compare}) {
        cmd->add_option("id1", id1, "First entity id")->required();
        cmd->add_option("id2", id2, "Second entity id")->required();
    }
    for (auto* cmd : {extract, repair}) cmd->add_option("id", id1, "Entity id")->required();

    add_enum<JaccardMode>(jac, "--mode", jaccard_mode,
                          {{"positive", JaccardMode::PositiveOnly}, {"all", JaccardMode::AllLiterals}},
                          "positive (atoms of positive literals) or all (full literal sets)");
    for (auto* cmd : {repair, xirp})
        add_enum<RepairPolicy>(cmd, "--policy", config.repair_policy, policies, "drop-negative, drop-positive or enumerate");
    repair->add_flag("--enumerate", enumerate, "Same as --policy enumerate");
    repair->add_option("--limit", repair_options.enumerate_limit, "Maximum number of enumerated plans");
    for (auto* cmd : {extract, repair, xirp})
        cmd->add_flag("--strict", repair_options.strict, "Treat the empty entity as irreparable");
    cluster->add_option("--theta", theta_text, "Threshold in [-1, 1], e.g. 0.4 or 2/5");
    add_enum<ClusterMode>(cluster, "--mode", config.mode,
                          {{"components", ClusterMode::ConnectedComponents}, {"clique", ClusterMode::StrictClique}},
                          "components or clique");
    hierarchy->add_option("--thetas", theta_list, "Comma-separated ascending thresholds")
        ->required()
        ->delimiter(',');

    try {
        std::vector<std::string> rest(args.empty() ? args.end() : args.begin() + 1, args.end());
        std::reverse(rest.begin(), rest.end());
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << app.get_name() << ": " << e.what() << '\n';
        return kExitUsage;
    }

    const RenderOptions render{config.output_format, config.decimal_precision};
    std::vector<Rational> thresholds;
    try {
        if (cluster->parsed()) config.theta = parse_threshold(theta_text);
        for (const auto& t : theta_list) {
            thresholds.push_back(parse_threshold(t));
            if (thresholds.size() > 1 && !(thresholds[thresholds.size() - 2] < thresholds.back()))
                throw UsageError("thresholds must be strictly ascending");
        }
        if (enumerate) config.repair_policy = RepairPolicy::Enumerate;
    } catch (const UsageError& e) {
        err << app.get_name() << ": " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        const KnowledgeBase kb = load_kb_file(file);

        if (sim->parsed()) {
            out << render_breakdown("sim", id1, id2, s_star(kb.at(id1), kb.at(id2)), render);
        } else if (matrix->parsed()) {
            out << render_matrix(kb, similarity_matrix(kb), render);
        } else if (jac->parsed()) {
            out << render_jaccard(id1, id2, jaccard_mode, jaccard(kb.at(id1), kb.at(id2), jaccard_mode), render);
        } else if (extract->parsed()) {
            const auto& k = kb.at(id1);
            out << render_extraction(k, extract_contradictions(k), contradictory_atoms(k),
                                     is_repairable(k, repair_options), render);
        } else if (repair->parsed()) {
            const auto& k = kb.at(id1);
            out << render_repair(k, minimal_repairs(k, config.repair_policy, repair_options), render);
        } else if (xirp->parsed()) {
            out << render_breakdown("xirp", id1, id2,
                                    xi_rp(kb.at(id1), kb.at(id2), config.repair_policy, repair_options), render);
        } else if (cluster->parsed()) {
            const auto scores = score_matrix(kb);
            const auto partition = build_supercategories(kb, scores, config.theta, config.mode);
            out << render_partition(partition, verify_disjunction(partition, kb, scores), render);
        } else if (hierarchy->parsed()) {
            out << render_hierarchy(build_hierarchy(kb, thresholds), render);
        } else if (compare->parsed()) {
            const auto& a = kb.at(id1);
            const auto& b = kb.at(id2);
            out << render_compare(id1, id2, s_star(a, b), jaccard(a, b, JaccardMode::PositiveOnly),
                                  jaccard(a, b, JaccardMode::AllLiterals), render);
        }
    } catch (const Error& e) {
        err << app.get_name() << ": " << e.what() << '\n';
        return kExitData;
    }
    return kExitOk;
}

}  // namespace paracon
