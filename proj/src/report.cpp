#include "paracon/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace paracon {

using nlohmann::ordered_json;

namespace {

template <class Set>
std::string join(const Set& items, const char* sep = ", ") {
    std::string out;
    for (const auto& item : items) {
        if (!out.empty()) out += sep;
        out += item.to_string();
    }
    return out;
}

// "label (n): a, b" without a dangling space when empty.
template <class Set>
std::string listing(const char* label, const Set& items) {
    std::string out = std::string(label) + " (" + std::to_string(items.size()) + "):";
    if (!items.empty()) out += " " + join(items);
    return out;
}

std::string join_ids(const Block& block, const char* sep) {
    std::string out;
    for (const auto& id : block) {
        if (!out.empty()) out += sep;
        out += id;
    }
    return out;
}

template <class Set>
ordered_json json_items(const Set& items) {
    ordered_json arr = ordered_json::array();
    for (const auto& item : items) arr.push_back(item.to_string());
    return arr;
}

ordered_json json_value(const Rational& v, int precision) {
    return ordered_json{{"fraction", format_fraction(v)}, {"decimal", format_decimal(v, precision)}};
}

ordered_json document(const char* command) {
    return ordered_json{{"version", kReportVersion}, {"command", command}};
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string blocks_line(const SuperCategoryPartition& p) {
    std::string out;
    for (const auto& block : p.blocks) {
        if (!out.empty()) out += " | ";
        out += "{" + join_ids(block, ",") + "}";
    }
    return out;
}

ordered_json json_blocks(const SuperCategoryPartition& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& block : p.blocks) arr.push_back(block);
    return arr;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

const char* sign_word(const Rational& v) {
    switch (sign(v)) {
        case 1: return "positive";
        case -1: return "negative";
        default: return "zero";
    }
}

}  // namespace

std::string to_string(ClusterMode mode) {
    return mode == ClusterMode::ConnectedComponents ? "components" : "clique";
}

std::string to_string(RepairPolicy policy) {
    switch (policy) {
        case RepairPolicy::DropNegative: return "drop-negative";
        case RepairPolicy::DropPositive: return "drop-positive";
        case RepairPolicy::Enumerate: return "enumerate";
    }
    return "unknown";
}

std::string to_string(JaccardMode mode) { return mode == JaccardMode::PositiveOnly ? "positive" : "all"; }

std::string render_value(const Rational& value, int precision) {
    return format_fraction(value) + " (" + format_decimal(value, precision) + ")";
}

std::string render_breakdown(const std::string& title, const std::string& id1, const std::string& id2,
                             const SimilarityBreakdown& b, const RenderOptions& opt) {
    const auto& part = b.partition;
    switch (opt.format) {
        case OutputFormat::Structured: {
            auto j = document(title.c_str());
            j["entities"] = {id1, id2};
            j["shared"] = json_items(part.shared);
            j["contradictory"] = json_items(part.contradictory);
            j["total"] = json_items(part.total);
            j["s_plus"] = json_value(b.s_plus, opt.precision);
            j["d_pm"] = json_value(b.d_pm, opt.precision);
            j["s_star"] = json_value(b.s_star, opt.precision);
            return dump(j);
        }
        case OutputFormat::Tsv: {
            std::ostringstream out;
            out << "first\tsecond\tshared\tcontradictory\ttotal\ts_plus\td_pm\ts_star\ts_star_decimal\n"
                << id1 << '\t' << id2 << '\t' << part.shared.size() << '\t' << part.contradictory.size() << '\t'
                << part.total.size() << '\t' << format_fraction(b.s_plus) << '\t' << format_fraction(b.d_pm) << '\t'
                << format_fraction(b.s_star) << '\t' << format_decimal(b.s_star, opt.precision) << '\n';
            return out.str();
        }
        case OutputFormat::Human: break;
    }
    std::ostringstream out;
    out << id1 << " vs " << id2 << '\n'
        << listing("shared", part.shared) << '\n'
        << listing("contradictory", part.contradictory) << '\n'
        << listing("total", part.total) << '\n'
        << "S+ = " << render_value(b.s_plus, opt.precision) << '\n'
        << "D± = " << render_value(b.d_pm, opt.precision) << '\n'
        << "S* = " << render_value(b.s_star, opt.precision) << '\n';
    return out.str();
}

std::string render_matrix(const KnowledgeBase& kb, const SimilarityMatrix& m, const RenderOptions& opt) {
    const std::size_t n = m.size();
    switch (opt.format) {
        case OutputFormat::Structured: {
            auto j = document("matrix");
            ordered_json ids = ordered_json::array();
            for (const auto& e : kb) ids.push_back(e.id());
            j["entities"] = ids;
            ordered_json rows = ordered_json::array();
            for (std::size_t i = 0; i < n; ++i) {
                ordered_json row = ordered_json::array();
                for (std::size_t k = 0; k < n; ++k) row.push_back(json_value(m(i, k).s_star, opt.precision));
                rows.push_back(row);
            }
            j["s_star"] = rows;
            return dump(j);
        }
        case OutputFormat::Tsv: {
            std::ostringstream out;
            out << "first\tsecond\ts_plus\td_pm\ts_star\ts_star_decimal\n";
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k)
                    out << kb[i].id() << '\t' << kb[k].id() << '\t' << format_fraction(m(i, k).s_plus) << '\t'
                        << format_fraction(m(i, k).d_pm) << '\t' << format_fraction(m(i, k).s_star) << '\t'
                        << format_decimal(m(i, k).s_star, opt.precision) << '\n';
            return out.str();
        }
        case OutputFormat::Human: break;
    }

    std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
    cells[0][0] = "S*";
    for (std::size_t i = 0; i < n; ++i) {
        cells[0][i + 1] = kb[i].id();
        cells[i + 1][0] = kb[i].id();
        for (std::size_t k = 0; k < n; ++k) cells[i + 1][k + 1] = render_value(m(i, k).s_star, opt.precision);
    }
    std::vector<std::size_t> width(n + 1, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c <= n; ++c) width[c] = std::max(width[c], row[c].size());

    std::string out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c <= n; ++c) line += (c ? "  " : "") + pad(row[c], width[c]);
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string render_jaccard(const std::string& id1, const std::string& id2, JaccardMode mode, const Rational& value,
                           const RenderOptions& opt) {
    switch (opt.format) {
        case OutputFormat::Structured: {
            auto j = document("jaccard");
            j["entities"] = {id1, id2};
            j["mode"] = to_string(mode);
            j["jaccard"] = json_value(value, opt.precision);
            return dump(j);
        }
        case OutputFormat::Tsv:
            return "first\tsecond\tmode\tjaccard\tjaccard_decimal\n" + id1 + "\t" + id2 + "\t" + to_string(mode) +
                   "\t" + format_fraction(value) + "\t" + format_decimal(value, opt.precision) + "\n";
        case OutputFormat::Human: break;
    }
    return "J(" + id1 + ", " + id2 + ") [" + to_string(mode) + "] = " + render_value(value, opt.precision) + "\n";
}

std::string render_extraction(const Entity& k, const LiteralSet& extracted, const AtomSet& atoms, bool repairable,
                              const RenderOptions& opt) {
    switch (opt.format) {
        case OutputFormat::Structured: {
            auto j = document("extract");
            j["entity"] = k.id();
            j["extracted"] = json_items(extracted);
            j["contradictory_atoms"] = json_items(atoms);
            j["consistent"] = extracted.empty();
            j["repairable"] = repairable;
            return dump(j);
        }
        case OutputFormat::Tsv:
            return "entity\textracted\tcontradictory_atoms\tconsistent\trepairable\n" + k.id() + "\t" +
                   join(extracted, ",") + "\t" + join(atoms, ",") + "\t" + (extracted.empty() ? "true" : "false") +
                   "\t" + (repairable ? "true" : "false") + "\n";
        case OutputFormat::Human: break;
    }
    std::ostringstream out;
    out << "E(" << k.id() << ") = {" << join(extracted) << "}\n"
        << listing("contradictory atoms", atoms) << '\n'
        << "consistent: " << (extracted.empty() ? "yes" : "no") << '\n'
        << "repairable: " << (repairable ? "yes" : "no") << '\n';
    return out.str();
}

std::string render_repair(const Entity& k, const RepairReport& report, const RenderOptions& opt) {
    switch (opt.format) {
        case OutputFormat::Structured: {
            auto j = document("repair");
            j["entity"] = k.id();
            j["extracted"] = json_items(report.extracted);
            j["contradictory_atoms"] = json_items(report.contradictory_atoms);
            j["minimal_size"] = report.minimal_size;
            j["repairable"] = report.repairable;
            j["truncated"] = report.truncated;
            ordered_json plans = ordered_json::array();
            for (const auto& plan : report.plans) {
                plans.push_back({{"policy", to_string(plan.policy)},
                                 {"removals", json_items(plan.removals)},
                                 {"result", json_items(apply_repair(k, plan).literals())}});
            }
            j["plans"] = plans;
            return dump(j);
        }
        case OutputFormat::Tsv: {
            std::string out = "entity\tplan\tpolicy\tremovals\tresult\n";
            for (std::size_t i = 0; i < report.plans.size(); ++i) {
                const auto& plan = report.plans[i];
                out += k.id() + "\t" + std::to_string(i + 1) + "\t" + to_string(plan.policy) + "\t" +
                       join(plan.removals, ",") + "\t" + join(apply_repair(k, plan).literals(), ",") + "\n";
            }
            return out;
        }
        case OutputFormat::Human: break;
    }
    std::ostringstream out;
    out << "E(" << k.id() << ") = {" << join(report.extracted) << "}\n"
        << "repairable: " << (report.repairable ? "yes" : "no") << '\n'
        << "minimal repair size: " << report.minimal_size << '\n'
        << "plans: " << report.plans.size() << (report.truncated ? " (truncated)" : "") << '\n';
    for (std::size_t i = 0; i < report.plans.size(); ++i) {
        const auto& plan = report.plans[i];
        out << "  " << i + 1 << ". remove {" << join(plan.removals) << "} -> {"
            << join(apply_repair(k, plan).literals()) << "}\n";
    }
    return out.str();
}

std::string render_partition(const SuperCategoryPartition& p, const DisjunctionReport& check,
                             const RenderOptions& opt) {
    switch (opt.format) {
        case OutputFormat::Structured: {
            auto j = document("cluster");
            j["theta"] = json_value(p.theta, opt.precision);
            j["mode"] = to_string(p.mode);
            j["blocks"] = json_blocks(p);
            ordered_json violations = ordered_json::array();
            for (const auto& v : check.violations)
                violations.push_back({{"first", v.first}, {"second", v.second},
                                      {"s_star", json_value(v.s_star, opt.precision)}});
            j["disjunction"] = {{"pairs_checked", check.pairs_checked}, {"violations", violations}};
            return dump(j);
        }
        case OutputFormat::Tsv: {
            std::string out = "block\tentity\n";
            for (std::size_t b = 0; b < p.blocks.size(); ++b)
                for (const auto& id : p.blocks[b]) out += std::to_string(b + 1) + "\t" + id + "\n";
            return out;
        }
        case OutputFormat::Human: break;
    }
    std::ostringstream out;
    out << "theta = " << render_value(p.theta, opt.precision) << ", mode = " << to_string(p.mode) << '\n'
        << "blocks: " << blocks_line(p) << '\n';
    if (check.holds()) {
        out << "disjunction: holds (" << check.pairs_checked << " cross-block pairs checked)\n";
    } else {
        out << "disjunction: " << check.violations.size() << " violation(s)\n";
        for (const auto& v : check.violations)
            out << "  " << v.first << ", " << v.second << ": S* = " << render_value(v.s_star, opt.precision) << '\n';
    }
    return out.str();
}

std::string render_hierarchy(const HierarchyTrace& trace, const RenderOptions& opt) {
    switch (opt.format) {
        case OutputFormat::Structured: {
            auto j = document("hierarchy");
            ordered_json levels = ordered_json::array();
            for (const auto& p : trace.partitions)
                levels.push_back({{"theta", json_value(p.theta, opt.precision)}, {"blocks", json_blocks(p)}});
            j["levels"] = levels;
            return dump(j);
        }
        case OutputFormat::Tsv: {
            std::string out = "theta\tblock\tentity\n";
            for (const auto& p : trace.partitions)
                for (std::size_t b = 0; b < p.blocks.size(); ++b)
                    for (const auto& id : p.blocks[b])
                        out += format_fraction(p.theta) + "\t" + std::to_string(b + 1) + "\t" + id + "\n";
            return out;
        }
        case OutputFormat::Human: break;
    }
    std::string out;
    for (const auto& p : trace.partitions)
        out += "theta = " + render_value(p.theta, opt.precision) + ": " + blocks_line(p) + "\n";
    return out;
}

std::string render_compare(const std::string& id1, const std::string& id2, const SimilarityBreakdown& b,
                           const Rational& jaccard_positive, const Rational& jaccard_all, const RenderOptions& opt) {
    switch (opt.format) {
        case OutputFormat::Structured: {
            auto j = document("compare");
            j["entities"] = {id1, id2};
            j["s_star"] = json_value(b.s_star, opt.precision);
            j["jaccard_positive"] = json_value(jaccard_positive, opt.precision);
            j["jaccard_all"] = json_value(jaccard_all, opt.precision);
            j["opposite_signs"] = sign(b.s_star) * sign(jaccard_positive) < 0;
            return dump(j);
        }
        case OutputFormat::Tsv:
            return "measure\tfraction\tdecimal\n"
                   "s_star\t" + format_fraction(b.s_star) + "\t" + format_decimal(b.s_star, opt.precision) + "\n" +
                   "jaccard_positive\t" + format_fraction(jaccard_positive) + "\t" +
                   format_decimal(jaccard_positive, opt.precision) + "\n" + "jaccard_all\t" +
                   format_fraction(jaccard_all) + "\t" + format_decimal(jaccard_all, opt.precision) + "\n";
        case OutputFormat::Human: break;
    }
    std::ostringstream out;
    out << id1 << " vs " << id2 << '\n'
        << listing("contradictory atoms", b.partition.contradictory) << '\n'
        << pad("S*", 20) << render_value(b.s_star, opt.precision) << '\n'
        << pad("Jaccard (positive)", 20) << render_value(jaccard_positive, opt.precision) << '\n'
        << pad("Jaccard (all)", 20) << render_value(jaccard_all, opt.precision) << '\n'
        << "signs: S* " << sign_word(b.s_star) << ", Jaccard (positive) " << sign_word(jaccard_positive)
        << (sign(b.s_star) * sign(jaccard_positive) < 0 ? " (opposite)" : "") << '\n';
    return out.str();
}

}  // namespace paracon
