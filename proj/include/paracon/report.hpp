#pragma once

#include <string>

#include "paracon/contradiction.hpp"
#include "paracon/hierarchy.hpp"
#include "paracon/kb_model.hpp"
#include "paracon/similarity.hpp"

namespace paracon {

enum class OutputFormat { Human, Tsv, Structured };

// Version tag carried by every structured (JSON) document.
inline constexpr std::string_view kReportVersion = "1";

struct RenderOptions {
    OutputFormat format = OutputFormat::Human;
    int precision = 2;
};

// "-1/5 (-0.20)"
std::string render_value(const Rational& value, int precision);

std::string render_breakdown(const std::string& title, const std::string& id1, const std::string& id2,
                             const SimilarityBreakdown& b, const RenderOptions& opt);
std::string render_matrix(const KnowledgeBase& kb, const SimilarityMatrix& m, const RenderOptions& opt);
std::string render_jaccard(const std::string& id1, const std::string& id2, JaccardMode mode, const Rational& value,
                           const RenderOptions& opt);
std::string render_extraction(const Entity& k, const LiteralSet& extracted, const AtomSet& atoms, bool repairable,
                              const RenderOptions& opt);
std::string render_repair(const Entity& k, const RepairReport& report, const RenderOptions& opt);
std::string render_partition(const SuperCategoryPartition& p, const DisjunctionReport& check,
                             const RenderOptions& opt);
std::string render_hierarchy(const HierarchyTrace& trace, const RenderOptions& opt);
std::string render_compare(const std::string& id1, const std::string& id2, const SimilarityBreakdown& b,
                           const Rational& jaccard_positive, const Rational& jaccard_all, const RenderOptions& opt);

std::string to_string(ClusterMode mode);
std::string to_string(RepairPolicy policy);
std::string to_string(JaccardMode mode);

}  // namespace paracon
