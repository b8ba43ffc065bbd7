#pragma once

#include "vstab/families.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vstab {

// Rows of the two tables of exceptional pairs. Table 1 rows are named after
// their graph, Table 2 rows by their label "(i)", "(i)a", ..., "(iv)".
struct TableRow {
    std::string id;
    int table = 1;
    std::string graph;
    std::size_t vertices = 0;
    std::vector<Integer> stabilizer_orders; // admissible |G_v|
    bool large = false;                     // only row (iv)
};
const std::vector<TableRow>& table_rows();
const TableRow& table_row(std::string_view id_or_graph); // throws ParseError
Graph table_graph(std::string_view id);
// The graph with its group G: Aut(graph) except for (i)c, (iii), (iii)a and (iv),
// where G is induced from the seed graph.
ActedGraph table_pair(std::string_view id);

enum class BoundCase { Below, Equality, Strict };

struct Verdict {
    std::vector<CrsParams> case_a;     // C(r,s) with 2s <= r
    std::vector<std::string> case_b;   // table row ids (row (iv) excluded)
    BoundCase bound = BoundCase::Below;
    Integer vertices = 0;
    Integer stabilizer_order = 0;
    Integer threshold = 0;
    bool small_stabilizer = false;     // |G_v| <= 2^4 3^6
    // equality without case A: the matching (t, sign) of Gamma_t^sign
    std::optional<std::pair<int, int>> gamma;
    bool case_c() const { return bound != BoundCase::Below; }
    bool any() const { return !case_a.empty() || !case_b.empty() || case_c(); }
    std::vector<std::string> cases() const; // "A(r,s)", "B(row)", "C(strict)", "C(equality)"
};

// Throws NotLocallyD4, and NoCaseHolds if nothing applies.
Verdict classify(const ActedGraph& ag);

enum class CubicKind { ArcTransitive, ViaMerge, SmallStabilizer };

struct CubicVerdict {
    CubicKind kind = CubicKind::SmallStabilizer;
    Integer vertices = 0;
    Integer stabilizer_order = 0;
    bool case_a = false; // the merged graph is a table graph or C(r,s), 2s <= r
    bool case_b = false; // arc-transitive with |G_v| <= 48
    bool case_c = false; // |V| >= 8 |G_v| log2 |G_v| (2-group stabilisers only)
    std::optional<Verdict> merged;
    std::vector<std::string> cases() const;
};

// Throws NotCubic, NotVertexTransitive.
CubicVerdict classify_cubic(const ActedGraph& ag);

struct RowReport {
    std::string id;
    std::string graph;
    bool pass = true;
    std::size_t vertices = 0;
    Integer group_order = 0;
    Integer stabilizer_order = 0;
    Integer aut_order = 0; // 0 when not computed
    std::vector<std::string> failures;
    double seconds = 0;
};

// Builds every row and checks it; failures are collected per row. Row (iv)
// only runs with include_large. An empty `rows` means all.
std::vector<RowReport> reproduce_tables(bool include_large, const std::vector<std::string>& rows = {});

} // namespace vstab
