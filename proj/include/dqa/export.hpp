#pragma once

#include "dqa/classic.hpp"
#include "dqa/directed.hpp"
#include "dqa/paths.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dqa {

/// Undirected DOT; node labels are vertex sets.
void write_dot(std::ostream& out, const QGraph& g, const SimplicialComplexView& k);
/// Directed DOT; node labels are simplex tuples.
void write_dot(std::ostream& out, const ConnectivityDigraph& g);
/// Directed DOT of the quotient; node labels list the member tuples.
void write_dot(std::ostream& out, const Condensation& c, const ConnectivityDigraph& g);

/// {q, i, j, nodes, edges, scc_count, condensation_edges}
nlohmann::ordered_json summary_json(const ConnectivityDigraph& g, const Condensation& c);

/// {spec, length, fraction, simplices, condensation_path_node_sizes}
nlohmann::ordered_json path_json(const SimplicialPath& p);

/// One row per vector, top dimension first, with a "vector,q<dim>,...,q0" header.
void write_structure_csv(std::ostream& out, const StructureVectors& v);

/// Matrix with row labels `rows` and column labels `cols`; empty cells are
/// written as `missing`.
void write_grid_csv(std::ostream& out, const std::string& corner, const std::vector<std::string>& rows,
                    const std::vector<std::string>& cols, const std::vector<std::vector<std::optional<std::string>>>& cells,
                    const std::string& missing = "NA");

}  // namespace dqa
