#pragma once

#include <string>
#include <vector>

#include "csched/model.hpp"

namespace csched {

// Node pool CSV: header `node_id,cpu,mem`, one node per row.
std::vector<Node> load_nodes_csv(const std::string& path);
void save_nodes_csv(const std::vector<Node>& nodes, const std::string& path);

// Solve instance file, two sections with explicit headers:
//   [nodes]
//   node_id,cpu,mem
//   ...
//   [containers]
//   container_id,cpu,mem
//   ...
ProblemInstance load_instance_file(const std::string& path);
void save_instance_file(const ProblemInstance& instance, const std::string& path);

// Assignment CSV: header `container_id,node_id`.
void save_assignment_csv(const ProblemInstance& instance, const Assignment& a,
                         const std::string& path);

// FNV-1a 64-bit digest of a file's bytes, as 16 hex digits.
std::string file_digest(const std::string& path);

// Fixed-decimal rendering used by the report tables.
std::string format_fixed(double value, int decimals);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace csched
