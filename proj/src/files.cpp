#include "csched/files.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace csched {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

double parse_double_field(const std::string& field, const std::string& path, std::size_t line_no) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || field.empty() || !std::isfinite(value)) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected a number, got '" +
                                 field + "'");
    }
    return value;
}

std::string format_shortest(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

struct IdResource {
    std::string id;
    ResourceVector r;
};

// Reads `<id>,<cpu>,<mem>` rows under an already-consumed header.
IdResource parse_id_resource_row(const std::string& line, const std::string& path,
                                 std::size_t line_no) {
    const auto fields = split_csv(line);
    if (fields.size() != 3) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                 ": expected 3 fields (id,cpu,mem), got " +
                                 std::to_string(fields.size()));
    }
    if (fields[0].empty()) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) + ": id must be non-empty");
    }
    return {fields[0],
            {parse_double_field(fields[1], path, line_no), parse_double_field(fields[2], path, line_no)}};
}

}  // namespace

std::vector<Node> load_nodes_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open nodes file '" + path + "'");
    }
    std::vector<Node> nodes;
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (!saw_header) {
            if (line != "node_id,cpu,mem") {
                throw std::runtime_error(path + ":1: expected header 'node_id,cpu,mem'");
            }
            saw_header = true;
            continue;
        }
        const auto row = parse_id_resource_row(line, path, line_no);
        nodes.emplace_back(row.id, row.r);
    }
    if (nodes.empty()) {
        throw std::runtime_error(path + ": node pool is empty");
    }
    return nodes;
}

void save_nodes_csv(const std::vector<Node>& nodes, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << "node_id,cpu,mem\n";
    for (const auto& n : nodes) {
        out << n.id << ',' << format_shortest(n.capacity.cpu) << ',' << format_shortest(n.capacity.mem)
            << '\n';
    }
}

ProblemInstance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open instance file '" + path + "'");
    }

    enum class Section { kNone, kNodes, kContainers };
    Section section = Section::kNone;
    bool saw_section_header = false;

    std::vector<Node> nodes;
    std::vector<Container> containers;
    std::string line;
    std::size_t line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line == "[nodes]") {
            section = Section::kNodes;
            saw_section_header = false;
            continue;
        }
        if (line == "[containers]") {
            section = Section::kContainers;
            saw_section_header = false;
            continue;
        }
        if (section == Section::kNone) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected a [nodes] or [containers] section first");
        }
        if (!saw_section_header) {
            const char* expected =
                section == Section::kNodes ? "node_id,cpu,mem" : "container_id,cpu,mem";
            if (line != expected) {
                throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                         ": expected header '" + expected + "'");
            }
            saw_section_header = true;
            continue;
        }
        const auto row = parse_id_resource_row(line, path, line_no);
        if (section == Section::kNodes) {
            nodes.emplace_back(row.id, row.r);
        } else {
            containers.emplace_back(row.id, row.r);
        }
    }

    return ProblemInstance(std::move(containers), std::move(nodes));
}

void save_instance_file(const ProblemInstance& instance, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << "[nodes]\nnode_id,cpu,mem\n";
    for (const auto& n : instance.nodes()) {
        out << n.id << ',' << format_shortest(n.capacity.cpu) << ',' << format_shortest(n.capacity.mem)
            << '\n';
    }
    out << "[containers]\ncontainer_id,cpu,mem\n";
    for (const auto& c : instance.containers()) {
        out << c.id << ',' << format_shortest(c.demand.cpu) << ',' << format_shortest(c.demand.mem)
            << '\n';
    }
}

void save_assignment_csv(const ProblemInstance& instance, const Assignment& a,
                         const std::string& path) {
    check_assignment(instance, a);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << "container_id,node_id\n";
    for (std::size_t i = 0; i < instance.num_containers(); ++i) {
        out << instance.containers()[i].id << ',' << instance.nodes()[a.node_of[i]].id << '\n';
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << content;
}

std::string file_digest(const std::string& path) {
    const std::string bytes = read_file(path);
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buf);
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return std::string(buf);
}

}  // namespace csched
