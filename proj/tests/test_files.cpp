#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "csched/files.hpp"

using namespace csched;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() / "csched_test_files";
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("nodes csv load and save") {
    TempDir dir;
    const auto path = dir.file("nodes.csv");
    write_file(path, "node_id,cpu,mem\nn1,2.0,1.5\nn2,0.5,0.75\n");

    const auto nodes = load_nodes_csv(path);
    REQUIRE(nodes.size() == 2);
    CHECK(nodes[0].id == "n1");
    CHECK(nodes[0].capacity.cpu == 2.0);
    CHECK(nodes[1].capacity.mem == 0.75);

    const auto copy = dir.file("nodes_copy.csv");
    save_nodes_csv(nodes, copy);
    const auto reloaded = load_nodes_csv(copy);
    REQUIRE(reloaded.size() == 2);
    CHECK(reloaded[0].capacity == nodes[0].capacity);
    CHECK(reloaded[1].capacity == nodes[1].capacity);

    SUBCASE("bad header is rejected") {
        write_file(path, "id,cpu,mem\nn1,1,1\n");
        CHECK_THROWS(load_nodes_csv(path));
    }
    SUBCASE("empty pool is rejected") {
        write_file(path, "node_id,cpu,mem\n");
        CHECK_THROWS(load_nodes_csv(path));
    }
    SUBCASE("invalid capacity is rejected") {
        write_file(path, "node_id,cpu,mem\nn1,0,1\n");
        CHECK_THROWS(load_nodes_csv(path));
    }
}

TEST_CASE("instance file round trip") {
    TempDir dir;
    const auto path = dir.file("instance.csv");
    write_file(path,
               "[nodes]\n"
               "node_id,cpu,mem\n"
               "n1,1.0,1.0\n"
               "n2,2.0,2.0\n"
               "[containers]\n"
               "container_id,cpu,mem\n"
               "c1,0.5,0.25\n"
               "c2,0.125,0.5\n");

    const auto inst = load_instance_file(path);
    REQUIRE(inst.num_nodes() == 2);
    REQUIRE(inst.num_containers() == 2);
    CHECK(inst.containers()[0].id == "c1");
    CHECK(inst.containers()[0].demand.cpu == 0.5);

    // Save emits shortest round-trip numerals; a second save/load cycle is
    // byte-stable and value-exact.
    const auto copy = dir.file("instance_copy.csv");
    save_instance_file(inst, copy);
    const auto reloaded = load_instance_file(copy);
    REQUIRE(reloaded.num_containers() == 2);
    CHECK(reloaded.containers()[1].demand == inst.containers()[1].demand);
    CHECK(reloaded.nodes()[1].capacity == inst.nodes()[1].capacity);
    const auto copy2 = dir.file("instance_copy2.csv");
    save_instance_file(reloaded, copy2);
    CHECK(read_file(copy2) == read_file(copy));

    SUBCASE("rows before a section header are rejected") {
        write_file(path, "node_id,cpu,mem\nn1,1,1\n");
        CHECK_THROWS(load_instance_file(path));
    }
    SUBCASE("a containers-only file is rejected for missing nodes") {
        write_file(path, "[containers]\ncontainer_id,cpu,mem\nc1,0.5,0.5\n");
        CHECK_THROWS(load_instance_file(path));
    }
}

TEST_CASE("assignment csv") {
    TempDir dir;
    std::vector<Container> containers{Container("c1", {0.5, 0.5}), Container("c2", {0.25, 0.25})};
    std::vector<Node> nodes{Node("n1", {1, 1}), Node("n2", {1, 1})};
    ProblemInstance inst(std::move(containers), std::move(nodes));

    const auto path = dir.file("assignment.csv");
    save_assignment_csv(inst, Assignment{{1, 0}}, path);
    CHECK(read_file(path) == "container_id,node_id\nc1,n2\nc2,n1\n");
    CHECK_THROWS(save_assignment_csv(inst, Assignment{{0}}, path));
}

TEST_CASE("file digest is stable and content-sensitive") {
    TempDir dir;
    const auto path = dir.file("blob.txt");
    write_file(path, "hello");
    const auto d1 = file_digest(path);
    CHECK(d1.size() == 16);
    CHECK(d1 == file_digest(path));
    write_file(path, "hello!");
    CHECK(d1 != file_digest(path));
}

TEST_CASE("format_fixed pins decimal places") {
    CHECK(format_fixed(65.4321, 2) == "65.43");
    CHECK(format_fixed(0.0, 2) == "0.00");
    CHECK(format_fixed(12.8, 3) == "12.800");
    CHECK(format_fixed(99.999, 2) == "100.00");
}
