#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include <doctest.h>

namespace {

int run_cli(const std::string& args) {
    const std::string command =
        std::string(EPHPLANE_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::filesystem::path fresh_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("cli generates the selected orbit files") {
    const auto dir = fresh_dir("ephplane-cli-orbit");
    CHECK(run_cli("--mode orbits --subgroup K --metric e --out-dir " + dir.string()) == 0);
    CHECK(std::filesystem::exists(dir / "orbit-K-e.csv"));
    CHECK(std::filesystem::exists(dir / "cayley-K-e.csv"));
    CHECK(std::filesystem::exists(dir / "cayl-a-K-e.csv"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli runs checks without writing files") {
    const auto dir = fresh_dir("ephplane-cli-checks");
    CHECK(run_cli("--mode checks --metric e --out-dir " + dir.string()) == 0);
    CHECK_FALSE(std::filesystem::exists(dir));
}

TEST_CASE("cli serial flag produces identical output") {
    const auto a = fresh_dir("ephplane-cli-par");
    const auto b = fresh_dir("ephplane-cli-ser");
    CHECK(run_cli("--mode arrows --subgroup A --metric h --out-dir " + a.string()) == 0);
    CHECK(run_cli("--mode arrows --subgroup A --metric h --serial --out-dir " + b.string()) == 0);
    std::ifstream fa(a / "arrows-A-h.csv"), fb(b / "arrows-A-h.csv");
    const std::string ca((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
    const std::string cb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
    CHECK(ca == cb);
    CHECK_FALSE(ca.empty());
    std::filesystem::remove_all(a);
    std::filesystem::remove_all(b);
}

TEST_CASE("cli default run regenerates the full csv inventory") {
    const auto dir = fresh_dir("ephplane-cli-all");
    CHECK(run_cli("--out-dir " + dir.string()) == 0);
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        CHECK(entry.path().extension() == ".csv");
        ++files;
    }
    CHECK(files == 71);
    CHECK(std::filesystem::exists(dir / "future-past-00.csv"));
    CHECK(std::filesystem::exists(dir / "future-past-07.csv"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli rejects unknown flags with exit code 2") {
    CHECK(run_cli("--bogus") == 2);
    CHECK(run_cli("--mode sideways") == 2);
}

TEST_CASE("cli help exits cleanly") { CHECK(run_cli("--help") == 0); }
