#include "support.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "aosce/kernels.hpp"
#include "aosce/weights.hpp"

namespace fs = std::filesystem;

namespace testing {

fs::path source_dir() { return fs::path(AOSCE_SOURCE_DIR); }
fs::path fixtures_dir() { return source_dir() / "fixtures" / "mini-uas"; }
fs::path data_dir() { return source_dir() / "tests" / "data"; }

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const fs::path& path, const std::string& text) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string replace_all(std::string text, const std::string& from, const std::string& to) {
    for (std::size_t pos = text.find(from); pos != std::string::npos; pos = text.find(from, pos + to.size())) {
        text.replace(pos, from.size(), to);
    }
    return text;
}

TempDir::TempDir(const std::string& tag) {
    static std::random_device rd;
    path_ = fs::temp_directory_path() / ("aosce-" + tag + "-" + std::to_string(rd()));
    fs::create_directories(path_);
}

TempDir::~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

Manifest read_manifest(const fs::path& version_dir) {
    Manifest m;
    std::istringstream in(read_text(version_dir / "MANIFEST"));
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("file ", 0) == 0) {
            m.files.push_back({line.substr(5), {}});
        } else if (!m.files.empty()) {
            m.files.back().entries.push_back(line);
        } else {
            const auto eq = line.find('=');
            if (eq == std::string::npos) throw std::runtime_error("bad manifest line: " + line);
            m.header[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
        }
    }
    return m;
}

std::uint64_t count_entries(const ManifestFile& file, const std::string& prefix) {
    std::uint64_t n = 0;
    for (const std::string& e : file.entries) {
        if (e.size() > prefix.size() && e.compare(0, prefix.size(), prefix) == 0 && e[prefix.size()] == ' ') ++n;
    }
    return n;
}

Measured measure_dir(const fs::path& dir, aosce::Execution execution) {
    Measured m;
    m.version = aosce::scan_corpus(dir, aosce::ScanMode::SingleVersion).front();
    m.units = aosce::parse_files(m.version.files, execution);
    m.metrics = aosce::measure_version(m.version.id, m.units, aosce::default_weights(), {false, execution});
    return m;
}

namespace {

const char* const kTypes[] = {"int", "long", "String", "double", "boolean", "java.util.List<String>",
                              "Map<String, Integer>", "char[]", "byte"};
const char* const kDecoys[] = {
    "// aspect Hidden { pointcut p(): call(* *(..)); }\n",
    "/* before(): execution(* *.*(..)) { } */\n",
    "/** class Shadow { int a; void f() {} } */\n",
};

template <class T, std::size_t N>
const T& pick(std::mt19937_64& rng, const T (&items)[N]) {
    return items[std::uniform_int_distribution<std::size_t>(0, N - 1)(rng)];
}

int roll(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

void emit_class(std::mt19937_64& rng, GeneratedJava& g, const std::string& name, const std::string& indent,
                int depth) {
    std::string& t = g.text;
    ++g.classes;
    t += indent + (depth == 0 ? "public class " : "static class ") + name + " {\n";
    const std::string in = indent + "    ";
    int var = 0;
    for (int f = roll(rng, 0, 4); f > 0; --f) {
        const int declarators = roll(rng, 1, 3);
        t += in + "private " + pick(rng, kTypes) + " ";
        for (int d = 0; d < declarators; ++d) {
            t += (d ? ", v" : "v") + std::to_string(var++);
            if (roll(rng, 0, 3) == 0) t += " = " + std::to_string(roll(rng, 0, 99));
        }
        t += ";\n";
        g.attributes += declarators;
    }
    if (roll(rng, 0, 2) == 0) t += in + pick(rng, kDecoys);
    if (roll(rng, 0, 1) == 0) {
        t += in + "public " + name + "() {\n" + in + "    String s = \"aspect pointcut around()\";\n" + in + "}\n";
    }
    for (int m = roll(rng, 0, 3); m > 0; --m) {
        t += in + "@SuppressWarnings(\"unused\")\n";
        t += in + "int m" + std::to_string(var++) + "(int a, String b) {\n";
        t += in + "    if (a > 0) { return a; }\n" + in + "    char c = '}';\n" + in + "    return b.length();\n";
        t += in + "}\n";
        ++g.methods;
    }
    if (depth == 0 && roll(rng, 0, 3) == 0) emit_class(rng, g, "Inner" + std::to_string(var), in, depth + 1);
    t += indent + "}\n";
}

}  // namespace

GeneratedJava random_java_file(std::mt19937_64& rng, int index) {
    GeneratedJava g;
    const std::string name = "Gen" + std::to_string(index);
    g.file_name = name + ".java";
    g.text = "package gen;\n\nimport java.util.Map;\n\n";
    if (roll(rng, 0, 1) == 0) g.text += pick(rng, kDecoys);
    emit_class(rng, g, name, "", 0);
    return g;
}

}  // namespace testing
