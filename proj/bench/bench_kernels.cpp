// Serial reference kernels against their OpenMP counterparts on a synthetic
// corpus made of many copies of the largest fixture version.

#include <benchmark/benchmark.h>

#include <filesystem>
#include <map>
#include <string>

#include "aosce/corpus.hpp"
#include "aosce/kernels.hpp"

namespace fs = std::filesystem;
using namespace aosce;

namespace {

const VersionRef& corpus(int copies) {
    static std::map<int, VersionRef> cache;
    auto it = cache.find(copies);
    if (it != cache.end()) return it->second;

    const fs::path src = fs::path(AOSCE_SOURCE_DIR) / "fixtures" / "mini-uas" / "AJ1.4";
    const fs::path root = fs::temp_directory_path() / ("aosce-bench-" + std::to_string(copies));
    fs::remove_all(root);
    fs::create_directories(root);
    for (int i = 0; i < copies; ++i) {
        fs::copy(src, root / ("copy" + std::to_string(i)), fs::copy_options::recursive);
    }
    return cache.emplace(copies, scan_corpus(root, ScanMode::SingleVersion).front()).first->second;
}

template <class Parse>
void parse_bench(benchmark::State& state, Parse parse) {
    const VersionRef& v = corpus(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(parse(v.files));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.files.size()));
}

template <class Measure>
void measure_bench(benchmark::State& state, Measure measure) {
    const VersionRef& v = corpus(static_cast<int>(state.range(0)));
    const std::vector<SourceUnit> units = serial::parse_files(v.files);
    for (auto _ : state) benchmark::DoNotOptimize(measure(units, default_weights()));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(units.size()));
}

void BM_ParseSerial(benchmark::State& s) { parse_bench(s, [](auto f) { return serial::parse_files(f); }); }
void BM_ParseOpenMP(benchmark::State& s) { parse_bench(s, [](auto f) { return omp::parse_files(f); }); }
void BM_MeasureSerial(benchmark::State& s) {
    measure_bench(s, [](const auto& u, const auto& w) { return serial::measure_units(u, w); });
}
void BM_MeasureOpenMP(benchmark::State& s) {
    measure_bench(s, [](const auto& u, const auto& w) { return omp::measure_units(u, w); });
}

}  // namespace

BENCHMARK(BM_ParseSerial)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParseOpenMP)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeasureSerial)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeasureOpenMP)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
