#include "doctest.h"

#include "aosce/kernels.hpp"
#include "aosce/report.hpp"
#include "support.hpp"

using namespace aosce;

TEST_CASE("OpenMP kernels agree with the serial reference") {
    for (const std::string& id : testing::mini_uas_versions()) {
        CAPTURE(id);
        const VersionRef v = scan_corpus(testing::fixtures_dir() / id, ScanMode::SingleVersion).front();
        const std::vector<SourceUnit> su = serial::parse_files(v.files);
        const std::vector<SourceUnit> pu = omp::parse_files(v.files);
        REQUIRE(su.size() == pu.size());
        for (std::size_t i = 0; i < su.size(); ++i) CHECK(su[i].file == pu[i].file);

        const std::vector<UnitMetrics> sm = serial::measure_units(su, default_weights());
        const std::vector<UnitMetrics> pm = omp::measure_units(pu, default_weights());
        REQUIRE(sm.size() == pm.size());
        for (std::size_t i = 0; i < sm.size(); ++i) {
            CHECK(sm[i].per_aspect == pm[i].per_aspect);
            CHECK(sm[i].per_class == pm[i].per_class);
        }

        const VersionMetrics a = measure_version(id, su, default_weights(), {false, Execution::Serial});
        const VersionMetrics b = measure_version(id, pu, default_weights(), {false, Execution::Parallel});
        CHECK(write_json(a) == write_json(b));
        CHECK(write_log(su, a) == write_log(pu, b));
    }
}
