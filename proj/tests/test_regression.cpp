// Slow-tier regression checks: the remaining nonexistence decisions that run
// at desk scale (beyond the two cases the acceptance suite gates on).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sdskit/catalog.hpp"

using namespace sdskit;

namespace {

ExistenceResult run(const char* params, Strategy strategy) {
    SearchOptions opt;
    opt.strategy = strategy;
    opt.jobs = 2;
    return decide_two_block(parse_params_string(params), opt);
}

} // namespace

TEST_CASE("(47;9,5;2): no A-sequence passes the PSD test at 48") {
    auto r = run("47;9,5;2", Strategy::Direct);
    CHECK(r.status == Status::NotExists);
    CHECK(r.report.cases.at(0).psd_passed_a == 0);
}

TEST_CASE("(50;8,7;2): candidates on both sides but no complementary match") {
    auto r = run("50;8,7;2", Strategy::Direct);
    CHECK(r.status == Status::NotExists);
    const auto& c = r.report.cases.at(0);
    CHECK(c.psd_passed_a > 0);
    CHECK(c.psd_passed_b == 2910);
    CHECK(c.matched_pairs == 0);
}

TEST_CASE("(50;20,4;8): ruled out by 2-compression") {
    auto r = run("50;20,4;8", Strategy::Compress2);
    CHECK(r.status == Status::NotExists);
    std::uint64_t lifted = 0;
    for (const auto& c : r.report.cases) lifted += c.lifted_witnesses;
    CHECK(lifted == 0);
}
