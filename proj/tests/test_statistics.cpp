#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "brute.hpp"
#include "dap/dap.hpp"

using namespace dap;

namespace {

long pstat(const char* text, StatTag tag, int k = 0) {
    return stat(AirPocketPath::parse(text), StatId{tag, k});
}

long wstat(const char* text, StatTag tag, int k = 0, WordKind kind = WordKind::motzkin) {
    return stat(MotzkinWord::parse(text, kind), StatId{tag, k});
}

}  // namespace

TEST_CASE("path statistics on hand-checked fixtures", "[statistics]") {
    const char* p = "UUUD2UD2UD";  // heights 1 2 3 1 2 0 1 0
    CHECK(pstat(p, StatTag::u_count) == 5);
    CHECK(pstat(p, StatTag::d1_count) == 1);
    CHECK(pstat(p, StatTag::du_count) == 0);
    CHECK(pstat(p, StatTag::uu_count) == 2);
    CHECK(pstat(p, StatTag::peak) == 3);
    CHECK(pstat(p, StatTag::ret) == 2);
    CHECK(pstat(p, StatTag::cat) == 1);
    CHECK(pstat(p, StatTag::slast) == 1);
    // the first fall closes a pyramid, the second fall does not
    CHECK(pstat(p, StatTag::delta, 2) == 1);
    CHECK(pstat(p, StatTag::delta, 1) == 1);
    CHECK(pstat(p, StatTag::delta_ge, 1) == 2);
    CHECK(pstat(p, StatTag::delta_le, 2) == 2);

    CHECK(pstat("UD", StatTag::peak) == 1);
    CHECK(pstat("UD", StatTag::ret) == 1);
    CHECK(pstat("UD", StatTag::cat) == 0);
    CHECK(pstat("UD", StatTag::slast) == 1);
    CHECK(pstat("UDUD", StatTag::ret) == 2);
    CHECK(pstat("UDUD", StatTag::du_count) == 1);
    CHECK(pstat("UUD2", StatTag::cat) == 1);
    CHECK(pstat("UUD2", StatTag::delta, 2) == 1);
}

TEST_CASE("word statistics on hand-checked fixtures", "[statistics]") {
    CHECK(wstat("UFD", StatTag::m_f) == 1);
    CHECK(wstat("UFD", StatTag::m_u) == 1);
    CHECK(wstat("UFD", StatTag::m_ufd) == 1);
    CHECK(wstat("UFD", StatTag::m_ind_umd) == 1);
    CHECK(wstat("UFD", StatTag::m_lastf) == 2);
    CHECK(wstat("UFD", StatTag::m_ret) == 1);
    CHECK(wstat("UFD", StatTag::m_ufkd, 1) == 1);
    CHECK(wstat("UFD", StatTag::m_ufkd, 2) == 0);

    CHECK(wstat("F", StatTag::m_ind_f) == 1);
    CHECK(wstat("FF", StatTag::m_ind_f) == 0);
    CHECK(wstat("FFF", StatTag::m_ind_fk, 3) == 1);
    CHECK(wstat("FFF", StatTag::m_ind_fk, 2) == 0);
    CHECK(wstat("FFF", StatTag::m_lastf) == 3);
    CHECK(wstat("FFF", StatTag::m_ret) == 3);

    // UUFDD: one doubled-up factor with a nonempty peakless middle
    CHECK(wstat("UUFDD", StatTag::m_u2md2) == 1);
    CHECK(wstat("UUFDD", StatTag::m_ind_umd) == 1);
    CHECK(wstat("UUFDD", StatTag::m_lastf) == 3);

    CHECK(wstat("UUFFDFD", StatTag::m_u2md2) == 0);
    CHECK(wstat("UUFFDFD", StatTag::m_ind_umd) == 1);
    CHECK(wstat("UUFFDFD", StatTag::m_lastf) == 6);
    CHECK(wstat("UUFFDFD", StatTag::m_ret) == 1);

    // F^{k-1} U beta D shapes
    CHECK(wstat("FUFD", StatTag::m_ind_fk1umd, 2) == 1);
    CHECK(wstat("FUFD", StatTag::m_ind_fk1umd, 1) == 0);
    CHECK(wstat("UFUFDD", StatTag::m_ufk1umd2, 2) == 1);
    CHECK(wstat("UFUFDD", StatTag::m_ufk1umd2, 1) == 0);

    // returns of a grand word count wavy letters' ground contacts as well
    CHECK(wstat("WWFDUUUFDD", StatTag::m_ret, 0, WordKind::grand) == 5);
    CHECK(wstat("WWFDUUUFDD", StatTag::m_lastf, 0, WordKind::grand) == 8);
}

TEST_CASE("statistics match independent recounts over whole families", "[statistics]") {
    for (auto fam : {FamilyId::air, FamilyId::air_inc}) {
        for (int n = 2; n <= 9; ++n) {
            auto lib = enum_paths(fam, n);
            auto ref = fam == FamilyId::air ? brute::air_paths(n) : brute::air_inc_paths(n);
            REQUIRE(lib.size() == ref.size());
            auto agree = [&](StatTag tag, int k, long (*f)(const brute::Path&, int)) {
                long a = 0, b = 0;
                for (const auto& p : lib) a += stat(p, StatId{tag, k});
                for (const auto& p : ref) b += f(p, k);
                return a == b;
            };
            CHECK(agree(StatTag::u_count, 0,
                        +[](const brute::Path& p, int) { return (long)brute::count_rises(p); }));
            CHECK(agree(StatTag::d1_count, 0,
                        +[](const brute::Path& p, int) { return (long)brute::count_falls_of(p, 1); }));
            CHECK(agree(StatTag::du_count, 0,
                        +[](const brute::Path& p, int) { return (long)brute::count_du(p); }));
            CHECK(agree(StatTag::uu_count, 0,
                        +[](const brute::Path& p, int) { return (long)brute::count_uu(p); }));
            CHECK(agree(StatTag::peak, 0,
                        +[](const brute::Path& p, int) { return (long)brute::count_peaks(p); }));
            CHECK(agree(StatTag::ret, 0,
                        +[](const brute::Path& p, int) { return (long)brute::returns(p); }));
            CHECK(agree(StatTag::cat, 0,
                        +[](const brute::Path& p, int) { return (long)brute::count_cats(p); }));
            CHECK(agree(StatTag::slast, 0,
                        +[](const brute::Path& p, int) { return (long)brute::last_fall(p); }));
            for (int k = 1; k <= 4; ++k) {
                CHECK(agree(StatTag::delta, k, +[](const brute::Path& p, int kk) {
                          return (long)brute::count_pyramids(p, kk);
                      }));
                CHECK(agree(StatTag::delta_ge, k, +[](const brute::Path& p, int kk) {
                          return (long)brute::count_pyramids_ge(p, kk);
                      }));
                CHECK(agree(StatTag::delta_le, k, +[](const brute::Path& p, int kk) {
                          return (long)brute::count_pyramids_le(p, kk);
                      }));
            }
        }
    }
}

TEST_CASE("unit falls always close pyramids", "[statistics]") {
    // falls never chain, so every unit fall follows an up-step
    for (int n = 2; n <= 10; ++n)
        for (const auto& p : enum_paths(FamilyId::air, n))
            CHECK(stat(p, StatId{StatTag::d1_count}) == stat(p, StatId{StatTag::delta, 1}));
}

TEST_CASE("pyramid tail and head sums decompose by size", "[statistics]") {
    for (int n = 2; n <= 9; ++n)
        for (const auto& p : enum_paths(FamilyId::air, n)) {
            long ge1 = stat(p, StatId{StatTag::delta_ge, 1});
            long acc = 0;
            for (int k = 1; k <= n; ++k) acc += stat(p, StatId{StatTag::delta, k});
            CHECK(acc == ge1);
            for (int k = 1; k <= 4; ++k) {
                CHECK(stat(p, StatId{StatTag::delta_le, k}) +
                          stat(p, StatId{StatTag::delta_ge, k + 1}) ==
                      ge1);
            }
        }
}

TEST_CASE("distributions aggregate the stream faithfully", "[statistics]") {
    auto h = distribution(FamilyId::air, 6, StatId{StatTag::peak});
    REQUIRE(h.entries.size() == 3);
    CHECK(h.entries.at(1) == 1);
    CHECK(h.entries.at(2) == 6);
    CHECK(h.entries.at(3) == 1);
    CHECK(h.total() == count_family(FamilyId::air, 6));
    CHECK(h.weighted_sum() == 16);
    CHECK(popularity(FamilyId::air, 6, StatId{StatTag::peak}) == 16);

    for (int n = 2; n <= 10; ++n) {
        auto d = distribution(FamilyId::air, n, StatId{StatTag::ret});
        CHECK(d.total() == count_family(FamilyId::air, n));
        CHECK(d.weighted_sum() == popularity(FamilyId::air, n, StatId{StatTag::ret}));
    }
}

TEST_CASE("statistics and families must be of matching kind", "[statistics]") {
    auto p = AirPocketPath::parse("UDUD");
    auto w = MotzkinWord::parse("UFD");
    CHECK_THROWS_AS(stat(p, StatId{StatTag::m_f}), type_mismatch_error);
    CHECK_THROWS_AS(stat(w, StatId{StatTag::peak}), type_mismatch_error);
    CHECK_THROWS_AS(distribution(FamilyId::air, 5, StatId{StatTag::m_lastf}),
                    type_mismatch_error);
    CHECK_THROWS_AS(distribution(FamilyId::peakless_motzkin, 5, StatId{StatTag::u_count}),
                    type_mismatch_error);
    CHECK_THROWS_AS(distribution(FamilyId::meander, 4, StatId{StatTag::m_ret}),
                    type_mismatch_error);
}

TEST_CASE("parameterized word statistics collapse correctly at k = 1", "[statistics]") {
    for (int n = 0; n <= 9; ++n)
        for (const auto& w : enum_words(FamilyId::peakless_motzkin, n)) {
            CHECK(stat(w, StatId{StatTag::m_ufk1umd2, 1}) == stat(w, StatId{StatTag::m_u2md2}));
            CHECK(stat(w, StatId{StatTag::m_ind_fk1umd, 1}) == stat(w, StatId{StatTag::m_ind_umd}));
            CHECK(stat(w, StatId{StatTag::m_ind_fk, 1}) ==
                  (w.size() == 1 && w.steps()[0] == MStep::flat ? 1 : 0));
        }
}

TEST_CASE("transport carries every path statistic to the word side", "[statistics]") {
    for (int n = 2; n <= 9; ++n)
        for (const auto& p : enum_paths(FamilyId::air, n)) {
            auto m = psi(p);
            CHECK(stat(p, StatId{StatTag::u_count}) ==
                  stat(m, StatId{StatTag::m_f}) + stat(m, StatId{StatTag::m_u}));
            CHECK(stat(p, StatId{StatTag::d1_count}) ==
                  stat(m, StatId{StatTag::m_ind_f}) + stat(m, StatId{StatTag::m_ufd}) +
                      stat(m, StatId{StatTag::m_ind_umd}) + stat(m, StatId{StatTag::m_u2md2}));
            CHECK(stat(p, StatId{StatTag::du_count}) ==
                  stat(m, StatId{StatTag::m_ufd}) + stat(m, StatId{StatTag::m_u2md2}));
            CHECK(stat(p, StatId{StatTag::uu_count}) == stat(m, StatId{StatTag::m_f}) - 1);
            CHECK(stat(p, StatId{StatTag::peak}) == stat(m, StatId{StatTag::m_u}) + 1);
            CHECK(stat(p, StatId{StatTag::ret}) == n - stat(m, StatId{StatTag::m_lastf}));
            CHECK(stat(p, StatId{StatTag::slast}) == stat(m, StatId{StatTag::m_ret}));
            for (int k = 1; k <= 4; ++k)
                CHECK(stat(p, StatId{StatTag::delta, k}) ==
                      stat(m, StatId{StatTag::m_ind_fk, k}) + stat(m, StatId{StatTag::m_ufkd, k}) +
                          stat(m, StatId{StatTag::m_ind_fk1umd, k}) +
                          stat(m, StatId{StatTag::m_ufk1umd2, k}));
        }
}

TEST_CASE("statistic names parse back to themselves", "[statistics]") {
    CHECK(parse_stat("PEAK") == StatId{StatTag::peak, 0});
    CHECK(parse_stat("DELTA(3)") == StatId{StatTag::delta, 3});
    CHECK(parse_stat("M_UFKD(2)") == StatId{StatTag::m_ufkd, 2});
    CHECK(stat_name(StatId{StatTag::delta_ge, 2}) == "DELTA_GE(2)");
    CHECK(stat_name(StatId{StatTag::m_lastf}) == "M_LASTF");
    CHECK(parse_stat(stat_name(StatId{StatTag::m_ind_fk1umd, 4})) ==
          StatId{StatTag::m_ind_fk1umd, 4});
    CHECK_THROWS_AS(parse_stat("DELTA"), parse_error);
    CHECK_THROWS_AS(parse_stat("PEAK(2)"), parse_error);
    CHECK_THROWS_AS(parse_stat("DELTA(0)"), domain_error);
    CHECK_THROWS_AS(parse_stat("DELTA(x)"), parse_error);
    CHECK_THROWS_AS(parse_stat("NOT_A_STAT"), domain_error);
}

TEST_CASE("popularity fixtures on the non-decreasing side", "[statistics]") {
    const long ret_pop[] = {1, 1, 3, 6, 13, 27, 56, 115, 235, 478};
    for (int n = 2; n <= 11; ++n)
        CHECK(popularity(FamilyId::air_inc, n, StatId{StatTag::ret}) == BigInt(ret_pop[n - 2]));
}
