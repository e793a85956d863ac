#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "brute.hpp"
#include "dap/dap.hpp"

using namespace dap;

TEST_CASE("transport map on small fixtures", "[bijections]") {
    CHECK(psi(AirPocketPath::parse("UD")).to_string() == "F");
    CHECK(psi(AirPocketPath::parse("UUD2")).to_string() == "FF");
    CHECK(psi(AirPocketPath::parse("UDUD")).to_string() == "UFD");
    CHECK(psi(AirPocketPath::parse("UUUD3")).to_string() == "FFF");
    CHECK(psi(AirPocketPath::parse("UUUD2UD2UD")).to_string() == "UUFFDFD");
}

TEST_CASE("transport is a bijection onto peakless words", "[bijections]") {
    for (int n = 2; n <= 12; ++n) {
        std::set<std::string> images;
        for (const auto& p : enum_paths(FamilyId::air, n)) {
            auto w = psi(p);
            CHECK(w.size() == n - 1);
            CHECK(w.is_peakless());
            // the image always uses at least one flat letter
            long flats = std::count(w.steps().begin(), w.steps().end(), MStep::flat);
            CHECK(flats >= 1);
            CHECK(psi_inv(w) == p);
            images.insert(w.to_string());
        }
        auto words = enum_family_text(FamilyId::peakless_motzkin, n - 1);
        CHECK(images == std::set<std::string>(words.begin(), words.end()));
    }
}

TEST_CASE("transport inverse rejects words outside its domain", "[bijections]") {
    CHECK_THROWS_AS(psi_inv(MotzkinWord()), domain_error);
    CHECK_THROWS_AS(psi_inv(MotzkinWord::parse("UUDD")), domain_error);  // has a peak
    CHECK_THROWS_AS(psi_inv(MotzkinWord::parse("WF", WordKind::grand)), domain_error);
    CHECK_THROWS_AS(psi_inv(MotzkinWord::parse("DFU", WordKind::grand)), domain_error);
}

TEST_CASE("unfurling expands falls into unit steps", "[bijections]") {
    CHECK(unfurl(AirPocketPath::parse("UD")).to_string() == "UD");
    CHECK(unfurl(AirPocketPath::parse("UUD2")).to_string() == "UUDD");
    CHECK(unfurl(AirPocketPath::parse("UUUD2UD2UD")).to_string() == "UUUDDUDDUD");
    for (int n = 2; n <= 10; ++n)
        for (const auto& p : enum_paths(FamilyId::air, n)) {
            auto w = unfurl(p);
            int ups = 0;
            for (Step s : p.steps()) ups += s.is_up();
            CHECK(w.size() == 2 * ups);
            CHECK(refurl(w) == p);
        }
}

TEST_CASE("contracting runs of a Dyck word lands in the path family", "[bijections]") {
    for (int m = 1; m <= 6; ++m) {
        std::set<std::string> images;
        for (const auto& text : brute::dyck_words(2 * m)) {
            auto w = MotzkinWord::parse(text);
            auto p = refurl(w);
            CHECK(unfurl(p).to_string() == text);
            images.insert(p.to_string());
        }
        // the contraction is a bijection onto paths with m up-steps
        CHECK(BigInt(images.size()) == count_by_upsteps(FamilyId::air, m));
        CHECK(BigInt(images.size()) == catalan(m));
    }
    CHECK_THROWS_AS(refurl(MotzkinWord::parse("UFD")), domain_error);
}

TEST_CASE("pairing map on the published example", "[bijections]") {
    auto m = MeanderWord::parse("LLLLRRLRRLRLRLRRLRLR");
    CHECK(mu(m).to_string() == "WWFDUUUFDD");
    CHECK(mu(m).kind() == WordKind::grand);
    CHECK(mu_inv(mu(m)) == m);
}

TEST_CASE("pairing map round-trips in both directions", "[bijections]") {
    for (int t = 1; t <= 8; ++t) {
        std::set<std::string> images;
        for (const auto& m : enum_meanders(t)) {
            auto w = mu(m);
            CHECK(w.size() == t);
            CHECK(is_in_S(w.steps()));
            CHECK(mu_inv(w) == m);
            images.insert(w.to_string());
        }
        auto words = enum_family_text(FamilyId::s_family, t);
        CHECK(images == std::set<std::string>(words.begin(), words.end()));
        for (const auto& w : enum_words(FamilyId::s_family, t))
            CHECK(mu(mu_inv(w)) == w);
    }
}

TEST_CASE("pairing inverse rejects words outside the language", "[bijections]") {
    CHECK_THROWS_AS(mu_inv(MotzkinWord::parse("FF")), domain_error);
    CHECK_THROWS_AS(mu_inv(MotzkinWord::parse("FDU", WordKind::grand)), domain_error);
    CHECK_THROWS_AS(mu_inv(MotzkinWord()), domain_error);
}
