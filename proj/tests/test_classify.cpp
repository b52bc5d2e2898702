#include <doctest.h>

#include "bolpq/classify.hpp"

using namespace bolpq;

TEST_CASE("classification counts") {
  SUBCASE("(7,3)") {
    ClassificationReport rep = classify_pq(7, 3);
    CHECK(rep.iso_count == 4);
    CHECK(rep.root_case == RootCase::q_divides_p_minus_1);
    REQUIRE(rep.entries.size() == 4);
    // cyclic entry first
    CHECK_FALSE(rep.entries[0].seq.gamma.has_value());
    CHECK(rep.entries[0].group);
    CHECK(rep.entries[0].bruck);  // abelian groups satisfy AIP
    int groups = 0, nonassoc_bruck = 0;
    for (const GammaEntry& e : rep.entries) {
      if (e.group) ++groups;
      if (e.bruck && !e.group) ++nonassoc_bruck;
    }
    CHECK(groups == 2);
    CHECK(nonassoc_bruck == 1);
    // gamma = 1 is the nonabelian group when q | p-1
    CHECK(rep.entries[1].seq.gamma == Fp2{1, 0});
    CHECK(rep.entries[1].group);
    CHECK_FALSE(rep.entries[1].bruck);
  }
  SUBCASE("(5,3)") {
    ClassificationReport rep = classify_pq(5, 3);
    CHECK(rep.iso_count == 3);
    int groups = 0;
    for (const GammaEntry& e : rep.entries) {
      if (e.group) ++groups;
    }
    CHECK(groups == 1);  // 3 does not divide 5-1: no nonabelian group
  }
  SUBCASE("no-divide cases") {
    ClassificationReport rep = classify_pq(11, 7);
    CHECK(rep.root_case == RootCase::no_divide);
    CHECK(rep.iso_count == 1);
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].group);
    CHECK(classify_pq(17, 11).iso_count == 1);
  }
}

TEST_CASE("entry details carry the structure theorems") {
  ClassificationReport rep = classify_pq(7, 3);
  for (const GammaEntry& e : rep.entries) {
    if (e.group) {
      CHECK(e.lnuc_size == 21);
    } else {
      CHECK(e.lnuc_size == 7);
      CHECK(e.mnuc_size == 1);
      CHECK(e.rnuc_size == 1);
      CHECK((e.rmlt_order == 147 || e.rmlt_order == 1029));
    }
  }
}

TEST_CASE("audit passes on sound cases") {
  ClassifyOptions opt;
  opt.audit = true;
  opt.isotopy = true;
  ClassificationReport rep = classify_pq(11, 5, opt);
  CHECK(rep.iso_count == 5);
  REQUIRE(rep.audit_passed.has_value());
  CHECK(*rep.audit_passed);
  CHECK(rep.audit_failures.empty());
}

TEST_CASE("isotopy counts") {
  ClassifyOptions opt;
  opt.isotopy = true;
  SUBCASE("(7,3): 3 isotopism classes") {
    ClassificationReport rep = classify_pq(7, 3, opt);
    REQUIRE(rep.isotopy_count.has_value());
    CHECK(*rep.isotopy_count == 3);
    CHECK(*rep.isotopy_count == conjecture_3p_prediction(7));
  }
  SUBCASE("(5,3): 2 isotopism classes") {
    ClassificationReport rep = classify_pq(5, 3, opt);
    CHECK(*rep.isotopy_count == 2);
    CHECK(*rep.isotopy_count == conjecture_3p_prediction(5));
  }
  SUBCASE("(13,3): 4 isotopism classes") {
    ClassificationReport rep = classify_pq(13, 3, opt);
    CHECK(*rep.isotopy_count == 4);
    CHECK(*rep.isotopy_count == conjecture_3p_prediction(13));
  }
}

TEST_CASE("classification is deterministic") {
  ClassificationReport a = classify_pq(13, 3);
  ClassificationReport b = classify_pq(13, 3);
  REQUIRE(a.entries.size() == b.entries.size());
  for (size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].seq == b.entries[i].seq);
    CHECK(a.entries[i].rmlt_order == b.entries[i].rmlt_order);
  }
}

TEST_CASE("lightweight mode skips table-level details") {
  ClassifyOptions opt;
  opt.entry_details = false;
  ClassificationReport rep = classify_pq(19, 3, opt);
  CHECK(rep.iso_count == 10);
  CHECK(rep.entries[1].rmlt_order == 0);
}
