#include <doctest.h>

#include "bolpq/table_io.hpp"

using namespace bolpq;

namespace {

std::vector<LoopTable> io_corpus() {
  std::vector<LoopTable> out;
  FieldCtx c7 = make_context(7, 3);
  out.push_back(build_bol_loop(c7, theta_from_gamma(c7, {4, 0})));
  out.push_back(build_bol_loop(c7, all_ones_seq(c7)));
  FieldCtx c5 = make_context(5, 3);
  out.push_back(build_bol_loop(c5, theta_from_gamma(c5, {3, 2})));
  return out;
}

}  // namespace

TEST_CASE("JSON round-trip is byte-identical including coordinates") {
  for (const LoopTable& t : io_corpus()) {
    LoopTable back = table_from_json(table_to_json(t));
    CHECK(back == t);
  }
}

TEST_CASE("CSV round-trip") {
  for (const LoopTable& t : io_corpus()) {
    std::string text = table_to_csv(t);
    // LF endings, no header
    CHECK(text.find('\r') == std::string::npos);
    LoopTable back = table_from_csv(text);
    CHECK(back.same_table(t));
  }
}

TEST_CASE("GAP round-trip with 1-based entries") {
  for (const LoopTable& t : io_corpus()) {
    std::string text = table_to_gap(t);
    CHECK(text.rfind("LoopByCayleyTable([", 0) == 0);
    CHECK(text.find("]);") != std::string::npos);
    // 1-based: a table of order n must never print a 0 entry
    CHECK(text.find("[0,") == std::string::npos);
    LoopTable back = table_from_gap(text);
    CHECK(back.same_table(t));
  }
}

TEST_CASE("sequence serialization shape") {
  FieldCtx ctx = make_context(7, 3);
  nlohmann::json j = seq_to_json(theta_from_gamma(ctx, {4, 0}));
  CHECK(j["lambda"] == 6);
  CHECK(j["gamma"] == nlohmann::json::array({4, 0}));
  CHECK(j["u"] == nlohmann::json::array({1, 3, 3}));
  CHECK(j["theta"] == nlohmann::json::array({1, 5, 5}));

  nlohmann::json ones = seq_to_json(all_ones_seq(ctx));
  CHECK(ones["gamma"].is_null());
  CHECK(ones["lambda"] == 2);
}

TEST_CASE("permutation serialization") {
  Perm g = Perm::identity(4);
  g.img = {1, 0, 3, 2};
  CHECK(perm_to_json(g) == nlohmann::json::array({1, 0, 3, 2}));
}

TEST_CASE("report serialization") {
  ClassifyOptions opt;
  opt.isotopy = true;
  nlohmann::json j = report_to_json(classify_pq(7, 3, opt));
  CHECK(j["schema"] == 1);
  CHECK(j["p"] == 7);
  CHECK(j["case"] == "q_divides_p_minus_1");
  CHECK(j["iso_count"] == 4);
  CHECK(j["isotopy_count"] == 3);
  CHECK(j["entries"].size() == 4);
  CHECK(j["entries"][0]["gamma"].is_null());
  CHECK(j["entries"][0]["gamma_param"].is_null());
  // entries follow the canonical Gamma order 1, 3, 4
  CHECK(j["entries"][1]["gamma_param"] == 1);
  CHECK(j["entries"][2]["gamma_param"] == 3);
  CHECK(j["entries"][3]["gamma_param"] == 4);
  CHECK(j["entries"][3]["bruck"] == true);
  CHECK(j["entries"][3]["group"] == false);
  CHECK(j["entries"][3]["nuclei"]["left"] == 7);
}
