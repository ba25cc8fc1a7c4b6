#include "doctest.h"

#include <set>

#include "json.hpp"
#include "polyapery/registry.hpp"
#include "polyapery/report.hpp"
#include "testkit.hpp"

using namespace polyapery;
using testkit::agrees;
using testkit::tenth_power;

TEST_SUITE("registry") {

TEST_CASE("catalogue") {
  const auto& reg = builtin_registry();
  CHECK(reg.size() == 25);
  std::set<std::string> ids;
  for (const auto& rec : reg) {
    ids.insert(rec.id);
    CHECK_FALSE(rec.paper_ref.empty());
    CHECK_FALSE(rec.description.empty());
  }
  CHECK(ids.size() == 25);
  for (int i = 1; i <= 25; ++i) CHECK(ids.count("I" + std::to_string(i)) == 1);
  const IdentityRecord* i14 = lookup("I14");
  REQUIRE(i14 != nullptr);
  CHECK(i14->paper_ref.find("MZIteratedIntegral") != std::string::npos);
  CHECK(lookup("I99") == nullptr);
  CHECK(lookup("I8")->grid.size() == 4);
  CHECK(lookup("I19")->grid.size() == 4);
  CHECK(lookup("I22")->grid.size() == 4);
  CHECK(lookup("I24")->grid.size() == 6);
}

TEST_CASE("expression evaluation") {
  const auto ctx = make_context(40);
  const CertifiedReal p4 = pow(pi(ctx), 4);
  const ConstExpr e = expr::lit(5, 108) * expr::zeta(IntArg{4, {}, 1});
  CHECK(agrees(eval_expr(e, ctx), scale(p4, mpq_class(5, 108 * 90)), 40));
  const CertifiedReal v = eval_expr(expr::lit(1, 360) * expr::pow(expr::pi(), 4), ctx);
  CHECK(v.value > Real(0.27058, 64));
  CHECK(v.value < Real(0.27059, 64));
  CHECK_THROWS_AS(eval_expr(ConstExpr{}, ctx), EvalError);
  CHECK_THROWS_AS(eval_expr(expr::param("u"), ctx), EvalError);
  CHECK_THROWS_AS(eval_expr(expr::li(2, expr::lit(3, 2)), ctx), EvalError);
  CHECK(depth(expr::li(2, expr::gf() * 2)) == 3);
  CHECK(count_literals(expr::lit(1, 2) + expr::lit(1, 3) * expr::pi()) == 2);
}

TEST_CASE("value tokens") {
  const auto ctx = make_context(30);
  CHECK(agrees(eval_expr(parse_value("1-1e-4"), ctx), "0.9999", 30));
  CHECK(agrees(eval_expr(parse_value("-1/2"), ctx), "-0.5", 30));
  CHECK(agrees(eval_expr(parse_value("gf^-2") * parse_value("gf^2"), ctx), "1", 30));
  CHECK(agrees(eval_expr(parse_value("0.999"), ctx), "0.999", 30));
  CHECK(parse_value("0.25")->literal == mpq_class(1, 4));
  CHECK(parse_value("010")->literal == 10);
  CHECK_THROWS_AS(parse_value(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_value("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_value("foo"), std::invalid_argument);
}

TEST_CASE("verdict rules") {
  const Real thr = tenth_power(25);
  CHECK(decide(tenth_power(30), tenth_power(40), thr) == Verdict::kPass);
  CHECK(decide(tenth_power(20), tenth_power(40), thr) == Verdict::kFail);
  CHECK(decide(tenth_power(30), tenth_power(20), thr) == Verdict::kUncertain);
  CHECK(decide(tenth_power(10), tenth_power(20), thr) == Verdict::kFail);
  CHECK(agrees(pass_threshold(30), tenth_power(25), 80));
}

TEST_CASE("grid expansion") {
  CHECK(expand_cases(*lookup("I8")).size() == 4);
  CHECK(expand_cases(*lookup("I8"), {"-1", "-1/3"}).size() == 2);
  CHECK(expand_cases(*lookup("I4"), {"-1"}).size() == 1);
  CHECK(expand_cases(*lookup("I22")).size() == 6);
  CHECK(expand_cases(*lookup("I23")).size() == 6);
  CHECK(natural_less("I2", "I10"));
  CHECK_FALSE(natural_less("I10", "I2"));
  CHECK_THROWS_AS(verify(*lookup("I1"), 9), DomainError);
}

TEST_CASE("smoke run at 15 digits") {
  const auto reports = verify_all(15);
  CHECK(reports.size() >= 25);
  for (const auto& r : reports) {
    INFO(r.id << " " << r.diagnostic);
    CHECK(r.diagnostic.empty());
    CHECK(r.verdict == Verdict::kPass);
  }
  for (std::size_t i = 1; i < reports.size(); ++i) {
    const auto base = [](const std::string& id) { return id.substr(0, id.find('[')); };
    CHECK_FALSE(natural_less(base(reports[i].id), base(reports[i - 1].id)));
  }
}

TEST_CASE("spot checks") {
  const auto i2 = verify(*lookup("I2"), 50);
  REQUIRE(i2.size() == 1);
  CHECK(i2[0].verdict == Verdict::kPass);
  CHECK(i2[0].abs_difference < tenth_power(45));

  const auto i8 = verify(*lookup("I8"), 40, {"-1"});
  REQUIRE(i8.size() == 1);
  CHECK(i8[0].id == "I8[u=-1]");
  CHECK(i8[0].verdict == Verdict::kPass);

  const IdentityRecord& i19 = *lookup("I19");
  const ParamPoint near_one{"x=0.999", {{"x", parse_value("0.999")}}, {}};
  const auto rep = verify_case(i19, IdentityCase{"x=0.999", i19.lhs, i19.rhs, near_one, {}}, 30);
  CHECK(rep.verdict != Verdict::kFail);
  CHECK(rep.abs_difference <= upward::add(rep.certified_bound, rep.threshold));

  const auto bad = verify(*lookup("I8"), 30, {"1"});
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].verdict == Verdict::kFail);
  CHECK_FALSE(bad[0].diagnostic.empty());
}

TEST_CASE("monotone refinement") {
  const auto lo = verify_all(25);
  const auto hi = verify_all(50);
  REQUIRE(lo.size() == hi.size());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    INFO(hi[i].id);
    CHECK(hi[i].id == lo[i].id);
    const Real allowed = upward::add(upward::add(lo[i].abs_difference, lo[i].certified_bound), hi[i].certified_bound);
    CHECK(hi[i].abs_difference <= allowed);
  }
}

TEST_CASE("structural independence of the Apery suites") {
  const auto r = testkit::structural_independence();
  INFO(r.detail);
  CHECK(r.ok);
  CHECK(r.checked == 11);
}

TEST_CASE("mutations are detected") {
  const auto one = testkit::mutation_i4(20);
  INFO(one.detail);
  CHECK(one.ok);
  const auto sweep = testkit::mutation_sweep(20);
  INFO(sweep.detail);
  CHECK(sweep.ok);
  CHECK(sweep.checked > 100);
}

TEST_CASE("report serialization") {
  const auto reps = verify(*lookup("I16"), 20);
  REQUIRE(reps.size() == 1);
  const auto j = nlohmann::json::parse(to_machine_line(reps[0]));
  CHECK(j.size() == 8);
  for (const char* key : {"id", "paper_ref", "digits", "abs_difference", "certified_bound", "terms_used",
                          "elapsed_seconds", "verdict"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["verdict"] == "PASS");
  CHECK(j["digits"] == 20);
  CHECK(j["abs_difference"].is_string());
  CHECK(to_text_line(reps[0]).find("PASS") != std::string::npos);
  const auto listing = nlohmann::json::parse(to_machine_line(*lookup("I25")));
  CHECK(listing["id"] == "I25");
}

}
