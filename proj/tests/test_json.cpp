#include <doctest.h>

#include <stdexcept>

#include "edf/json_io.hpp"
#include "oracles.hpp"

using namespace edf;
using namespace edf::json_io;

TEST_CASE("naturals fit in numbers while small and strings beyond") {
  CHECK(nat_to_json(Nat(0)).is_number());
  CHECK(nat_to_json(Nat(42)).get<uint64_t>() == 42);
  Nat big = Nat(1) << 80;
  json jb = nat_to_json(big);
  CHECK(jb.is_string());
  CHECK(nat_from_json(jb) == big);
  CHECK(nat_from_json(json(17)) == Nat(17));
  CHECK(nat_from_json(json("123456789012345678901234567890")) ==
        Nat("123456789012345678901234567890"));
  CHECK_THROWS_AS(nat_from_json(json(-1)), std::invalid_argument);
  CHECK_THROWS_AS(nat_from_json(json("x")), std::invalid_argument);
}

TEST_CASE("extended naturals round-trip including infinity") {
  CHECK(extnat_to_json(ExtNat::infinity()) == json("inf"));
  CHECK(extnat_from_json(json("inf")).is_inf());
  CHECK(extnat_from_json(extnat_to_json(ExtNat(7))) == ExtNat(7));
}

TEST_CASE("sequences and bit strings round-trip") {
  FinSeq s = {0, 5, Nat(1) << 70};
  CHECK(finseq_from_json(finseq_to_json(s)) == s);
  Bits b = {1, 0, 1, 1};
  json jb = bits_to_json(b);
  CHECK(jb == json("1011"));
  CHECK(bits_from_json(jb) == b);
  CHECK(bits_from_json(json("")) == Bits{});
  CHECK_THROWS_AS(bits_from_json(json("102")), std::invalid_argument);
}

TEST_CASE("bound specs round-trip through JSON") {
  using bounds::BoundSpec;
  using bounds::TailRule;
  for (const char* name :
       {"fspec_2_5_45_inf.json", "fspec_n_plus_1.json", "fspec_compact.json",
        "fspec_periodic.json", "fspec_constant_2.json"}) {
    BoundSpec spec = oracles::load_spec(name);
    BoundSpec back = boundspec_from_json(boundspec_to_json(spec));
    for (uint64_t n = 0; n < 12; ++n)
      CHECK(bounds::eval_bound(spec, n) == bounds::eval_bound(back, n));
  }
}

TEST_CASE("the bundled bound files parse to the expected functions") {
  auto s = oracles::load_spec("fspec_2_5_45_inf.json");
  CHECK(bounds::eval_bound(s, 0) == ExtNat(2));
  CHECK(bounds::eval_bound(s, 2) == ExtNat(45));
  CHECK(bounds::eval_bound(s, 3).is_inf());

  auto c = oracles::load_spec("fspec_compact.json");
  CHECK(bounds::eval_bound(c, 0).is_inf());
  CHECK(bounds::eval_bound(c, 1).is_inf());
  CHECK(bounds::eval_bound(c, 2) == ExtNat(3));

  CHECK_THROWS_AS(load_fspec("/nonexistent/nope.json"), std::invalid_argument);
}
