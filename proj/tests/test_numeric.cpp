#include "doctest.h"

#include "alcove/numeric.hpp"

using namespace alcove;

TEST_SUITE("exact arithmetic") {

TEST_CASE("small values stay in the fast representation") {
  Int a = Int(1000000) * Int(1000000);
  CHECK(a.small());
  CHECK(a.as_ll() == 1000000000000LL);
  CHECK(a.str() == "1000000000000");
}

TEST_CASE("overflow promotes and demotes transparently") {
  Int big(3037000500LL); // ~sqrt(2^63)
  Int sq = big * big;
  CHECK_FALSE(sq.small());
  CHECK(sq.str() == "9223372037000250000");
  // subtracting back below the threshold demotes again
  Int down = sq - sq + Int(7);
  CHECK(down.small());
  CHECK(down == Int(7));
  // negation of a promoted value
  CHECK((-sq).str() == "-9223372037000250000");
}

TEST_CASE("string round trip") {
  Int z("-123456789012345678901234567890");
  CHECK(z.str() == "-123456789012345678901234567890");
  CHECK_FALSE(z.small());
  CHECK(z.sign() == -1);
}

TEST_CASE("floor division pairs") {
  CHECK(floor_div(Int(7), Int(5)) == Int(1));
  CHECK(floor_div(Int(-7), Int(5)) == Int(-2));
  CHECK(floor_mod(Int(-7), Int(5)) == Int(3));
  CHECK(floor_mod(Int(7), Int(-5)) == Int(-3)); // sign follows the divisor
  for (long long a = -12; a <= 12; a++)
    for (long long b : {-5LL, -2LL, 2LL, 5LL})
      CHECK(Int(b) * floor_div(Int(a), Int(b)) + floor_mod(Int(a), Int(b)) == Int(a));
}

TEST_CASE("exact division guards") {
  CHECK(div_exact(Int(12), Int(-4)) == Int(-3));
  CHECK_THROWS_AS(div_exact(Int(7), Int(2)), calc_error);
  CHECK(gcd(Int(-12), Int(18)) == Int(6));
  CHECK(abs(Int(-5)) == Int(5));
}

TEST_CASE("rationals normalize") {
  Rat half(Int(2), Int(4));
  CHECK(half.str() == "1/2");
  Rat neg(Int(1), Int(-2));
  CHECK(neg.str() == "-1/2"); // denominator kept positive
  CHECK((half + neg).is_zero());
  CHECK(Rat(Int(6), Int(3)).is_integer());
  CHECK(Rat(Int(6), Int(3)).str() == "2");
  CHECK((Rat(Int(1), Int(3)) * Rat(Int(3))).is_integer());
  CHECK(Rat(Int(-3)).sign() == -1);
}

TEST_CASE("lexicographic comparison on coordinate vectors") {
  std::vector<Int> a = {Int(1), Int(2)};
  std::vector<Int> b = {Int(1), Int(3)};
  CHECK(lex_cmp(a, b) < 0);
  CHECK(lex_cmp(b, a) > 0);
  CHECK(lex_cmp(a, a) == 0);
}

} // TEST_SUITE
