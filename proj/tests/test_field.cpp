#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gq/field.hpp"

using namespace gq;

static void check_axioms(const FieldPtr& F, std::mt19937_64& rng) {
  for (int trial = 0; trial < 25; ++trial) {
    FieldElement a = F->random_element(rng);
    FieldElement b = F->random_element(rng);
    FieldElement c = F->random_element(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + F->zero() == a);
    CHECK(a * F->one() == a);
    CHECK((a - a).is_zero());
    if (!a.is_zero()) {
      CHECK((a * a.inverse()).is_one());
      CHECK(a / a == F->one());
    }
  }
}

TEST_CASE("field axioms across all kinds") {
  std::mt19937_64 rng(12345);
  check_axioms(Field::rationals(), rng);
  check_axioms(Field::cyclotomic(7), rng);
  check_axioms(Field::cyclotomic(21), rng);
  check_axioms(Field::prime(29), rng);
  check_axioms(Field::prime(11), rng);
  check_axioms(Field::extension(11, 3), rng);
}

TEST_CASE("cyclotomic field degrees") {
  CHECK(Field::cyclotomic(7)->degree() == 6);
  CHECK(Field::cyclotomic(21)->degree() == 12);
  CHECK(Field::cyclotomic(12)->degree() == 4);
}

TEST_CASE("cyclotomic polynomial values") {
  auto phi7 = cyclotomic_polynomial(7);
  REQUIRE(phi7.size() == 7);
  for (auto& c : phi7) CHECK(c == 1);
  auto phi12 = cyclotomic_polynomial(12);  // x^4 - x^2 + 1
  REQUIRE(phi12.size() == 5);
  CHECK(phi12[0] == 1);
  CHECK(phi12[1] == 0);
  CHECK(phi12[2] == -1);
  CHECK(phi12[3] == 0);
  CHECK(phi12[4] == 1);
}

TEST_CASE("power sum of seventh root vanishes") {
  auto F = Field::cyclotomic(7);
  FieldElement z = F->root_of_unity(7);
  FieldElement s = F->zero();
  FieldElement zp = F->one();
  for (int i = 0; i < 7; ++i) {
    s = s + zp;
    zp = zp * z;
  }
  CHECK(s.is_zero());
  CHECK(zp == F->one());  // z^7 = 1
  CHECK(z != F->one());
}

TEST_CASE("roots of unity in prime fields") {
  auto F29 = Field::prime(29);
  FieldElement z = F29->root_of_unity(7);
  CHECK(z.pow(7).is_one());
  for (int i = 1; i < 7; ++i) CHECK(!z.pow(i).is_one());

  auto F43 = Field::prime(43);
  FieldElement w = F43->root_of_unity(21);
  CHECK(w.pow(21).is_one());
  CHECK(!w.pow(7).is_one());
  CHECK(!w.pow(3).is_one());

  CHECK_THROWS_AS(Field::prime(11)->root_of_unity(7), NoRootOfUnity);
  CHECK(!Field::prime(11)->has_root_of_unity(7));
  CHECK(Field::prime(29)->has_root_of_unity(7));
}

TEST_CASE("roots of unity in extensions") {
  // 7 | 11^3 - 1? 11^3 = 1331, 1330 = 2*5*7*19, yes.
  auto F = Field::extension(11, 3);
  FieldElement z = F->root_of_unity(7);
  CHECK(z.pow(7).is_one());
  for (int i = 1; i < 7; ++i) CHECK(!z.pow(i).is_one());
}

TEST_CASE("primality and field construction guards") {
  CHECK_THROWS_AS(Field::prime(15), NotPrime);
  CHECK(is_prime_u64(1000003));
  CHECK(!is_prime_u64(1000001));  // 101 * 9901
}

TEST_CASE("minus one is a square root of unity everywhere") {
  for (auto F : {Field::rationals(), Field::cyclotomic(7), Field::prime(13)}) {
    FieldElement m = F->root_of_unity(2);
    CHECK((m * m).is_one());
    CHECK(m == -F->one());
  }
}

TEST_CASE("cyclotomic field of odd order contains order-2n roots") {
  auto F = Field::cyclotomic(7);
  CHECK(F->has_root_of_unity(14));
  FieldElement z14 = F->root_of_unity(14);
  CHECK(z14.pow(14).is_one());
  CHECK(!z14.pow(7).is_one());
  CHECK(!z14.pow(2).is_one());
}

TEST_CASE("reduction from cyclotomic to a prime field") {
  auto C = Field::cyclotomic(7);
  auto F = Field::prime(29);
  FieldElement img = F->root_of_unity(7);
  FieldElement z = C->generator();
  // map is a ring hom: check on a few combinations
  FieldElement a = z * z + C->from_int(3) * z - C->one();
  FieldElement fa = F->map_from(a, img);
  FieldElement expect = img * img + F->from_int(3) * img - F->one();
  CHECK(fa == expect);
  // 1 + z + ... + z^6 = 0 maps to 0
  FieldElement s = C->zero(), zp = C->one();
  for (int i = 0; i < 7; ++i) { s = s + zp; zp = zp * z; }
  CHECK(F->map_from(s, img).is_zero());
}

TEST_CASE("mixing fields throws") {
  auto a = Field::prime(11)->one();
  auto b = Field::prime(13)->one();
  CHECK_THROWS_AS((void)(a + b), MixedFields);
}

TEST_CASE("rational arithmetic is exact") {
  auto Q = Field::rationals();
  FieldElement third = Q->from_rational(mpq_class(1, 3));
  FieldElement sum = Q->zero();
  for (int i = 0; i < 3; ++i) sum = sum + third;
  CHECK(sum.is_one());
  CHECK(Q->from_rational(mpq_class(2, 6)) == third);
}
