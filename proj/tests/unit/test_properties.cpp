#include "doctest.h"
#include "properties.hpp"

namespace {

void require(const props::Result& r) {
  INFO(r.name << ": " << r.first_failure);
  CHECK(r.instances >= props::kDefaultInstances);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("property.dd") { require(props::d_squared_zero()); }
TEST_CASE("property.act_closure") { require(props::act_closure()); }
TEST_CASE("property.act_group") { require(props::act_group_compatibility()); }
TEST_CASE("property.admissibility") { require(props::admissibility_invariance()); }
TEST_CASE("property.lambda") { require(props::lambda_laws()); }
TEST_CASE("property.signature") { require(props::signature_congruence()); }
TEST_CASE("property.extraction") { require(props::extraction_round_trip()); }
