#include "krein/io.hpp"
#include "krein/random.hpp"
#include "test_util.hpp"

using namespace krein;
using namespace krein::test;

namespace {
const std::string kData = KREIN_TEST_DATA_DIR;
}

TEST_CASE("kernel files") {
  const HermitianKernel k = read_kernel_file(kData + "/kernel_scalar_indefinite.json");
  CHECK(k.n() == 2);
  CHECK(k.dim() == 1);
  CHECK(k.block(0, 0)(0, 0) == Complex(1.0));
  CHECK(k.block(1, 1)(0, 0) == Complex(-1.0));
  // Omitted blocks default to zero.
  CHECK(k.block(0, 1)(0, 0) == Complex(0.0));

  const HermitianKernel round = parse_kernel_json(kernel_to_json(k));
  CHECK(kernel_distance(round, k) == 0.0);
  CHECK(round.points == k.points);
}

TEST_CASE("kernel round trip over random instances") {
  Rng rng(111);
  for (int trial = 0; trial < 10; ++trial) {
    const KreinSpace h = rng.krein_space(1 + trial % 3);
    const HermitianKernel k = rng.hermitian_kernel(h, 1 + trial % 4);
    const HermitianKernel round = parse_kernel_json(kernel_to_json(k));
    CHECK(kernel_distance(round, k) < 1e-15);
    CHECK(dist(round.H.J, k.H.J) < 1e-15);
  }
}

TEST_CASE("hermitian closure is validated, not inferred") {
  const std::string text = R"({
    "space": { "dim": 1, "J": [[[1, 0]]] },
    "points": ["a", "b"],
    "blocks": { "a,b": [[[1, 0]]] }
  })";
  CHECK_THROWS(parse_kernel_json(text));  // the b,a block is missing (zero)
}

TEST_CASE("labels with commas are rejected") {
  const std::string text = R"({
    "space": { "dim": 1, "J": [[[1, 0]]] },
    "points": ["a,b"],
    "blocks": {}
  })";
  CHECK_THROWS(parse_kernel_json(text));
}

TEST_CASE("action files") {
  const ActionSystem action = read_action_file(kData + "/action_z2_swap.json");
  CHECK(action.S.size() == 2);
  CHECK(action.n_points == 2);
  CHECK(validate_action(action).ok);
  CHECK(action.phi(1, 0) == 1);
}

TEST_CASE("gns input files") {
  const HermitianFunctional z = read_gns_input_file(kData + "/gns_m2_indefinite.json");
  CHECK(z.algebra.d == 4);
  CHECK(z.values(0) == Complex(2.0));
  CHECK(z.values(3) == Complex(-1.0));

  const HermitianFunctional zc = read_gns_input_file(kData + "/gns_cz2.json");
  CHECK(zc.algebra.d == 2);
  CHECK(zc.values(1) == Complex(3.0));
  // The explicit structure tensor round-trips through multiplication.
  CHECK((zc.algebra.multiply(zc.algebra.basis(1), zc.algebra.basis(1)) -
         zc.algebra.basis(0)).norm() == 0.0);
}

TEST_CASE("map files") {
  const HermitianMap t = read_map_file(kData + "/map_transpose.json");
  CHECK(t.k == 2);
  CHECK(t.h == 2);
  CHECK(dist(t.block(0, 1), m2(0, 0, 1, 0)) == 0.0);
  CHECK_THROWS(parse_map_json(R"({"k": 2, "h": 1, "blocks": {"3,1": [[[1,0]]]}})"));
}

TEST_CASE("broken files raise parse errors") {
  CHECK_THROWS(read_kernel_file(kData + "/broken.json"));
  CHECK_THROWS(read_kernel_file(kData + "/does_not_exist.json"));
}
