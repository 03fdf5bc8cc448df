#include "oracle.hpp"

#include "resqnet/error.hpp"
#include "resqnet/statevector.hpp"

#include <catch_amalgamated.hpp>

#include <numbers>

using namespace resqnet;
using Catch::Matchers::WithinAbs;

TEST_CASE("zero_state basis vectors", "[statevector]") {
  const auto one = zero_state(1);
  REQUIRE(one.dimension() == 2);
  CHECK(one[0] == Complex(1, 0));
  CHECK(one[1] == Complex(0, 0));

  const auto two = zero_state(2);
  REQUIRE(two.dimension() == 4);
  CHECK(two[0] == Complex(1, 0));
  for (std::size_t k = 1; k < 4; ++k) CHECK(two[k] == Complex(0, 0));

  CHECK(zero_state(10).squared_norm() == 1.0);
}

TEST_CASE("zero_state rejects out-of-range qubit counts", "[statevector]") {
  CHECK_THROWS_AS(zero_state(0), InvalidArgument);
  CHECK_THROWS_AS(zero_state(25), InvalidArgument);
  CHECK_THROWS_AS(zero_state(5, 4), InvalidArgument);
  CHECK_NOTHROW(zero_state(4, 4));
}

TEST_CASE("Statevector checks its length", "[statevector]") {
  CHECK_THROWS_AS(Statevector(2, std::vector<Complex>(3)), InvalidArgument);
  CHECK_NOTHROW(Statevector(2, std::vector<Complex>(4)));
}

TEST_CASE("apply_gate single-qubit identities", "[statevector]") {
  const auto rx0 = apply_gate(zero_state(1), GateOp::rx(0, 0), 0.0);
  CHECK(rx0[0] == Complex(1, 0));
  CHECK(rx0[1] == Complex(0, 0));

  // RY(pi)|0> = |1>
  const auto ry = apply_gate(zero_state(1), GateOp::ry(0, 0), std::numbers::pi);
  CHECK_THAT(std::abs(ry[0]), WithinAbs(0.0, 1e-15));
  CHECK_THAT(std::abs(ry[1]), WithinAbs(1.0, 1e-15));
}

TEST_CASE("apply_gate rejects malformed gates", "[statevector]") {
  const auto s = zero_state(2);
  CHECK_THROWS_AS(apply_gate(s, GateOp::rx(2, 0), 0.1), InvalidArgument);
  CHECK_THROWS_AS(apply_gate(s, GateOp::rx(0, 0), std::nullopt), InvalidArgument);
  CHECK_THROWS_AS(apply_gate(s, GateOp::cnot(0, 1), 0.3), InvalidArgument);
  CHECK_THROWS_AS(apply_gate(s, GateOp::cnot(1, 1), std::nullopt), InvalidArgument);
  CHECK_THROWS_AS(apply_gate(s, GateOp::cnot(2, 1), std::nullopt), InvalidArgument);
  GateOp bad = GateOp::rx(0, 0);
  bad.control = 1;
  CHECK_THROWS_AS(apply_gate(s, bad, 0.1), InvalidArgument);
  GateOp bad_cnot = GateOp::cnot(0, 1);
  bad_cnot.param_index = 3;
  CHECK_THROWS_AS(apply_gate(s, bad_cnot, std::nullopt), InvalidArgument);
}

TEST_CASE("apply_gate matches the dense Kronecker oracle on 3 qubits", "[statevector][oracle]") {
  Rng rng(2024);
  const std::vector<GateOp> gates{GateOp::rx(0, 0), GateOp::rx(1, 0), GateOp::rx(2, 0),
                                  GateOp::ry(0, 0), GateOp::ry(1, 0), GateOp::ry(2, 0),
                                  GateOp::cnot(0, 1), GateOp::cnot(1, 2), GateOp::cnot(2, 0),
                                  GateOp::cnot(0, 2), GateOp::cnot(2, 1), GateOp::cnot(1, 0)};
  for (int trial = 0; trial < 20; ++trial) {
    const auto v = oracle::random_state(3, rng);
    for (const auto &g : gates) {
      const double angle = rng.uniform(-4.0, 4.0);
      const auto got = apply_gate(oracle::from_eigen(v, 3), g,
                                  g.is_rotation() ? std::optional(angle) : std::nullopt);
      const oracle::Vector want = oracle::gate_matrix(g, angle, 3) * v;
      CHECK(oracle::max_abs_diff(oracle::to_eigen(got), want) < 1e-12);
    }
  }
}

TEST_CASE("gate sequences preserve the norm", "[statevector][property]") {
  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + trial % 6;
    auto s = oracle::from_eigen(oracle::random_state(n, rng), n);
    for (int k = 0; k < 60; ++k) {
      const auto q = static_cast<std::size_t>(rng.next_u64() % n);
      switch (rng.next_u64() % 3) {
      case 0:
        s = apply_gate(std::move(s), GateOp::rx(q, 0), rng.uniform(-7, 7));
        break;
      case 1:
        s = apply_gate(std::move(s), GateOp::ry(q, 0), rng.uniform(-7, 7));
        break;
      default: {
        const auto t = (q + 1 + rng.next_u64() % (n - 1)) % n;
        s = apply_gate(std::move(s), GateOp::cnot(q, t), std::nullopt);
      }
      }
    }
    CHECK_THAT(s.squared_norm(), WithinAbs(1.0, 1e-10));
  }
}

TEST_CASE("composed gates form a unitary matching sequential application", "[statevector][oracle]") {
  Rng rng(99);
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<GateOp> gates;
    std::vector<double> angles;
    for (int k = 0; k < 15; ++k) {
      const auto q = static_cast<std::size_t>(rng.next_u64() % n);
      const auto kind = n == 1 ? rng.next_u64() % 2 : rng.next_u64() % 3;
      if (kind == 2) {
        gates.push_back(GateOp::cnot(q, (q + 1) % n));
      } else {
        gates.push_back(kind == 0 ? GateOp::rx(q, angles.size()) : GateOp::ry(q, angles.size()));
        angles.push_back(rng.uniform(0, 6.3));
      }
    }
    const auto m = oracle::circuit_matrix(gates, angles, n);
    const auto dim = m.rows();
    CHECK((m.adjoint() * m - oracle::Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-10);

    const auto v = oracle::random_state(n, rng);
    auto s = oracle::from_eigen(v, n);
    for (const auto &g : gates) {
      s = apply_gate(std::move(s), g,
                     g.param_index ? std::optional(angles[*g.param_index]) : std::nullopt);
    }
    CHECK(oracle::max_abs_diff(oracle::to_eigen(s), m * v) < 1e-10);
  }
}

TEST_CASE("apply_gate is linear", "[statevector][property]") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = oracle::random_state(3, rng);
    const auto w = oracle::random_state(3, rng);
    const Complex a(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const Complex b(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const GateOp g = trial % 3 == 0   ? GateOp::rx(trial % 3, 0)
                     : trial % 3 == 1 ? GateOp::ry(1, 0)
                                      : GateOp::cnot(2, 0);
    const auto angle = g.is_rotation() ? std::optional(rng.uniform(-3, 3)) : std::nullopt;
    const oracle::Vector lhs =
        oracle::to_eigen(apply_gate(oracle::from_eigen(a * u + b * w, 3), g, angle));
    const oracle::Vector rhs = a * oracle::to_eigen(apply_gate(oracle::from_eigen(u, 3), g, angle)) +
                               b * oracle::to_eigen(apply_gate(oracle::from_eigen(w, 3), g, angle));
    CHECK(oracle::max_abs_diff(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("probability_of_all_zeros", "[statevector]") {
  CHECK(probability_of_all_zeros(zero_state(5)) == 1.0);
  CHECK(probability_of_all_zeros(Statevector(1, {0.0, 1.0})) == 0.0);
  CHECK_THAT(probability_of_all_zeros(Statevector(2, {0.5, 0.5, 0.5, 0.5})),
             WithinAbs(0.25, 1e-15));
}
