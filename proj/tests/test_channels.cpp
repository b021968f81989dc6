// Copyright 2026 The eawmr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <tuple>

#include "eawmr/channel_io.hpp"
#include "eawmr/channels.hpp"
#include "test_support.hpp"

using namespace eawmr;
using eawmr::testing::random_density;
using eawmr::testing::random_unitary;

namespace {

Matrix sigma_z() { return Matrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}); }

KrausChannel dephasing(double p) {
  const double a = std::sqrt(p);
  const double b = std::sqrt(1.0 - p);
  return KrausChannel(
      2, {Complex{a, 0.0} * Matrix::identity(2), Complex{b, 0.0} * sigma_z()});
}

DensityMatrix basis_state(int dim, int index) {
  Matrix m(dim, dim);
  m(index, index) = 1.0;
  return DensityMatrix(std::move(m));
}

// Spanning family of density matrices: linear maps that agree on all of
// these agree on every input.
std::vector<DensityMatrix> state_basis(int dim) {
  std::vector<DensityMatrix> states;
  for (int i = 0; i < dim; ++i) states.push_back(basis_state(dim, i));
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      std::vector<Complex> plus(dim), plus_i(dim);
      plus[i] = plus[j] = 1.0 / std::numbers::sqrt2;
      plus_i[i] = 1.0 / std::numbers::sqrt2;
      plus_i[j] = Complex{0.0, 1.0 / std::numbers::sqrt2};
      states.push_back(DensityMatrix::pure(PureState(std::move(plus))));
      states.push_back(DensityMatrix::pure(PureState(std::move(plus_i))));
    }
  return states;
}

// Direct per-operator criterion for the RU property, kept independent of
// detect_ru: K^dag K must equal (tr[K^dag K]/d) I entrywise.
bool ru_oracle(const KrausChannel& ch, double tol) {
  for (const Matrix& k : ch.ops()) {
    const Matrix g = dagger(k) * k;
    const double scalar = trace(g).real() / ch.dim();
    Matrix scaled(ch.dim(), ch.dim());
    for (int i = 0; i < ch.dim(); ++i) scaled(i, i) = scalar;
    if (max_abs_diff(g, scaled) > tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("amplitude damping operators") {
  SUBCASE("no decay at gamma = 1") {
    const KrausChannel ch = amplitude_damping(1.0);
    CHECK(max_abs_diff(ch.op(0), Matrix::identity(2)) == 0.0);
    CHECK(max_abs(ch.op(1)) == 0.0);
  }
  SUBCASE("full decay at gamma = 0") {
    const KrausChannel ch = amplitude_damping(0.0);
    CHECK(max_abs_diff(ch.op(0),
                       Matrix::from_rows({{0.0, 0.0}, {0.0, 1.0}})) == 0.0);
    CHECK(max_abs_diff(ch.op(1),
                       Matrix::from_rows({{0.0, 0.0}, {1.0, 0.0}})) == 0.0);
  }
  SUBCASE("3-4-5 weights") {
    const KrausChannel ch = amplitude_damping(0.6);
    CHECK(ch.op(1)(1, 0).real() == doctest::Approx(0.8).epsilon(1e-15));
  }
  CHECK_THROWS_AS(amplitude_damping(1.5), std::invalid_argument);
  CHECK_THROWS_AS(amplitude_damping(-0.1), std::invalid_argument);
}

TEST_CASE("two-qubit dissipative channel") {
  SUBCASE("identity channel at t = 0") {
    const KrausChannel ch = two_qubit_dissipative(DecayParams(1.0, 1.0));
    CHECK(max_abs_diff(ch.op(0), Matrix::identity(4)) == 0.0);
    for (int n = 1; n < 4; ++n) CHECK(max_abs(ch.op(n)) == 0.0);
  }
  SUBCASE("leading operator is diagonal in the decay amplitudes") {
    const KrausChannel ch = two_qubit_dissipative(DecayParams(0.6, 0.8));
    const Matrix& k1 = ch.op(0);
    CHECK(k1(0, 0).real() == doctest::Approx(0.48).epsilon(1e-15));
    CHECK(k1(1, 1).real() == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(k1(2, 2).real() == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(k1(3, 3).real() == 1.0);
  }
  SUBCASE("lowering operators land on the expected positions") {
    // gamma_a 0.6 -> omega_a 0.8, gamma_b 0.8 -> omega_b 0.6
    const KrausChannel ch = two_qubit_dissipative(DecayParams(0.6, 0.8));
    auto check_structure = [](const Matrix& k,
                              std::vector<std::tuple<int, int, double>>
                                  expected) {
      Matrix want(4, 4);
      for (const auto& [i, j, v] : expected) want(i, j) = v;
      CHECK(max_abs_diff(k, want) < 1e-15);
    };
    check_structure(ch.op(1), {{1, 0, 0.36}, {3, 2, 0.6}});
    check_structure(ch.op(2), {{2, 0, 0.64}, {3, 1, 0.8}});
    check_structure(ch.op(3), {{3, 0, 0.48}});
  }
  SUBCASE("trace preservation across the parameter square") {
    for (double ga : {0.0, 0.3, 0.7, 1.0})
      for (double gb : {0.0, 0.4, 0.9, 1.0}) {
        const KrausChannel ch = two_qubit_dissipative(DecayParams(ga, gb));
        Matrix sum(4, 4);
        for (const Matrix& k : ch.ops()) sum = sum + dagger(k) * k;
        CHECK(max_abs_diff(sum, Matrix::identity(4)) < 1e-12);
      }
  }
}

TEST_CASE("channel constructor rejects non-CPTP operator sets") {
  const Matrix half = Complex{0.5, 0.0} * Matrix::identity(2);
  CHECK_THROWS_AS(KrausChannel(2, {half}), InvariantViolation);
  CHECK_THROWS_AS(KrausChannel(2, {}), InvariantViolation);
  CHECK_THROWS_AS(KrausChannel(4, {Matrix::identity(2)}), DimensionMismatch);
}

TEST_CASE("apply") {
  const DensityMatrix excited = basis_state(2, 0);

  SUBCASE("identity channel is a no-op") {
    const KrausChannel id = amplitude_damping(1.0);
    SplitMix64 rng(21);
    const DensityMatrix rho = random_density(2, rng);
    CHECK(max_abs_diff(apply(id, rho).mat(), rho.mat()) < 1e-15);
  }
  SUBCASE("complete decay moves the excited level down") {
    const DensityMatrix out = apply(amplitude_damping(0.0), excited);
    CHECK(max_abs_diff(out.mat(), basis_state(2, 1).mat()) < 1e-15);
  }
  SUBCASE("partial decay splits the population") {
    const double g = 0.7;
    const DensityMatrix out = apply(amplitude_damping(g), excited);
    CHECK(out.mat()(0, 0).real() == doctest::Approx(g * g).epsilon(1e-14));
    CHECK(out.mat()(1, 1).real() ==
          doctest::Approx(1.0 - g * g).epsilon(1e-14));
  }
  SUBCASE("trace and positivity are preserved on random states") {
    SplitMix64 rng(22);
    for (int rep = 0; rep < 20; ++rep) {
      const KrausChannel ch = two_qubit_dissipative(
          DecayParams(rng.next_double(), rng.next_double()));
      const DensityMatrix out = apply(ch, random_density(4, rng));
      CHECK(std::abs(trace(out.mat()).real() - 1.0) < 1e-9);
      CHECK(hermitian_eigenvalues(out.mat()).front() > -1e-9);
    }
  }
  CHECK_THROWS_AS(apply(amplitude_damping(0.5), basis_state(4, 0)),
                  DimensionMismatch);
}

TEST_CASE("transform") {
  const KrausChannel ch = amplitude_damping(0.6);

  SUBCASE("identity mixing leaves operators untouched") {
    const KrausChannel same = transform(ch, Matrix::identity(2));
    CHECK(max_abs_diff(same.op(0), ch.op(0)) == 0.0);
    CHECK(max_abs_diff(same.op(1), ch.op(1)) == 0.0);
  }
  SUBCASE("permutation mixing swaps operators") {
    const Matrix swap = Matrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    const KrausChannel swapped = transform(ch, swap);
    CHECK(max_abs_diff(swapped.op(0), ch.op(1)) == 0.0);
    CHECK(max_abs_diff(swapped.op(1), ch.op(0)) == 0.0);
  }
  SUBCASE("quarter rotation mixes the canonical pair") {
    const double c = std::numbers::sqrt2 / 2.0;
    const Matrix rot = Matrix::from_rows({{c, -c}, {c, c}});
    const KrausChannel mixed = transform(ch, rot);
    const Matrix expected = Matrix::from_rows({{0.6 * c, 0.0}, {-0.8 * c, c}});
    CHECK(max_abs_diff(mixed.op(0), expected) < 1e-15);
  }
  SUBCASE("mixing never changes the channel's action") {
    SplitMix64 rng(23);
    for (int rep = 0; rep < 10; ++rep) {
      const Matrix v = random_unitary(2, rng);
      const KrausChannel mixed = transform(ch, v);
      for (const DensityMatrix& rho : state_basis(2))
        CHECK(max_abs_diff(apply(mixed, rho).mat(), apply(ch, rho).mat()) <
              1e-9);
    }
    // also at four operators, through a 4x4 mixing unitary
    const KrausChannel two = two_qubit_dissipative(DecayParams(0.7, 0.9));
    const Matrix v4 = random_unitary(4, rng);
    const KrausChannel mixed4 = transform(two, v4);
    for (const DensityMatrix& rho : state_basis(4))
      CHECK(max_abs_diff(apply(mixed4, rho).mat(), apply(two, rho).mat()) <
            1e-9);
  }
  SUBCASE("rejects non-unitary or mis-sized mixing") {
    CHECK_THROWS_AS(transform(ch, Complex{2.0, 0.0} * Matrix::identity(2)),
                    NotUnitaryError);
    CHECK_THROWS_AS(transform(ch, Matrix::identity(3)), DimensionMismatch);
  }
  SUBCASE("transformed channels stay trace preserving") {
    SplitMix64 rng(24);
    for (int rep = 0; rep < 20; ++rep) {
      const double g = rng.next_double();
      // constructor re-checks the CPTP invariant
      CHECK_NOTHROW(transform(amplitude_damping(g), random_unitary(2, rng)));
    }
  }
}

TEST_CASE("detect_ru") {
  SUBCASE("dephasing channel is RU") {
    const RuDetection det = detect_ru(dephasing(0.3));
    REQUIRE(det.is_ru());
    CHECK(det.decomposition->coeffs()[0].real() ==
          doctest::Approx(std::sqrt(0.3)).epsilon(1e-14));
    CHECK(det.decomposition->coeffs()[1].real() ==
          doctest::Approx(std::sqrt(0.7)).epsilon(1e-14));
    CHECK(max_abs_diff(det.decomposition->unitaries()[0],
                       Matrix::identity(2)) < 1e-14);
    CHECK(max_abs_diff(det.decomposition->unitaries()[1], sigma_z()) < 1e-14);
  }
  SUBCASE("dissipative channel is not RU") {
    const RuDetection det = detect_ru(amplitude_damping(0.6));
    CHECK(!det.is_ru());
    CHECK(det.failing_index == 0);
  }
  SUBCASE("identity-only channel is RU with c = 1") {
    const RuDetection det = detect_ru(KrausChannel(2, {Matrix::identity(2)}));
    REQUIRE(det.is_ru());
    CHECK(det.decomposition->coeffs()[0] == Complex{1.0, 0.0});
  }
  SUBCASE("zero operators are RU by convention") {
    const RuDetection det = detect_ru(amplitude_damping(1.0));
    REQUIRE(det.is_ru());
    CHECK(det.decomposition->coeffs()[1] == Complex{0.0, 0.0});
    CHECK(max_abs_diff(det.decomposition->unitaries()[1],
                       Matrix::identity(2)) == 0.0);
  }
  SUBCASE("decision agrees with the per-operator oracle under mixing") {
    SplitMix64 rng(25);
    const double tol = 1e-10;
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    int non_ru_seen = 0;
    for (int rep = 0; rep < 40; ++rep) {
      const KrausChannel base = dephasing(0.05 + 0.9 * rng.next_double());
      Matrix v = Matrix::identity(2);
      if (rep % 2 == 0) {
        // generic mixing: almost surely breaks the RU property
        v = random_unitary(2, rng);
      } else {
        // phase-only mixing: rescales each operator, RU survives
        v(0, 0) = std::polar(1.0, kTwoPi * rng.next_double());
        v(1, 1) = std::polar(1.0, kTwoPi * rng.next_double());
      }
      const KrausChannel mixed = transform(base, v);
      const bool expected = ru_oracle(mixed, tol);
      CHECK(detect_ru(mixed, tol).is_ru() == expected);
      if (!expected) ++non_ru_seen;
    }
    // the sample must exercise both outcomes for the check to mean much
    CHECK(non_ru_seen > 0);
    CHECK(non_ru_seen < 40);
  }
}

TEST_CASE("decay profile") {
  const DecayProfile profile(1.0);
  CHECK(profile.gamma_at(0.0) == 1.0);
  CHECK(profile.gamma_at(2.0 * std::log(2.0)) ==
        doctest::Approx(0.5).epsilon(1e-14));

  double prev = 1.0;
  for (double t : {0.5, 1.0, 5.0, 50.0}) {
    const double g = profile.gamma_at(t);
    CHECK(g > 0.0);
    CHECK(g < prev);
    prev = g;
  }
  CHECK_THROWS_AS(profile.gamma_at(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(DecayProfile(0.0), std::invalid_argument);
}

TEST_CASE("decay params") {
  const DecayParams p(0.6, 0.8);
  CHECK(p.omega_a() == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(p.omega_b() == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(p.gamma_a * p.gamma_a + p.omega_a() * p.omega_a() ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(DecayParams(1.2, 0.5), std::invalid_argument);
}

TEST_CASE("channel JSON round trip") {
  const KrausChannel ch = two_qubit_dissipative(DecayParams(0.37, 0.81));
  const KrausChannel back = channel_from_json(channel_to_json(ch));
  REQUIRE(back.dim() == 4);
  REQUIRE(back.size() == 4);
  // full-precision writer: the round trip is exact
  for (int n = 0; n < 4; ++n)
    CHECK(max_abs_diff(back.op(n), ch.op(n)) == 0.0);

  // and the same through a file
  const std::string path = "roundtrip_channel.json";
  save_channel(ch, path);
  const KrausChannel loaded = load_channel(path);
  for (int n = 0; n < 4; ++n)
    CHECK(max_abs_diff(loaded.op(n), ch.op(n)) == 0.0);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_channel("does_not_exist.json"), std::invalid_argument);

  // the writer spells non-dyadic values out to full precision
  const std::string text = channel_to_json(ch);
  CHECK(text.find(format_full_precision(ch.op(0)(0, 0).real())) !=
        std::string::npos);
  CHECK(format_full_precision(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("channel JSON rejects malformed input") {
  CHECK_THROWS_AS(channel_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(channel_from_json("{\"dim\": 2}"), std::invalid_argument);
  CHECK_THROWS_AS(channel_from_json("{\"dim\": -1, \"ops\": [[]]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      channel_from_json("{\"dim\": 2, \"ops\": [[[1,0],[0,0],[0,0]]]}"),
      std::invalid_argument);
  // well-formed but not trace preserving
  CHECK_THROWS_AS(
      channel_from_json(
          "{\"dim\": 2, \"ops\": [[[0.5,0],[0,0],[0,0],[0.5,0]]]}"),
      InvariantViolation);
}
