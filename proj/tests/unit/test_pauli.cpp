#include <doctest.h>

#include "qweave/errors.hpp"
#include "qweave/pauli.hpp"

using namespace qweave;

TEST_CASE("pauli encoding and printing") {
  CHECK(PauliString::single_x(3, 0).to_string() == "+XII");
  CHECK(PauliString::single_y(3, 1).to_string() == "+IYI");
  CHECK(PauliString::single_z(3, 2).to_string() == "+IIZ");
  PauliString minus_z = PauliString::single_z(1, 0);
  minus_z.negate();
  CHECK(minus_z.to_string() == "-Z");
}

TEST_CASE("multiplication tracks phases exactly") {
  const int n = 1;
  PauliString x = PauliString::single_x(n, 0);
  PauliString y = PauliString::single_y(n, 0);
  PauliString z = PauliString::single_z(n, 0);

  // XY = iZ, YX = -iZ, ZX = iY, XZ = -iY, YZ = iX, ZY = -iX
  CHECK(x.multiplied_by(y) == PauliString{0, 1, 1, n});
  CHECK(y.multiplied_by(x) == PauliString{0, 1, 3, n});
  CHECK(z.multiplied_by(x) == PauliString{1, 1, 2, n});  // i * (iXZ) = i^2 XZ
  CHECK(x.multiplied_by(z) == PauliString{1, 1, 0, n});  // -i * (iXZ)
  CHECK(y.multiplied_by(z) == PauliString{1, 0, 1, n});
  CHECK(z.multiplied_by(y) == PauliString{1, 0, 3, n});

  // squares are the identity with phase +1
  for (const PauliString& p : {x, y, z}) {
    CHECK(p.multiplied_by(p) == PauliString::identity(n));
  }
}

TEST_CASE("commutation") {
  const int n = 2;
  PauliString x0 = PauliString::single_x(n, 0);
  PauliString z0 = PauliString::single_z(n, 0);
  PauliString z1 = PauliString::single_z(n, 1);
  CHECK_FALSE(x0.commutes_with(z0));
  CHECK(x0.commutes_with(z1));
  PauliString xx{0b11, 0, 0, n};
  PauliString zz{0, 0b11, 0, n};
  CHECK(xx.commutes_with(zz));  // two anticommuting sites cancel
}

TEST_CASE("hermiticity and sign") {
  PauliString y = PauliString::single_y(2, 0);
  CHECK(y.is_hermitian());
  CHECK(y.sign() == 1);
  y.negate();
  CHECK(y.sign() == -1);

  PauliString bogus{1, 1, 0, 2};  // XZ alone is not Hermitian
  CHECK_FALSE(bogus.is_hermitian());
}

TEST_CASE("single-qubit clifford conjugation") {
  const int n = 1;
  PauliString x = PauliString::single_x(n, 0);
  PauliString y = PauliString::single_y(n, 0);
  PauliString z = PauliString::single_z(n, 0);

  PauliString p = x;
  p.conjugate_h(0);
  CHECK(p == z);
  p = z;
  p.conjugate_h(0);
  CHECK(p == x);
  p = y;
  p.conjugate_h(0);
  PauliString minus_y = y;
  minus_y.negate();
  CHECK(p == minus_y);

  p = x;
  p.conjugate_s(0);
  CHECK(p == y);
  p = y;
  p.conjugate_s(0);
  PauliString minus_x = x;
  minus_x.negate();
  CHECK(p == minus_x);
  p = z;
  p.conjugate_s(0);
  CHECK(p == z);

  p = x;
  p.conjugate_s(0);
  p.conjugate_sdg(0);
  CHECK(p == x);

  p = z;
  p.conjugate_x(0);
  PauliString minus_z = z;
  minus_z.negate();
  CHECK(p == minus_z);
  p = x;
  p.conjugate_z(0);
  CHECK(p == minus_x);
}

TEST_CASE("dropping an unsupported qubit") {
  PauliString p{0b101, 0b100, 0, 3};  // X I (XZ-part) ... support on 0 and 2
  p.phase_exp = 1;                    // make it the Y on qubit 2
  CHECK(p.has_support(0));
  CHECK_FALSE(p.has_support(1));
  PauliString dropped = p.dropped(1);
  CHECK(dropped.num_qubits == 2);
  CHECK(dropped.x == 0b11);
  CHECK(dropped.z == 0b10);
  CHECK(dropped.phase_exp == 1);
  CHECK_THROWS_AS(p.dropped(0), Error);
}
