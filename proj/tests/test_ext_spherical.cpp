#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sl2hecke/ext_spherical.hpp"

using namespace sl2hecke;

namespace {

constexpr uint32_t P = 5;

ExtAlg& E() {
    static ExtAlg e(P);
    return e;
}

SphericalAlg& K() {
    static SphericalAlg k(E(), 8);
    return k;
}

const WeylElt s0 = WeylElt::s(0);
const WeylElt s1 = WeylElt::s(1);

} // namespace

TEST_CASE("squeeze on the canonical generators") {
    auto& S = K();
    auto& A = E();
    // zeta -> T
    CHECK(S.squeeze(A.zeta()) == S.T_power(1));
    CHECK(S.squeeze(A.zeta_pow(3)) == S.T_power(3));
    // kernel elements -> 0
    CHECK(S.squeeze(A.psi_sym(s0)).is_zero());
    CHECK(S.squeeze(A.beta_sym(s0)).is_zero());
    // f(zeta - 1) -> u, nonzero
    SphericalExtElt u = S.squeeze(A.central_u(0));
    CHECK(u == S.u_T_power(0));
    CHECK(!u.is_zero());
    // unital and linear
    CHECK(S.squeeze(A.one()) == S.one());
    GradedExtElt combo = A.add(A.scale(3, A.zeta()), A.beta_pair(2));
    SphericalExtElt expect = S.B(2);
    S.axpy(expect, 3, S.T_power(1));
    CHECK(S.squeeze(combo) == expect);
    // non-central input is rejected
    CHECK_THROWS(S.squeeze(A.basis(ExtKind::Tau, s0)));
    CHECK_THROWS(S.squeeze(A.basis(ExtKind::Phi, WeylElt::theta_pow(1))));
}

TEST_CASE("down-up transport through the idempotent") {
    // e z e computed in E_J^* recovers the expected alpha/phi expressions,
    // and kills exactly the kernel span.
    auto& A = E();
    GradedExtElt e = A.add(A.basis(ExtKind::Tau, s0), A.one());
    auto sandwich = [&](const GradedExtElt& z) { return A.mul(A.mul(e, z), e); };

    CHECK(sandwich(A.psi_sym(s0)).is_zero());
    CHECK(sandwich(A.beta_sym(s0)).is_zero());
    CHECK(sandwich(A.phi1()) == A.phi1());

    auto alpha = [&](const WeylElt& w) { return A.basis(ExtKind::Alpha, w); };
    auto phi = [&](const WeylElt& w) { return A.basis(ExtKind::Phi, w); };
    // beta pairs land on consecutive alpha differences along s1 (s0 s1)^n
    CHECK(sandwich(A.beta_pair(0)) == A.scale(P - 1, alpha(s1)));
    for (long n = 1; n <= 3; ++n)
        CHECK(sandwich(A.beta_pair(n)) ==
              A.sub(alpha(ExtAlg::zigzag1(n - 1)), alpha(ExtAlg::zigzag1(n))));
    // psi pairs land on phi differences
    CHECK(sandwich(A.psi_pair(0)) == A.sub(phi(WeylElt::identity()), phi(s1)));
    for (long n = 1; n <= 3; ++n)
        CHECK(sandwich(A.psi_pair(n)) ==
              A.sub(phi(ExtAlg::zigzag1(n - 1)), phi(ExtAlg::zigzag1(n))));

    // e (zeta - 1) e = e tau_{s1} e at the Hecke level
    const HeckeAlg& H = A.hecke();
    HeckeElt he = H.add(H.basis_iwahori(s0), H.one(Algebra::Iwahori));
    HeckeElt zm1 = H.sub(H.zeta(), H.one(Algebra::Iwahori));
    CHECK(H.mul(H.mul(he, zm1), he) == H.mul(H.mul(he, H.basis_iwahori(s1)), he));
}

TEST_CASE("spherical products") {
    auto& S = K();
    // T B_0 = 0 and T B_n = B_{n-1}
    CHECK(S.ek_mul(S.T_power(1), S.B(0)).is_zero());
    for (long n = 1; n <= 4; ++n) CHECK(S.ek_mul(S.T_power(1), S.B(n)) == S.B(n - 1));
    // T Psi_n likewise, with Phi_1 a T-fixed line
    for (long n = 1; n <= 4; ++n) CHECK(S.ek_mul(S.T_power(1), S.Psi(n)) == S.Psi(n - 1));
    CHECK(S.ek_mul(S.T_power(1), S.Psi(0)).is_zero());
    CHECK(S.ek_mul(S.T_power(1), S.Phi1()) == S.Phi1());
    // u^2 = B_0 != 0
    SphericalExtElt sq = S.ek_mul(S.u_T_power(0), S.u_T_power(0));
    CHECK(sq == S.B(0));
    CHECK(!sq.is_zero());
    // u u T^a = 0 once a T eats the torsion class
    CHECK(S.ek_mul(S.u_T_power(1), S.u_T_power(0)).is_zero());
    CHECK(S.ek_mul(S.u_T_power(0), S.u_T_power(1)).is_zero());
    // u B_n telescopes into psi pairs
    CHECK(S.ek_mul(S.u_T_power(0), S.B(0)) == S.Psi(0));
    for (long n = 1; n <= 3; ++n)
        CHECK(S.ek_mul(S.u_T_power(0), S.B(n)) == S.sub(S.Psi(n), S.Psi(n - 1)));
    // degree-0/1 module structure: T^a T^b, T^a u T^b
    CHECK(S.ek_mul(S.T_power(2), S.T_power(3)) == S.T_power(5));
    CHECK(S.ek_mul(S.T_power(2), S.u_T_power(1)) == S.u_T_power(3));
    // the kernel is an ideal: products with kernel elements squeeze to zero
    auto& A = E();
    for (const auto& k : S.kernel_basis_elements()) {
        CHECK(S.squeeze(A.mul(A.zeta(), k)).is_zero());
        CHECK(S.squeeze(A.mul(A.central_u(0), k)).is_zero());
    }
}

TEST_CASE("commutativity without graded commutativity") {
    auto& S = K();
    SphericalReport rep = S.graded_comm_report(4);
    CHECK(rep.commutative);
    CHECK(!rep.graded_commutative);
    CHECK(rep.kernel_dim == 2);
    CHECK(rep.splitting_ok);
    CHECK(!rep.witness.empty());
}

TEST_CASE("centrality membership") {
    auto& S = K();
    auto& A = E();
    CHECK(S.is_central(A.zeta_pow(2)));
    CHECK(S.is_central(A.beta_pair(1)));
    CHECK(S.is_central(A.psi_sym(s0)));
    CHECK(!S.is_central(A.basis(ExtKind::X, s1)));
    CHECK(!S.is_central(A.basis(ExtKind::Alpha, WeylElt::theta_pow(1))));
    // beta_{s1} is central (it differs from the pair by beta_{s0})
    CHECK(S.is_central(A.beta_sym(s1)));
}

TEST_CASE("representative round trip") {
    auto& S = K();
    for (long m = 0; m <= 3; ++m) {
        CHECK(S.squeeze(S.representative(S.T_power(m))) == S.T_power(m));
        CHECK(S.squeeze(S.representative(S.u_T_power(m))) == S.u_T_power(m));
        CHECK(S.squeeze(S.representative(S.B(m))) == S.B(m));
        CHECK(S.squeeze(S.representative(S.Psi(m))) == S.Psi(m));
    }
    CHECK(S.squeeze(S.representative(S.Phi1())) == S.Phi1());
    CHECK_THROWS(S.representative(S.T_power(100)));
}
