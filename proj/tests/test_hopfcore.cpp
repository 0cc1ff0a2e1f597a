// Axiom verification, duals and twists on the catalog algebras, plus the
// JSON interchange round-trip.

#include <doctest.h>

#include "hopfcorr/json_io.hpp"

using namespace hopfcorr;

namespace {

const AxiomCheck& find_check(const AxiomReport& r, const std::string& family) {
    for (const auto& c : r.checks)
        if (c.family == family) return c;
    throw hc_error("no such axiom family: " + family);
}

template <class K>
Matrix<K> swap_matrix(int n) {
    std::vector<int> dims{n, n};
    return tensor_permutation<K>(dims, {1, 0});
}

// antipode antimorphism identities, checked as matrix identities
template <class K>
void check_antimorphism(const HopfAlgebra<K>& h) {
    Matrix<K> m = h.mult_matrix(), d = h.comult_matrix(), s = h.antipode;
    Matrix<K> sw = swap_matrix<K>(h.dim);
    CHECK((s * m) == (m * s.kron(s) * sw));        // S(ab) = S(b)S(a)
    CHECK((s.kron(s) * d) == (sw * (d * s)));      // (S (x) S)Delta = Delta^op S
}

}  // namespace

TEST_CASE("QC2 passes all axiom families") {
    auto h = build_group_algebra<Rat>({2}, FieldDesc::rationals());
    auto report = verify_axioms(h);
    CHECK(report.all_pass());
    CHECK(report.checks.size() == 8);
    CHECK(h.labels == std::vector<std::string>{"1", "g"});
}

TEST_CASE("Sweedler H4: axioms pass and S has order exactly 4") {
    auto h = build_sweedler4<Rat>(FieldDesc::rationals());
    CHECK(verify_axioms(h).all_pass());
    Matrix<Rat> s2 = h.antipode * h.antipode;
    CHECK(s2 != Matrix<Rat>::identity(4));
    CHECK((s2 * s2) == Matrix<Rat>::identity(4));
    // S^2(x) = -x (frozen from composing the antipode matrix with itself)
    CHECK(s2.apply(basis_vec<Rat>(4, 2)) == vec_scale(Rat(-1), basis_vec<Rat>(4, 2)));
}

TEST_CASE("H4 with identity antipode fails the antipode family at x") {
    auto good = build_sweedler4<Rat>(FieldDesc::rationals());
    auto bad = make_hopf_algebra_unchecked<Rat>(4, good.field, good.labels, good.mult,
                                                good.unit, good.comult, good.counit,
                                                Matrix<Rat>::identity(4));
    auto report = verify_axioms(bad);
    CHECK_FALSE(report.all_pass());
    const auto& c = find_check(report, "antipode");
    CHECK_FALSE(c.pass);
    REQUIRE(c.witness.size() == 1);
    CHECK(c.witness[0] == 2);  // basis order 1, g, x, gx
    CHECK_FALSE(bad.verified);
    CHECK_THROWS_AS(bad.require_verified(), hc_error);
}

TEST_CASE("dual of QC2 is the function algebra and biduality is exact") {
    auto h = build_group_algebra<Rat>({2}, FieldDesc::rationals());
    auto hd = dual(h);
    CHECK(verify_axioms(hd).all_pass());
    // e_1 * e_1 = e_1 (pointwise product of indicator functions)
    CHECK(hd.mul(basis_vec<Rat>(2, 1), basis_vec<Rat>(2, 1)) == basis_vec<Rat>(2, 1));
    auto hdd = dual(hd);
    hdd.labels = h.labels;
    CHECK(hdd == h);
}

TEST_CASE("dual of GF(7)C3 is commutative and cocommutative") {
    auto h = build_group_algebra<Fp>({3}, FieldDesc::prime_field(7));
    auto hd = dual(h);
    CHECK(verify_axioms(hd).all_pass());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                CHECK(hd.mult.at(i, j, k) == hd.mult.at(j, i, k));
                CHECK(hd.comult.at(i, j, k) == hd.comult.at(i, k, j));
            }
}

TEST_CASE("dual of H4 passes all axioms and has dim 4") {
    auto hd = dual(build_sweedler4<Rat>(FieldDesc::rationals()));
    CHECK(hd.dim == 4);
    CHECK(verify_axioms(hd).all_pass());
}

TEST_CASE("twists: involution and composition laws") {
    auto h4 = build_sweedler4<Rat>(FieldDesc::rationals());
    auto once = twist(h4, Twist::op);
    auto twice = twist(once, Twist::op);
    twice.labels = h4.labels;
    CHECK(twice == h4);
    auto cc = twist(twist(h4, Twist::cop), Twist::cop);
    cc.labels = h4.labels;
    CHECK(cc == h4);
    auto opcop = twist(h4, Twist::opcop);
    auto composed = twist(twist(h4, Twist::op), Twist::cop);
    CHECK(opcop == composed);
    CHECK(opcop.antipode == h4.antipode);
    // antipode of H^cop is S^{-1}
    auto cop = twist(h4, Twist::cop);
    CHECK((cop.antipode * h4.antipode) == Matrix<Rat>::identity(4));
}

TEST_CASE("twist of a commutative cocommutative algebra changes nothing") {
    auto h = build_group_algebra<Rat>({2}, FieldDesc::rationals());
    CHECK(twist(h, Twist::op) == h);
    CHECK(twist(h, Twist::cop) == h);
    CHECK(twist(h, Twist::opcop) == h);
}

TEST_CASE("antipode is an algebra and coalgebra antimorphism on the catalog") {
    check_antimorphism(build_group_algebra<Rat>({2}, FieldDesc::rationals()));
    check_antimorphism(build_group_algebra<Rat>({4}, FieldDesc::rationals()));
    check_antimorphism(build_group_algebra<Fp>({3}, FieldDesc::prime_field(7)));
    check_antimorphism(build_sweedler4<Rat>(FieldDesc::rationals()));
    check_antimorphism(build_taft<Fp>(3, 2, FieldDesc::prime_field(7)));
    check_antimorphism(dual(build_sweedler4<Rat>(FieldDesc::rationals())));
}

TEST_CASE("Taft(3, 2, GF(7)): dim 9, S bijective, S^2 != id") {
    auto t = build_taft<Fp>(3, 2, FieldDesc::prime_field(7));
    CHECK(t.dim == 9);
    CHECK(verify_axioms(t).all_pass());
    Matrix<Fp> s2 = t.antipode * t.antipode;
    CHECK(s2 != Matrix<Fp>::identity(9));
    CHECK(rank(t.antipode) == 9);
}

TEST_CASE("Taft(2, -1) over Q is Sweedler H4 table-for-table") {
    auto t = build_taft<Rat>(2, -1, FieldDesc::rationals());
    auto s = build_sweedler4<Rat>(FieldDesc::rationals());
    CHECK(t == s);
    CHECK(t.labels == std::vector<std::string>{"1", "g", "x", "gx"});
}

TEST_CASE("dual group algebra builder matches dual() table-for-table") {
    AlgebraSpec spec;
    spec.family = AlgebraSpec::Family::dual_group_algebra;
    spec.cyclic_orders = {4};
    spec.field = FieldDesc::rationals();
    auto built = build<Rat>(spec);
    auto direct = dual(build_group_algebra<Rat>({4}, FieldDesc::rationals()));
    CHECK(built == direct);
}

TEST_CASE("catalog rejects bad parameters") {
    CHECK_THROWS_AS(build_taft<Rat>(3, 1, FieldDesc::rationals()), hc_error);
    // over Q there is no primitive 3rd root of unity at all
    CHECK_THROWS_AS(build_taft<Rat>(3, -1, FieldDesc::rationals()), hc_error);
    // 6 = -1 mod 7 has order 2, not 3
    CHECK_THROWS_AS(build_taft<Fp>(3, 6, FieldDesc::prime_field(7)), hc_error);
    CHECK_THROWS_AS(build_group_algebra<Rat>({0}, FieldDesc::rationals()), hc_error);
    CHECK_THROWS_AS(build_group_algebra<Rat>({}, FieldDesc::rationals()), hc_error);
}

TEST_CASE("json: save then load is the identity on QC2") {
    AnyHopf h = build_group_algebra<Rat>({2}, FieldDesc::rationals());
    AnyHopf back = load_algebra(save_algebra(h));
    CHECK(std::get<HopfAlgebra<Rat>>(back) == std::get<HopfAlgebra<Rat>>(h));
    CHECK(std::get<HopfAlgebra<Rat>>(back).verified);
}

TEST_CASE("json: rationals with denominators survive the round trip") {
    auto h = build_sweedler4<Rat>(FieldDesc::rationals());
    // scale nothing; instead check a hand-made scalar path
    CHECK(Rat::parse("2/4") == Rat(1, 2));
    AnyHopf back = load_algebra(save_algebra(AnyHopf(h)));
    CHECK(std::get<HopfAlgebra<Rat>>(back) == h);
}

TEST_CASE("json: corrupted antipode is rejected by the axiom checker") {
    AnyHopf h = build_group_algebra<Rat>({2}, FieldDesc::rationals());
    auto j = hopf_to_json(h);
    j["antipode"] = {{1, 1}, {1, 1}};
    CHECK_THROWS_WITH_AS(hopf_from_json(j), doctest::Contains("antipode"), hc_error);
}

TEST_CASE("json: Taft(3,2,GF(7)) serializes with dim 9 and field tag p=7") {
    AnyHopf t = build_taft<Fp>(3, 2, FieldDesc::prime_field(7));
    auto j = hopf_to_json(t);
    CHECK(j["dim"] == 9);
    CHECK(j["field"] == "p=7");
    AnyHopf back = load_algebra(j.dump());
    CHECK(std::get<HopfAlgebra<Fp>>(back) == std::get<HopfAlgebra<Fp>>(t));
}

TEST_CASE("json: malformed input and unknown fields raise errors") {
    CHECK_THROWS(load_algebra("{ not json"));
    AnyHopf h = build_group_algebra<Rat>({2}, FieldDesc::rationals());
    auto j = hopf_to_json(h);
    j["field"] = "R";
    CHECK_THROWS_AS(hopf_from_json(j), hc_error);
    j["field"] = "p=6";
    CHECK_THROWS_AS(hopf_from_json(j), hc_error);
}

TEST_CASE("verify_axioms rejects dimension-inconsistent tables") {
    auto h = build_group_algebra<Rat>({2}, FieldDesc::rationals());
    h.unit.push_back(Rat(0));
    CHECK_THROWS_AS(verify_axioms(h), hc_error);
}
