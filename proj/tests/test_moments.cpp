#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "scpkit/moments.hpp"
#include "scpkit/scp2d.hpp"

using namespace scpkit;

namespace {

// Quartic regression tables used throughout: a base example and its image
// under the (h, k) = (3, 4) translation.
MomentSeq2 base_table() {
    return MomentSeq2(4, {Rat(1), Rat(1), Rat(1), Rat(2), Rat(0), Rat(3), Rat(4), Rat(0), Rat(0), Rat(9),
                          Rat(9), Rat(0), Rat(0), Rat(0), Rat(28)});
}

MomentSeq2 translated_table() {
    return MomentSeq2(4, {Rat(1), Rat(4), Rat(5), Rat(17), Rat(19), Rat(27), Rat(76), Rat(77), Rat(97),
                          Rat(157), Rat(354), Rat(331), Rat(371), Rat(535), Rat(972)});
}

MomentSeq2 random_measure_table(std::mt19937& rng, int degree) {
    // Moments of a random 3-atom measure with rational atoms: a genuine
    // moment sequence, so ranks and verdicts are meaningful.
    std::uniform_int_distribution<int> coord(0, 4), den(1, 3), wnum(1, 5);
    AtomicMeasure2 mu;
    Rat total;
    std::vector<Rat> raw;
    for (int i = 0; i < 3; ++i) {
        Rat x(coord(rng), den(rng)), y(coord(rng), den(rng));
        bool dup = false;
        for (const auto& [ax, ay] : mu.atoms)
            if (ax == QuadExt(x) && ay == QuadExt(y)) dup = true;
        if (dup) {
            --i;
            continue;
        }
        mu.atoms.emplace_back(QuadExt(x), QuadExt(y));
        raw.emplace_back(wnum(rng));
        total += raw.back();
    }
    for (const Rat& w : raw) mu.densities.emplace_back(QuadExt(w / total));
    return moments_of_measure(mu, degree);
}

} // namespace

TEST_CASE("monomial basis order") {
    const auto b0 = monomial_basis(0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0] == Monomial{0, 0});

    const auto b1 = monomial_basis(1);
    REQUIRE(b1.size() == 3);
    CHECK(b1[1] == Monomial{0, 1});  // X
    CHECK(b1[2] == Monomial{1, 0});  // Y

    const auto b2 = monomial_basis(2);
    REQUIRE(b2.size() == 6);
    CHECK(b2[3] == Monomial{0, 2});  // X²
    CHECK(b2[4] == Monomial{1, 1});  // YX
    CHECK(b2[5] == Monomial{2, 0});  // Y²
    CHECK(b2[4].str() == "YX");

    for (int n = 3; n <= 6; ++n)
        CHECK(monomial_basis(n).size() == static_cast<size_t>((n + 1) * (n + 2) / 2));
}

TEST_CASE("moment matrix from quadratic data") {
    const QuadraticData d(1, 1, 2, 2, 1);
    CHECK(d.m1().mat == Mat{{1, 1, 1}, {1, 2, 1}, {1, 1, 2}});

    CHECK(moment_matrix(translated_table(), 1).mat == Mat{{1, 4, 5}, {4, 17, 19}, {5, 19, 27}});

    // All moments equal: point mass at (1, 1), rank one.
    MomentSeq2 ones = MomentSeq2::zeros(2);
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; i + j <= 2; ++j) ones.set(i, j, Rat(1));
    const MomentMat m = moment_matrix(ones, 1);
    CHECK(rank(m.mat) == 1);

    CHECK_THROWS_AS(moment_matrix(d.moments(), 2), DegreeError);
}

TEST_CASE("localizing matrices on the embedded quartic extension") {
    // (a,b,c,d,e) = (1,1,2,2,1) with (p,q,r,s) = (2,2,1/2,5/2) embedded.
    MomentSeq2 seq = MomentSeq2::zeros(3);
    seq.set(0, 1, Rat(1));
    seq.set(1, 0, Rat(1));
    seq.set(0, 2, Rat(2));
    seq.set(1, 1, Rat(1));
    seq.set(2, 0, Rat(2));
    seq.set(0, 3, Rat(4));   // acp
    seq.set(1, 2, Rat(2));   // beq
    seq.set(2, 1, Rat(1));   // bdr
    seq.set(3, 0, Rat(5));   // bds

    CHECK(localizing_matrix(seq, 1, Axis::x).mat == Mat{{1, 2, 1}, {2, 4, 2}, {1, 2, 1}});
    const MomentMat my = localizing_matrix(seq, 1, Axis::y);
    CHECK(my.mat == Mat{{1, 1, 2}, {1, 2, 1}, {2, 1, 5}});
    CHECK(det(my.mat) == Rat(0));  // s was chosen as the root of det M_y(s) = 0

    // u-shift consistency at n = 0.
    CHECK(localizing_matrix(seq, 0, Axis::x).mat == Mat{{1}});
    CHECK(localizing_matrix(seq, 0, Axis::y).mat == Mat{{1}});

    CHECK_THROWS_AS(localizing_matrix(seq, 2, Axis::x), DegreeError);
}

TEST_CASE("hyponormality matrix windows") {
    const MomentSeq2 seq = translated_table();
    CHECK(hyponormality_matrix(seq, {0, 0}, 1).mat == moment_matrix(seq, 1).mat);
    CHECK(hyponormality_matrix(seq, {0, 0}, 2).mat == moment_matrix(seq, 2).mat);
    CHECK(hyponormality_matrix(seq, {0, 1}, 1).mat == localizing_matrix(seq, 1, Axis::x).mat);
    CHECK(hyponormality_matrix(seq, {1, 0}, 1).mat == localizing_matrix(seq, 1, Axis::y).mat);
    CHECK_THROWS_AS(hyponormality_matrix(seq, {2, 1}, 1), DegreeError);
}

TEST_CASE("riesz functional") {
    const MomentSeq2 seq = base_table();
    CHECK(riesz_eval(seq, Poly2(Rat(1))) == Rat(1));
    // (y+4)²(x+3) on the base data evaluates to 97.
    const Poly2 p = Poly2::y_plus(Rat(4)).pow(2) * Poly2::x_plus(Rat(3));
    CHECK(riesz_eval(seq, p) == Rat(97));
    // Linearity: x + y ↦ γ₀₁ + γ₁₀.
    const Poly2 xy = Poly2::monomial({0, 1}) + Poly2::monomial({1, 0});
    CHECK(riesz_eval(seq, xy) == seq.at(0, 1) + seq.at(1, 0));
    CHECK_THROWS_AS(riesz_eval(seq, Poly2::monomial({3, 2})), DegreeError);
}

TEST_CASE("translation reproduces the printed table") {
    CHECK(translate(base_table(), Rat(3), Rat(4)) == translated_table());
    CHECK(translate(translate(base_table(), Rat(3), Rat(4)), Rat(-3), Rat(-4)) == base_table());
    CHECK(translate(base_table(), Rat(0), Rat(0)) == base_table());
}

TEST_CASE("translation is a group action and preserves rank") {
    std::mt19937 rng(2024);
    for (int t = 0; t < 12; ++t) {
        const MomentSeq2 seq = random_measure_table(rng, 4);
        std::uniform_int_distribution<int> small(0, 3);
        const Rat h1(small(rng)), k1(small(rng)), h2(small(rng)), k2(small(rng));
        CHECK(translate(translate(seq, h1, k1), h2, k2) == translate(seq, h1 + h2, k1 + k2));
        for (int n = 1; n <= 2; ++n)
            CHECK(rank(moment_matrix(translate(seq, h1, k1), n).mat) == rank(moment_matrix(seq, n).mat));
    }
}

TEST_CASE("column relations") {
    const MomentMat m2 = moment_matrix(translated_table(), 2);
    const auto rels = column_relations(m2);
    REQUIRE(rels.size() == 1);
    // YX − 4X − 3Y + 12, monic at the basis-latest monomial YX.
    CHECK(rels[0].coeff({1, 1}) == Rat(1));
    CHECK(rels[0].coeff({0, 1}) == Rat(-4));
    CHECK(rels[0].coeff({1, 0}) == Rat(-3));
    CHECK(rels[0].coeff({0, 0}) == Rat(12));
    CHECK(rels[0].str() == "YX - 4·X - 3·Y + 12");

    // Relation vectors annihilate the matrix.
    for (const auto& rel : rels) {
        Mat v(m2.basis.size(), 1);
        for (size_t i = 0; i < m2.basis.size(); ++i) v(i, 0) = rel.coeff(m2.basis[i]);
        CHECK(m2.mat * v == Mat(m2.basis.size(), 1));
    }

    // Invertible M(1) has none.
    CHECK(column_relations(moment_matrix(translated_table(), 1)).empty());

    CHECK_THROWS_AS(column_relations(localizing_matrix(translated_table(), 1, Axis::x)), ShapeError);
}

TEST_CASE("flat extension relations of the solved quartic instance") {
    const CompletionResult res = quadratic_scp(QuadraticData(1, 1, 2, 2, 1));
    const auto rels = column_relations(res.m2);
    REQUIRE(rels.size() == 3);
    // X² − 2X, YX − X, Y² + X − 3Y in basis order of their leading monomials.
    CHECK(rels[0].coeff({0, 2}) == Rat(1));
    CHECK(rels[0].coeff({0, 1}) == Rat(-2));
    CHECK(rels[1].coeff({1, 1}) == Rat(1));
    CHECK(rels[1].coeff({0, 1}) == Rat(-1));
    CHECK(rels[2].coeff({2, 0}) == Rat(1));
    CHECK(rels[2].coeff({0, 1}) == Rat(1));
    CHECK(rels[2].coeff({1, 0}) == Rat(-3));
    // The relations vanish on the atoms (0,0), (0,3), (2,1).
    for (const auto& rel : rels)
        for (const auto& [x, y] : std::vector<std::pair<Rat, Rat>>{{0, 0}, {0, 3}, {2, 1}}) {
            Rat val;
            for (const auto& [mono, coef] : rel.terms)
                val += coef * y.pow(static_cast<unsigned>(mono.ydeg)) * x.pow(static_cast<unsigned>(mono.xdeg));
            CHECK(val == Rat(0));
        }
}

TEST_CASE("moment structure check") {
    CHECK(is_moment_matrix(moment_matrix(translated_table(), 2)));
    CHECK(is_moment_matrix(moment_matrix(base_table(), 2)));

    MomentMat broken = moment_matrix(translated_table(), 2);
    broken.mat(3, 5) += Rat(1);  // ⟨X², Y²⟩ no longer matches ⟨YX, YX⟩
    CHECK_FALSE(is_moment_matrix(broken));
}

TEST_CASE("moment matrix outputs are symmetric and structured") {
    std::mt19937 rng(555);
    for (int t = 0; t < 8; ++t) {
        const MomentSeq2 seq = random_measure_table(rng, 4);
        const MomentMat m = moment_matrix(seq, 2);
        CHECK(m.mat.is_symmetric());
        CHECK(is_moment_matrix(m));
        CHECK(is_psd(m.mat));  // genuine measures only
    }
}
