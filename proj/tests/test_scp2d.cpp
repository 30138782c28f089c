#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "scpkit/scp2d.hpp"

using namespace scpkit;

namespace {

MomentSeq2 translated_table() {
    return MomentSeq2(4, {Rat(1), Rat(4), Rat(5), Rat(17), Rat(19), Rat(27), Rat(76), Rat(77), Rat(97),
                          Rat(157), Rat(354), Rat(331), Rat(371), Rat(535), Rat(972)});
}

MomentSeq2 base_table() {
    return MomentSeq2(4, {Rat(1), Rat(1), Rat(1), Rat(2), Rat(0), Rat(3), Rat(4), Rat(0), Rat(0), Rat(9),
                          Rat(9), Rat(0), Rat(0), Rat(0), Rat(28)});
}

// Degree-2 weight family generated by a two-atom measure, as exact quotients.
WeightFamily2 family_from_atoms(const std::vector<std::pair<Rat, Rat>>& pts,
                                const std::vector<Rat>& dens) {
    AtomicMeasure2 mu;
    for (const auto& [x, y] : pts) mu.atoms.emplace_back(QuadExt(x), QuadExt(y));
    for (const Rat& d : dens) mu.densities.emplace_back(QuadExt(d));
    return weights_from_measure(mu, 2);
}

QuadExt qx(int n) { return QuadExt(Rat(n)); }

bool has_atom(const AtomicMeasure2& mu, const QuadExt& x, const QuadExt& y, const QuadExt& density) {
    for (size_t i = 0; i < mu.atoms.size(); ++i)
        if (mu.atoms[i].first == x && mu.atoms[i].second == y) return mu.densities[i] == density;
    return false;
}

Rat random_pos_rat(std::mt19937& rng, int bound) {
    std::uniform_int_distribution<int> num(1, bound), den(1, bound);
    return Rat(num(rng), den(rng));
}

} // namespace

TEST_CASE("quadratic data plumbing") {
    const QuadraticData d(1, 2, 2, Rat(5, 2), Rat(3, 2));
    CHECK(d.f() == Rat(3));
    const QuadraticData s = d.swapped();
    CHECK(s.a == Rat(2));
    CHECK(s.c == Rat(5, 2));
    CHECK(s.e == Rat(3));
    CHECK(s.f() == Rat(3, 2));
    CHECK_THROWS_AS(QuadraticData(0, 1, 1, 1, 1), ValidationError);
}

TEST_CASE("build_flat_m2 on the rank-3 instance") {
    const QuadraticData d(1, 1, 2, 2, 1);
    const FlatM2 flat = build_flat_m2(d);
    CHECK(flat.p == Rat(2));
    CHECK(flat.q == Rat(2));
    CHECK(flat.r == Rat(1, 2));
    CHECK(flat.s == Rat(5, 2));
    CHECK(rank(flat.m2.mat) == 3);
    CHECK(is_psd(flat.m2.mat));
    CHECK(is_moment_matrix(flat.m2));
    // s − d = e(ad−be)²/(a²d(c−e)).
    CHECK(flat.s - d.d == d.e * (d.a * d.d - d.b * d.e).pow(2) / (d.a * d.a * d.d * (d.c - d.e)));
}

TEST_CASE("build_flat_m2 case e = c") {
    const QuadraticData d(1, 1, 2, 3, 2);
    const FlatM2 flat = build_flat_m2(d);
    CHECK(flat.p == Rat(2));
    CHECK(flat.q == Rat(2));
    CHECK(flat.r == Rat(2));  // r := c
    CHECK(flat.s == Rat(3));  // s := d
    CHECK(rank(flat.m2.mat) == rank(d.m1().mat));
    CHECK(is_moment_matrix(flat.m2));
}

TEST_CASE("build_flat_m2 rejects out-of-scope shapes") {
    CHECK_THROWS_AS(build_flat_m2(QuadraticData(1, 1, 1, 1, 1)), ShapeError);   // a = c upstream
    CHECK_THROWS_AS(build_flat_m2(QuadraticData(1, 1, 2, 5, 3)), ShapeError);   // c < e: swap upstream
}

TEST_CASE("measure_from_flat per case") {
    // Rank 3, e < c.
    const QuadraticData d(1, 1, 2, 2, 1);
    const AtomicMeasure2 mu = measure_from_flat(d, build_flat_m2(d).m2);
    REQUIRE(mu.size() == 3);
    CHECK(has_atom(mu, qx(0), qx(0), QuadExt(Rat(1, 3))));
    CHECK(has_atom(mu, qx(0), qx(3), QuadExt(Rat(1, 6))));
    CHECK(has_atom(mu, qx(2), qx(1), QuadExt(Rat(1, 2))));

    // Rank 2.
    const QuadraticData d2(1, 2, 2, Rat(5, 2), Rat(3, 2));
    const AtomicMeasure2 mu2 = measure_from_flat(d2, build_flat_m2(d2).m2);
    REQUIRE(mu2.size() == 2);
    CHECK(has_atom(mu2, qx(0), qx(1), QuadExt(Rat(1, 2))));
    CHECK(has_atom(mu2, qx(2), qx(3), QuadExt(Rat(1, 2))));

    // Rank 1: single atom (a, b).
    AtomicMeasure2 pm;
    pm.atoms = {{qx(2), qx(3)}};
    pm.densities = {QuadExt(Rat(1))};
    const MomentMat flat1 = moment_matrix(moments_of_measure(pm, 4), 2);
    REQUIRE(rank(flat1.mat) == 1);
    const AtomicMeasure2 mu1 = measure_from_flat(QuadraticData(2, 3, 2, 3, 2), flat1);
    REQUIRE(mu1.size() == 1);
    CHECK(has_atom(mu1, qx(2), qx(3), QuadExt(Rat(1))));
}

TEST_CASE("quadratic_scp rank-3 flagship instance") {
    const CompletionResult res = quadratic_scp(QuadraticData(1, 1, 2, 2, 1));
    CHECK(res.case_tag == CompletionCase::rank3_e_lt_c);
    CHECK_FALSE(res.swapped);
    CHECK(case_name(res.case_tag, res.swapped) == "rank3_e_lt_c");
    CHECK(res.rank_m1 == 3);
    CHECK(res.p == Rat(2));
    CHECK(res.q == Rat(2));
    CHECK(res.r == Rat(1, 2));
    CHECK(res.s == Rat(5, 2));
    REQUIRE(res.z.has_value());
    CHECK(*res.z == Rat(3));
    REQUIRE(res.measure.size() == 3);
    CHECK(has_atom(res.measure, qx(0), qx(0), QuadExt(Rat(1, 3))));
    CHECK(has_atom(res.measure, qx(0), qx(3), QuadExt(Rat(1, 6))));
    CHECK(has_atom(res.measure, qx(2), qx(1), QuadExt(Rat(1, 2))));
    CHECK(verify_completion(*res.completion, res.measure));
    CHECK(res.completion->m() == 6);
}

TEST_CASE("quadratic_scp rank-1 and a = c branches") {
    const CompletionResult r1 = quadratic_scp(QuadraticData(1, 1, 1, 1, 1));
    CHECK(r1.case_tag == CompletionCase::rank1);
    CHECK(r1.rank_m1 == 1);
    REQUIRE(r1.measure.size() == 1);
    CHECK(has_atom(r1.measure, qx(1), qx(1), QuadExt(Rat(1))));

    // a = c with b < d: (1 − b/d)δ_{(a,0)} + (b/d)δ_{(a,d)}.
    const CompletionResult r2 = quadratic_scp(QuadraticData(2, 1, 2, 3, 2));
    CHECK(r2.case_tag == CompletionCase::a_eq_c);
    CHECK(r2.rank_m1 == 2);
    REQUIRE(r2.measure.size() == 2);
    CHECK(has_atom(r2.measure, qx(2), qx(0), QuadExt(Rat(2, 3))));
    CHECK(has_atom(r2.measure, qx(2), qx(3), QuadExt(Rat(1, 3))));

    // a = c with b = d forces e = a and f = b, so the data is rank one.
    const CompletionResult r3 = quadratic_scp(QuadraticData(2, 3, 2, 3, 2));
    CHECK(r3.case_tag == CompletionCase::rank1);
    REQUIRE(r3.measure.size() == 1);
    CHECK(has_atom(r3.measure, qx(2), qx(3), QuadExt(Rat(1))));
}

TEST_CASE("quadratic_scp rank-2 instance") {
    const CompletionResult res = quadratic_scp(QuadraticData(1, 2, 2, Rat(5, 2), Rat(3, 2)));
    CHECK(res.case_tag == CompletionCase::rank2);
    CHECK(res.rank_m1 == 2);
    REQUIRE(res.y0.has_value());
    CHECK(*res.y0 == Rat(1));
    REQUIRE(res.yc.has_value());
    CHECK(*res.yc == Rat(3));
    REQUIRE(res.measure.size() == 2);
    CHECK(has_atom(res.measure, qx(0), qx(1), QuadExt(Rat(1, 2))));
    CHECK(has_atom(res.measure, qx(2), qx(3), QuadExt(Rat(1, 2))));
}

TEST_CASE("quadratic_scp refuses non-PSD data") {
    CHECK_THROWS_AS(quadratic_scp(QuadraticData(1, 1, Rat(1, 2), 1, 1)), NoCompletionError);
}

TEST_CASE("quadratic_scp swaps when c < e") {
    // Swapped orientation of the rank-2 instance: (2,1,5/2,2,3) has c < e.
    const QuadraticData sw = QuadraticData(1, 2, 2, Rat(5, 2), Rat(3, 2)).swapped();
    CHECK(sw.c < sw.e);
    const CompletionResult res = quadratic_scp(sw);
    CHECK(res.swapped);
    CHECK(res.case_tag == CompletionCase::rank2);
    CHECK(case_name(res.case_tag, res.swapped) == "rank2_swapped");
    REQUIRE(res.measure.size() == 2);
    // Mirror image of the direct solve of the unswapped data.
    CHECK(has_atom(res.measure, qx(1), qx(0), QuadExt(Rat(1, 2))));
    CHECK(has_atom(res.measure, qx(3), qx(2), QuadExt(Rat(1, 2))));
    REQUIRE(res.y0.has_value());
    CHECK(*res.y0 == Rat(1));
}

TEST_CASE("the swap path mirrors the direct solve of the swapped data") {
    std::mt19937 rng(616);
    int tested = 0;
    while (tested < 8) {
        const Rat a = random_pos_rat(rng, 4), b = random_pos_rat(rng, 4);
        const Rat c = random_pos_rat(rng, 4), e = random_pos_rat(rng, 4);
        const Rat d_ = random_pos_rat(rng, 4);
        try {
            const QuadraticData d(a, b, c, d_, e);
            if (!(d.c < d.e)) continue;  // exercise the swap branch
            if (!is_psd(d.m1().mat)) continue;
            const CompletionResult via_swap = quadratic_scp(d);
            const CompletionResult inner = quadratic_scp(d.swapped());
            REQUIRE(via_swap.swapped);
            REQUIRE(!inner.swapped);
            REQUIRE(via_swap.measure.size() == inner.measure.size());
            for (size_t i = 0; i < inner.measure.size(); ++i)
                CHECK(has_atom(via_swap.measure, inner.measure.atoms[i].second,
                               inner.measure.atoms[i].first, inner.measure.densities[i]));
            ++tested;
        } catch (const NoCompletionError&) {
            continue;
        }
    }
}

TEST_CASE("both orientations complete the same data when both are in scope") {
    // The completion itself is not unique: the canonical choices pin
    // α̂₂₀² = c in one orientation and β̂₀₂² = d in the other. Both results
    // must nevertheless interpolate the same data exactly.
    const QuadraticData d(2, Rat(4, 3), 3, Rat(3, 2), Rat(3, 2));
    REQUIRE(d.c >= d.e);
    REQUIRE(d.d >= d.f());
    const CompletionResult direct = quadratic_scp(d);
    const CompletionResult mirrored = quadratic_scp(d.swapped());
    const AtomicMeasure2 back = mirrored.measure.swapped();
    CHECK(moments_of_measure(direct.measure, 2) == d.moments());
    CHECK(moments_of_measure(back, 2) == d.moments());
    CHECK(verify_completion(weights_from_measure(back, 1), back));
    // And indeed the two canonical completions differ here.
    CHECK(has_atom(direct.measure, qx(0), qx(2), QuadExt(Rat(1, 3))));
    CHECK(has_atom(direct.measure, qx(3), qx(1), QuadExt(Rat(2, 3))));
    CHECK(has_atom(back, qx(6), qx(0), QuadExt(Rat(1, 9))));
    CHECK(has_atom(back, QuadExt(Rat(3, 2)), QuadExt(Rat(3, 2)), QuadExt(Rat(8, 9))));
}

TEST_CASE("det M(1) > 0 implies cd > ef on PSD instances") {
    std::mt19937 rng(272);
    int seen = 0;
    while (seen < 25) {
        const QuadraticData d(random_pos_rat(rng, 5), random_pos_rat(rng, 5), random_pos_rat(rng, 5),
                              random_pos_rat(rng, 5), random_pos_rat(rng, 5));
        if (!is_psd(d.m1().mat) || det(d.m1().mat).sign() <= 0) continue;
        CHECK(d.c * d.d > d.e * d.f());
        ++seen;
    }
}

TEST_CASE("completion is 1-hyponormal on a window") {
    for (const QuadraticData& d : {QuadraticData(1, 1, 2, 2, 1), QuadraticData(1, 2, 2, Rat(5, 2), Rat(3, 2)),
                                   QuadraticData(2, 1, 3, 2, Rat(3, 2))}) {
        const int depth = 6;
        const CompletionResult res = quadratic_scp(d, depth);
        const MomentSeq2 seq = moments_of_measure(res.measure, depth);
        for (int us = 0; us <= depth - 2; ++us)
            for (int uy = 0; uy <= us; ++uy)
                CHECK(is_psd(hyponormality_matrix(seq, {uy, us - uy}, 1).mat));
    }
}

TEST_CASE("property suite: random quadratic data") {
    std::mt19937 rng(90210);
    int psd_count = 0, rejected = 0;
    const int total = 120;
    for (int t = 0; t < total; ++t) {
        QuadraticData d(random_pos_rat(rng, 6), random_pos_rat(rng, 6), random_pos_rat(rng, 6),
                        random_pos_rat(rng, 6), random_pos_rat(rng, 6));
        if (!is_psd(d.m1().mat)) {
            CHECK_THROWS_AS(quadratic_scp(d), NoCompletionError);
            ++rejected;
            continue;
        }
        const CompletionResult res = quadratic_scp(d);
        ++psd_count;
        CHECK(res.measure.size() == static_cast<size_t>(res.rank_m1));
        CHECK(verify_completion(*res.completion, res.measure));
    }
    CHECK(psd_count + rejected == total);
    CHECK(psd_count > 10);
    CHECK(rejected > 10);
}

TEST_CASE("singular_m2 solves the two-atom family") {
    const WeightFamily2 w = family_from_atoms({{Rat(0), Rat(1)}, {Rat(2), Rat(3)}},
                                              {Rat(1, 2), Rat(1, 2)});
    CHECK(w.alpha_sq(2, 0) == Rat(2));
    CHECK(w.alpha_sq(1, 1) == Rat(2));
    CHECK(w.alpha_sq(0, 2) == Rat(9, 5));
    CHECK(w.beta_sq(0, 2) == Rat(14, 5));

    const CompletionResult res = singular_m2(w);
    CHECK(res.case_tag == CompletionCase::rank2);
    CHECK(res.rank_m1 == 2);
    REQUIRE(res.measure.size() == 2);
    CHECK(has_atom(res.measure, qx(0), qx(1), QuadExt(Rat(1, 2))));
    CHECK(has_atom(res.measure, qx(2), qx(3), QuadExt(Rat(1, 2))));
    CHECK(res.p == Rat(2));
    CHECK(res.s == Rat(14, 5));
    CHECK(verify_completion(w, res.measure));
}

TEST_CASE("singular_m2 detects a perturbed weight") {
    const WeightFamily2 w = family_from_atoms({{Rat(0), Rat(1)}, {Rat(2), Rat(3)}},
                                              {Rat(1, 2), Rat(1, 2)});
    std::map<ShiftIndex, Rat> a = w.alpha_table(), b = w.beta_table();
    a[{2, 0}] = Rat(3);  // push γ₀₃ off the range of M(1)
    CHECK_THROWS_AS(singular_m2(WeightFamily2(2, a, b)), NoCompletionError);
}

TEST_CASE("singular_m2 handles the a = e family via the linear-algebra path") {
    // Atoms (0,1), (2,1): the closed forms have zero denominators here.
    const WeightFamily2 w = family_from_atoms({{Rat(0), Rat(1)}, {Rat(2), Rat(1)}},
                                              {Rat(1, 2), Rat(1, 2)});
    CHECK(w.alpha_sq(0, 0) == w.alpha_sq(0, 1));  // a = e
    const CompletionResult res = singular_m2(w);
    REQUIRE(res.measure.size() == 2);
    CHECK(has_atom(res.measure, qx(0), qx(1), QuadExt(Rat(1, 2))));
    CHECK(has_atom(res.measure, qx(2), qx(1), QuadExt(Rat(1, 2))));
}

TEST_CASE("singular_m2 surd atoms from rational data") {
    // Atoms 2 ± √2 on the line y = x: rational weight family, surd support.
    const QuadExt r2 = QuadExt::sqrt(Rat(2));
    AtomicMeasure2 mu;
    mu.atoms = {{QuadExt(Rat(2)) - r2, QuadExt(Rat(2)) - r2},
                {QuadExt(Rat(2)) + r2, QuadExt(Rat(2)) + r2}};
    mu.densities = {QuadExt(Rat(1, 2)), QuadExt(Rat(1, 2))};
    const WeightFamily2 w = weights_from_measure(mu, 2);
    const CompletionResult res = singular_m2(w);
    REQUIRE(res.measure.size() == 2);
    CHECK(has_atom(res.measure, QuadExt(Rat(2)) - r2, QuadExt(Rat(2)) - r2,
                   QuadExt(Rat(1, 2))));
    CHECK(has_atom(res.measure, QuadExt(Rat(2)) + r2, QuadExt(Rat(2)) + r2,
                   QuadExt(Rat(1, 2))));
    CHECK(verify_completion(w, res.measure));
}

TEST_CASE("singular_m2 refuses support outside the quadrant") {
    // Atoms (-1,1), (4,1): every weight is positive and the forced flat
    // extension exists, but its support leaves the closed quadrant.
    AtomicMeasure2 mu;
    mu.atoms = {{QuadExt(Rat(-1)), QuadExt(Rat(1))}, {QuadExt(Rat(4)), QuadExt(Rat(1))}};
    mu.densities = {QuadExt(Rat(1, 5)), QuadExt(Rat(4, 5))};
    const MomentSeq2 seq = moments_of_measure(mu, 3);
    const auto gamma = [&](int k1, int k2) { return seq.at(k2, k1); };
    std::map<ShiftIndex, Rat> a, b;
    for (int k1 = 0; k1 <= 2; ++k1)
        for (int k2 = 0; k1 + k2 <= 2; ++k2) {
            a[{k1, k2}] = gamma(k1 + 1, k2) / gamma(k1, k2);
            b[{k1, k2}] = gamma(k1, k2 + 1) / gamma(k1, k2);
        }
    const WeightFamily2 w(2, std::move(a), std::move(b));
    CHECK(check_commutative(w));
    CHECK_THROWS_AS(singular_m2(w), NoCompletionError);
}

TEST_CASE("singular_m2 rejects invertible M(1)") {
    // The rank-3 quadratic completion yields an invertible M(1); feed its
    // degree-2 family back in.
    const CompletionResult res = quadratic_scp(QuadraticData(1, 1, 2, 2, 1));
    std::map<ShiftIndex, Rat> a, b;
    for (int k1 = 0; k1 <= 2; ++k1)
        for (int k2 = 0; k1 + k2 <= 2; ++k2) {
            a[{k1, k2}] = res.completion->alpha_sq(k1, k2);
            b[{k1, k2}] = res.completion->beta_sq(k1, k2);
        }
    CHECK_THROWS_AS(singular_m2(WeightFamily2(2, a, b)), NotSingularError);
}

TEST_CASE("singular_m2 swaps when X is a multiple of 1") {
    // Atoms (1,0), (1,2): x-coordinate constant, so X = a·1 and the roles of
    // the variables must be exchanged.
    const WeightFamily2 w = family_from_atoms({{Rat(1), Rat(0)}, {Rat(1), Rat(2)}},
                                              {Rat(1, 2), Rat(1, 2)});
    const CompletionResult res = singular_m2(w);
    CHECK(res.swapped);
    REQUIRE(res.measure.size() == 2);
    CHECK(has_atom(res.measure, qx(1), qx(0), QuadExt(Rat(1, 2))));
    CHECK(has_atom(res.measure, qx(1), qx(2), QuadExt(Rat(1, 2))));
}

TEST_CASE("obstruction check on the translated quartic data") {
    const ObstructionReport rep = flat_obstruction_check(translated_table());
    CHECK(rep.status == ObstructionStatus::obstructed);
    CHECK(rep.rank_m2 == 5);
    CHECK(rep.h == Rat(3));
    CHECK(rep.k == Rat(4));
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->first == Rat(7376));
    CHECK(rep.witness->second == Rat(7375));
    // Determined degree-5/6 moments.
    const auto& prop = rep.propagated;
    CHECK(prop.at({1, 4}) == AffineForm{Rat(1497), Rat(0), Rat(0)});
    CHECK(prop.at({2, 3}) == AffineForm{Rat(1513), Rat(0), Rat(0)});
    CHECK(prop.at({3, 2}) == AffineForm{Rat(1925), Rat(0), Rat(0)});
    CHECK(prop.at({4, 1}) == AffineForm{Rat(3172), Rat(0), Rat(0)});
    CHECK(prop.at({2, 4}) == AffineForm{Rat(6555), Rat(0), Rat(0)});
    CHECK(prop.at({3, 3}) == AffineForm{Rat(7375), Rat(0), Rat(0)});
    CHECK(prop.at({4, 2}) == AffineForm{Rat(10796), Rat(0), Rat(0)});
    CHECK(prop.at({1, 5}) == AffineForm{Rat(243), Rat(4), Rat(0)});
    CHECK(prop.at({5, 1}) == AffineForm{Rat(1024), Rat(0), Rat(3)});
    // Coefficients of the X³ combination.
    CHECK(rep.coefficients.at("A1") == AffineForm{Rat(-25513), Rat(15), Rat(0)});
    CHECK(rep.coefficients.at("AX") == AffineForm{Rat(13587), Rat(-8), Rat(0)});
    CHECK(rep.coefficients.at("AY") == AffineForm{Rat(1), Rat(0), Rat(0)});
    CHECK(rep.coefficients.at("AX2") == AffineForm{Rat(-1692), Rat(1), Rat(0)});
    CHECK(rep.coefficients.at("AY2") == AffineForm{Rat(0), Rat(0), Rat(0)});
    CHECK(rep.coefficients.at("AX2").str() == "-1692 + g05");
}

TEST_CASE("obstruction check on the untranslated data") {
    const ObstructionReport rep = flat_obstruction_check(base_table());
    CHECK(rep.status == ObstructionStatus::obstructed);
    CHECK(rep.rank_m2 == 5);
    CHECK(rep.h == Rat(0));
    CHECK(rep.k == Rat(0));
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->first != rep.witness->second);
}

TEST_CASE("obstruction verdict survives any degree-one translation") {
    for (const auto& [h, k] : std::vector<std::pair<Rat, Rat>>{{1, 1}, {2, 5}, {Rat(1, 2), Rat(3, 4)}}) {
        const ObstructionReport rep = flat_obstruction_check(translate(base_table(), h, k));
        CHECK(rep.status == ObstructionStatus::obstructed);
        CHECK(rep.rank_m2 == 5);
        CHECK(rep.h == h);
        CHECK(rep.k == k);
    }
}

TEST_CASE("obstruction check accepts a genuinely flat-extendable table") {
    // Five atoms on the union of x = 1 and y = 2: the unique quadratic
    // relation is (X-1)(Y-2), the compression is invertible, and the measure
    // itself provides a flat M(3), so no row can be obstructed.
    AtomicMeasure2 mu;
    for (const auto& [x, y] : std::vector<std::pair<Rat, Rat>>{{1, 0}, {1, 1}, {1, 5}, {3, 2}, {4, 2}})
        mu.atoms.emplace_back(QuadExt(x), QuadExt(y));
    mu.densities.assign(5, QuadExt(Rat(1, 5)));
    const ObstructionReport rep = flat_obstruction_check(moments_of_measure(mu, 4));
    CHECK(rep.status == ObstructionStatus::flat_feasible);
    CHECK(rep.rank_m2 == 5);
    CHECK(rep.h == Rat(1));
    CHECK(rep.k == Rat(2));
    CHECK_FALSE(rep.witness.has_value());
    // The determined moments agree with the measure's own.
    const MomentSeq2 six = moments_of_measure(mu, 6);
    for (const auto& [idx, form] : rep.propagated)
        if (form.is_constant()) CHECK(form.c0 == six.at(idx.first, idx.second));
}

TEST_CASE("obstruction check is unsupported off its precondition") {
    // Flat M(2) from the quadratic solver: three relations.
    const CompletionResult res = quadratic_scp(QuadraticData(1, 1, 2, 2, 1));
    const MomentSeq2 seq = moments_of_measure(res.measure, 4);
    const ObstructionReport rep = flat_obstruction_check(seq);
    CHECK(rep.status == ObstructionStatus::unsupported);

    // Degree bound too small.
    CHECK(flat_obstruction_check(MomentSeq2::zeros(2)).status == ObstructionStatus::unsupported);
}

TEST_CASE("verify_completion rejects mismatches") {
    const QuadraticData d(1, 1, 2, 2, 1);
    const CompletionResult res = quadratic_scp(d);
    CHECK(verify_completion(*res.completion, res.measure));
    // δ_{(0,1)} cannot match data with a > 0.
    AtomicMeasure2 wrong;
    wrong.atoms = {{QuadExt(Rat(0)), QuadExt(Rat(1))}};
    wrong.densities = {QuadExt(Rat(1))};
    CHECK_FALSE(verify_completion(*res.completion, wrong));
    // An atom outside the closed quadrant fails regardless of moments.
    AtomicMeasure2 neg;
    neg.atoms = {{QuadExt(Rat(-1)), QuadExt(Rat(1))}, {QuadExt(Rat(1)), QuadExt(Rat(1))}};
    neg.densities = {QuadExt(Rat(1, 2)), QuadExt(Rat(1, 2))};
    CHECK_FALSE(verify_completion(*res.completion, neg));
}
