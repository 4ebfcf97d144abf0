#include <doctest.h>

#include <set>

#include "cdesc/blowup.hpp"
#include "cdesc/error.hpp"
#include "cdesc/generators.hpp"
#include "cdesc/gysin.hpp"
#include "cdesc/snc.hpp"
#include "oracle.hpp"

using namespace cdesc;

namespace {

AtomRegistry registry() {
    AtomRegistry r;
    for (int n = 0; n <= 3; ++n) r.add(gen::projective_space(n));
    r.add({"P1xP1", 2, {{0, 0, 0, 1}, {2, 1, 1, 2}, {4, 2, 2, 1}}});
    r.add({"Bl_pt_P2", 2, {{0, 0, 0, 1}, {2, 1, 1, 2}, {4, 2, 2, 1}}});
    r.add({"Bl_line_P3", 3, {{0, 0, 0, 1}, {2, 1, 1, 2}, {4, 2, 2, 2}, {6, 3, 3, 1}}});
    return r;
}

RelationSet relations(const AtomRegistry& r) {
    std::vector<Relation> rules;
    for (const char* t : {"[P1] -> 1 + L", "[P2] -> 1 + L + L^2", "[P3] -> 1 + L + L^2 + L^3", "[P1xP1] -> 1 + 2L + L^2",
                          "[Bl_pt_P2] -> 1 + 2L + L^2", "[Bl_line_P3] -> 1 + 2L + 2L^2 + L^3"})
        rules.push_back(parse_relation(t));
    return RelationSet(r, rules);
}

const std::map<std::string, oracle::LPoly> subst = {
    {"pt", {{0, 1}}}, {"P1", {{0, 1}, {1, 1}}}, {"P2", {{0, 1}, {1, 1}, {2, 1}}}, {"P1xP1", {{0, 1}, {1, 2}, {2, 1}}}};

SNCPair p2_two_lines(const AtomRegistry& r) { return SNCPair(r, "P2", {"l1", "l2"}, {{{1}, "P1"}, {{2}, "P1"}, {{1, 2}, "pt"}}); }

Matrix m(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<long>> v;
    for (auto row : rows) v.emplace_back(row);
    return Matrix::from_ints(v);
}

}  // namespace

TEST_CASE("strata lattice") {
    const auto r = registry();
    const auto pair = p2_two_lines(r);
    const auto& s = pair.strata();
    REQUIRE(s.size() == 4);
    CHECK(s[0].sigma.empty());
    CHECK(s[0].atom == "P2");
    CHECK(s[1].sigma == Subset{1});
    CHECK(s[2].sigma == Subset{2});
    CHECK(s[3].sigma == Subset{1, 2});
    CHECK(s[3].atom == "pt");
    for (const auto& st : s) CHECK(st.dim == 2 - static_cast<int>(st.sigma.size()));
    const SNCPair empty(r, "P2", {}, {});
    CHECK(empty.strata().size() == 1);
    const SNCPair p1(r, "P1", {"p"}, {{{1}, "pt"}});
    CHECK(p1.strata().size() == 2);
}

TEST_CASE("pair invariants") {
    const auto r = registry();
    auto violation = [&](auto make) -> std::string {
        try {
            make();
        } catch (const InvariantViolation& e) {
            return e.invariant();
        }
        return "";
    };
    CHECK(violation([&] { SNCPair(r, "P2", {"a"}, {{{1}, "pt"}}); }) == "snc-codimension");
    CHECK(violation([&] { SNCPair(r, "P2", {"a", "b"}, {{{1}, "P1"}, {{1, 2}, "pt"}}); }) != "");
    CHECK(violation([&] { SNCPair(r, "P2", {"a"}, {}); }) == "snc-component");
    CHECK_THROWS_AS(SNCPair(r, "P9", {}, {}), UnknownNameError);
}

TEST_CASE("Gysin complex examples") {
    const auto r = registry();
    const GysinComplex g1(SNCPair(r, "P1", {"p"}, {{{1}, "pt"}}));
    REQUIRE(g1.length() == 2);
    CHECK(g1.terms(0)[0].atom == "P1");
    CHECK(g1.terms(1)[0].atom == "pt");
    CHECK(g1.terms(1)[0].twist == 1);
    CHECK(relations(r).normalize(g1.euler_class()) == MotiveClass::one());

    const GysinComplex g0(SNCPair(r, "P2", {}, {}));
    CHECK(g0.length() == 1);
    CHECK(g0.euler_class() == MotiveClass::term("P2"));

    const GysinComplex g2(p2_two_lines(r));
    REQUIRE(g2.length() == 3);
    CHECK(g2.terms(1).size() == 2);
    CHECK(g2.terms(2)[0].twist == 2);
    // gamma_1 : G_2 -> G_1, components {1,2} -> {2} (+1) and {1,2} -> {1} (-1)
    std::map<Subset, int> signs;
    for (const auto& e : g2.differential(1)) {
        CHECK(e.from == Subset{1, 2});
        signs[e.to] = e.sign;
    }
    CHECK(signs[Subset{2}] == 1);
    CHECK(signs[Subset{1}] == -1);
    CHECK(g2.gamma_squared_defects() == 0);
    CHECK(gysin_sign({1, 2}, 1) == 1);
    CHECK(gysin_sign({1, 2}, 2) == -1);
    CHECK(gysin_sign({1, 3, 5}, 5) == 1);
}

TEST_CASE("gamma squared vanishes on random strata lattices, |I| <= 5") {
    gen::Rng rng(31);
    std::size_t pairs = 0;
    for (int trial = 0; trial < 300; ++trial) {
        AtomRegistry r;
        const int rank = static_cast<int>(gen::uniform(rng, 0, 5));
        const int dim = static_cast<int>(gen::uniform(rng, std::max(rank, 1), 6));
        const auto pair = gen::random_snc_pair(rng, r, rank, dim);
        const GysinComplex g(pair);
        CHECK(g.gamma_squared_defects() == 0);
        std::vector<std::vector<int>> strata;
        for (const auto& s : pair.strata()) strata.push_back(s.sigma);
        CHECK(oracle::gamma_squared_defects(strata) == 0);
        CHECK(g.length() <= static_cast<std::size_t>(std::min(rank, dim)) + 1);
        // Euler compatibility
        CHECK(g.euler_class() == chi_open(pair));
        MotiveClass alternating;
        for (const auto& s : pair.strata())
            alternating += MotiveClass::term(s.atom, 0, s.sigma.size() % 2 == 0 ? 1 : -1);
        CHECK(alternating == chi_c_open(pair));
        ++pairs;
    }
    CHECK(pairs == 300);
}

TEST_CASE("a wrong sign convention breaks gamma squared") {
    // sign taken from the removed label instead of its position
    const std::vector<std::vector<int>> strata = {{}, {1}, {2}, {3}, {1, 3}};
    CHECK(oracle::gamma_squared_defects(strata) == 0);
    long sum = 0;
    for (auto [first, second] : {std::pair{1, 3}, std::pair{3, 1}}) sum += (first % 2 ? 1 : -1) * (second % 2 ? 1 : -1);
    CHECK(sum != 0);
}

TEST_CASE("minor multiplicities") {
    CHECK(minor_multiplicity(int_identity(3), {1, 2}, {1, 2}) == 1);
    CHECK(minor_multiplicity(int_identity(3), {1, 2}, {1, 3}) == 0);
    CHECK(minor_multiplicity({{1, 2}, {3, 4}}, {1, 2}, {1, 2}) == -2);
    CHECK(minor_multiplicity({{1, 2}, {0, 0}}, {1, 2}, {1, 2}) == 0);
    CHECK(minor_multiplicity({{5}}, {}, {}) == 1);
    CHECK_THROWS_AS(minor_multiplicity({{1, 2}}, {1}, {1, 2}), InvalidMapError);
    gen::Rng rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
        const auto a = gen::random_int_matrix(rng, n, n, 4);
        CHECK(determinant(a) == oracle::leibniz_det(a));
    }
}

TEST_CASE("Cauchy-Binet on random matrices (>= 500 identities)") {
    const IntMatrix a = {{1, 2}, {3, 4}}, b = {{0, 1}, {1, 1}};
    CHECK(determinant(int_product(a, b)) == 2);
    CHECK(determinant(a) * determinant(b) == 2);

    gen::Rng rng(43);
    std::size_t identities = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
        const auto q = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
        const auto s = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
        const auto x = gen::random_int_matrix(rng, p, q, 4);
        const auto y = gen::random_int_matrix(rng, q, s, 4);
        const auto prod = int_product(x, y);
        const auto lib = cauchy_binet(x, y);
        CHECK(lib.ok());
        // brute-force oracle
        std::size_t checked = 0;
        for (int k = 1; k <= static_cast<int>(std::min(p, s)); ++k)
            for (const auto& sigma : subsets_of_size(static_cast<int>(p), k))
                for (const auto& rho : subsets_of_size(static_cast<int>(s), k)) {
                    long sum = 0;
                    for (const auto& tau : subsets_of_size(static_cast<int>(q), k))
                        sum += oracle::minor(x, sigma, tau) * oracle::minor(y, tau, rho);
                    CHECK(sum == oracle::minor(prod, sigma, rho));
                    ++checked;
                }
        CHECK(lib.checked == checked);
        identities += checked;
    }
    CHECK(identities >= 500);

    // 3x4 by 4x3
    const auto x = gen::random_int_matrix(rng, 3, 4, 4);
    const auto y = gen::random_int_matrix(rng, 4, 3, 4);
    CHECK(cauchy_binet(x, y).ok());
}

TEST_CASE("Laplace identity") {
    gen::Rng rng(47);
    std::size_t checked = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const auto a = gen::random_int_matrix(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 4)),
                                              static_cast<std::size_t>(gen::uniform(rng, 1, 4)), 4);
        const auto lib = laplace_identities(a);
        CHECK(lib.ok());
        checked += lib.checked;
        // recompute one side with the Leibniz oracle
        const int rows = static_cast<int>(a.size()), cols = static_cast<int>(a[0].size());
        for (int k = 1; k <= std::min(rows, cols); ++k)
            for (const auto& sigma : subsets_of_size(rows, k))
                for (const auto& nu : subsets_of_size(cols, k - 1))
                    for (int beta = 1; beta <= cols; ++beta) {
                        if (std::find(nu.begin(), nu.end(), beta) != nu.end()) continue;
                        auto joined = nu;
                        joined.insert(std::lower_bound(joined.begin(), joined.end(), beta), beta);
                        const long pos = std::find(joined.begin(), joined.end(), beta) - joined.begin();
                        const long rhs = (pos % 2 == 0 ? 1 : -1) * oracle::minor(a, sigma, joined);
                        long lhs = 0;
                        for (std::size_t l = 0; l < sigma.size(); ++l) {
                            auto rest = sigma;
                            rest.erase(rest.begin() + static_cast<long>(l));
                            lhs += (l % 2 == 0 ? 1 : -1) * oracle::minor(a, rest, nu) *
                                   a[static_cast<std::size_t>(sigma[l] - 1)][static_cast<std::size_t>(beta - 1)];
                        }
                        CHECK(lhs == rhs);
                        CHECK(laplace_sides(a, sigma, nu, beta) == std::pair{lhs, rhs});
                    }
    }
    CHECK(checked > 500);
}

TEST_CASE("pair morphisms and induced maps") {
    const auto r = registry();
    const SNCPair line(r, "P2", {"line"}, {{{1}, "P1"}});
    const SNCPair bl(r, "Bl_pt_P2", {"strict", "exceptional"}, {{{1}, "P1"}, {{2}, "P1"}, {{1, 2}, "pt"}});
    const PairMorphism blowup(bl, line, {{1, 1}}, {{{{1}, {1}}, "strict->line"}, {{{1}, {2}}, "exceptional->point"}}, "pi");
    const auto g = induced_morphism(blowup);
    CHECK(g.components[0].size() == 1);
    CHECK(g.components[0][0].map == "pi");
    CHECK(g.multiplicity({1}, {1}) == 1);
    CHECK(g.multiplicity({1}, {2}) == 1);
    CHECK(chain_map_law(blowup).ok());

    const auto id = PairMorphism::identity(bl);
    CHECK(id.is_identity());
    CHECK(induced_morphism(id).is_identity());
    CHECK(chain_map_law(id).ok());

    const SNCPair p1(r, "P1", {"zero"}, {{{1}, "pt"}});
    const PairMorphism square(p1, p1, {{2}}, {{{{1}, {1}}, "id"}}, "z^2");
    CHECK(induced_morphism(square).multiplicity({1}, {1}) == 2);
    CHECK_THROWS_AS(induced_morphism(PairMorphism(p1, p1, {{3}}, {}, "z^3")), IncompleteMorphismError);

    auto violation = [&](auto make) -> std::string {
        try {
            make();
        } catch (const InvariantViolation& e) {
            return e.invariant();
        }
        return "";
    };
    CHECK(violation([&] { PairMorphism(bl, line, {{1}}, {}); }) == "pair-morphism-shape");
    CHECK(violation([&] { PairMorphism(bl, line, {{1, -1}}, {}); }) == "pair-morphism-shape");
    CHECK(violation([&] { PairMorphism(bl, line, {{1, 1}}, {{{{1}, {1, 2}}, "x"}}); }) == "pair-morphism-strata");

    // composition
    const PairMorphism fourth(p1, p1, {{4}}, {{{{1}, {1}}, "id"}}, "z^4");
    CHECK(compose_morphisms(fourth, square, square).holds());
    CHECK_FALSE(compose_morphisms(square, square, square).holds());
    CHECK(compose_morphisms(blowup, blowup, id).holds());
    CHECK(compose_morphisms(blowup, PairMorphism::identity(line), blowup).holds());
    CHECK_THROWS_AS(compose_morphisms(blowup, square, blowup), InvalidMapError);
}

TEST_CASE("random pair morphisms satisfy the chain-map law and compose") {
    gen::Rng rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        AtomRegistry r;
        const int dim = 5;
        const auto a = gen::random_snc_pair(rng, r, static_cast<int>(gen::uniform(rng, 1, 3)), dim);
        // middle pair carries its full intersection lattice so every intermediate stratum exists
        const int b_rank = static_cast<int>(gen::uniform(rng, 1, 3));
        std::vector<std::string> b_components;
        std::map<Subset, std::string> b_strata;
        for (int k = 1; k <= b_rank; ++k) {
            b_components.push_back("B" + std::to_string(k));
            for (const auto& sigma : subsets_of_size(b_rank, k)) b_strata[sigma] = "P" + std::to_string(dim - k);
        }
        const SNCPair b(r, "P" + std::to_string(dim), b_components, b_strata);
        const auto c = gen::random_snc_pair(rng, r, static_cast<int>(gen::uniform(rng, 1, 3)), dim);
        auto full_maps = [](const SNCPair& src, const SNCPair& tgt) {
            std::map<StrataKey, std::string> maps;
            for (const auto& s : tgt.strata())
                for (const auto& t : src.strata())
                    if (!s.sigma.empty() && s.sigma.size() == t.sigma.size())
                        maps[{s.sigma, t.sigma}] = "f_" + subset_key(s.sigma) + "|" + subset_key(t.sigma);
            return maps;
        };
        const auto mg = gen::random_int_matrix(rng, static_cast<std::size_t>(b.rank()), static_cast<std::size_t>(a.rank()), 3);
        const auto mf = gen::random_int_matrix(rng, static_cast<std::size_t>(c.rank()), static_cast<std::size_t>(b.rank()), 3);
        const PairMorphism g(a, b, mg, full_maps(a, b));
        const PairMorphism f(b, c, mf, full_maps(b, c));
        const PairMorphism fg(a, c, int_product(mf, mg), full_maps(a, c));
        CHECK(chain_map_law(f).ok());
        CHECK(chain_map_law(g).ok());
        const auto rep = compose_morphisms(fg, f, g);
        CHECK(rep.matrix_product);
        CHECK(rep.minors.ok());
        CHECK(rep.gysin_maps);
    }
}

TEST_CASE("Manin decomposition") {
    const auto r = registry();
    const auto rel = relations(r);
    const auto p2 = manin_decomposition(r, rel, {"P2", "pt", "Bl_pt_P2", "P1", 2});
    CHECK(p2.holds());
    CHECK(p2.predicted_x_tilde == MotiveClass::term("P2") + MotiveClass::lefschetz());
    CHECK(p2.x_tilde_realization ==
          EPoly::monomial(0, 0) + EPoly::monomial(1, 1) + EPoly::monomial(1, 1) + EPoly::monomial(2, 2));
    const auto p3 = manin_decomposition(r, rel, {"P3", "P1", "Bl_line_P3", "P1xP1", 2});
    CHECK(p3.holds());
    CHECK(p3.predicted_x_tilde == MotiveClass::term("P3") + MotiveClass::term("P1", 1));
    const auto div = manin_decomposition(r, rel, {"P2", "P1", "P2", "P1", 1});
    CHECK(div.holds());
    CHECK(div.predicted_x_tilde == MotiveClass::term("P2"));
    CHECK(div.predicted_y_tilde == MotiveClass::term("P1"));
    CHECK_THROWS_AS(manin_decomposition(r, rel, {"P2", "pt", "Bl_pt_P2", "P1", 1}), InvariantViolation);
    const auto wrong = manin_decomposition(r, rel, {"P2", "pt", "P2", "P1", 2});
    CHECK_FALSE(wrong.x_tilde_class);
    CHECK_FALSE(wrong.x_tilde_realized);
    CHECK(wrong.y_tilde_class);
}

TEST_CASE("Manin consistency: the descent defect vanishes symbolically for r <= 6") {
    for (int rcodim = 1; rcodim <= 6; ++rcodim) {
        const MotiveClass x = MotiveClass::term("X"), y = MotiveClass::term("Y");
        MotiveClass xt = x, yt;
        for (int i = 1; i < rcodim; ++i) xt += twist(y, i);
        for (int i = 0; i < rcodim; ++i) yt += twist(y, i);
        CHECK((x - y - xt + yt).is_zero());
        // independent: polynomial coefficients in L of the Y part
        oracle::LPoly ypart{{0, -1}};
        for (int i = 1; i < rcodim; ++i) ypart = oracle::lpoly_add(ypart, {{i, -1}});
        for (int i = 0; i < rcodim; ++i) ypart = oracle::lpoly_add(ypart, {{i, 1}});
        CHECK(ypart.empty());
    }
}

TEST_CASE("realized Manin squares") {
    const auto r = registry();
    const BlowupSquare sq{"P2", "pt", "Bl_pt_P2", "P1", 2};
    std::map<Bidegree, SquareMaps> maps;
    maps[{0, 0, 0}] = {m({{1}}), m({{1}}), m({{1}}), m({{1}})};
    maps[{2, 1, 1}] = {Matrix(0, 1), m({{1}, {0}}), Matrix(1, 0), m({{0, -1}})};
    maps[{4, 2, 2}] = {Matrix(0, 1), m({{1}}), Matrix(0, 0), Matrix(0, 1)};
    const RealizedSquare good(r, sq, maps);
    const auto rep = manin_sequence_check(good);
    CHECK(rep.holds());
    CHECK(rep.degrees.size() == 3);
    CHECK(descent_D_realized(good));
    for (const auto& b : good.bidegrees()) {
        const auto s = simple(good.diagram(b));
        CHECK(oracle::homology(s).empty());
    }

    auto broken = maps;
    broken[{2, 1, 1}].f = m({{0}, {0}});
    const RealizedSquare bad(r, sq, broken);
    CHECK_FALSE(manin_sequence_check(bad).holds());
    CHECK_FALSE(descent_D_realized(bad));
    bool found = false;
    for (const auto& b : bad.bidegrees()) found = found || !oracle::homology(simple(bad.diagram(b))).empty();
    CHECK(found);

    auto noncommuting = maps;
    noncommuting[{0, 0, 0}].j = m({{2}});
    CHECK_THROWS_AS(RealizedSquare(r, sq, noncommuting), DiagramError);
    auto misshaped = maps;
    misshaped[{0, 0, 0}].i = m({{1, 0}});
    CHECK_THROWS_AS(RealizedSquare(r, sq, misshaped), InvalidMapError);

    // degenerate square: X~ = X, Y~ = Y, identities
    const BlowupSquare deg{"P2", "P1", "P2", "P1", 1};
    std::map<Bidegree, SquareMaps> idmaps;
    idmaps[{0, 0, 0}] = {m({{1}}), m({{1}}), m({{1}}), m({{1}})};
    idmaps[{2, 1, 1}] = {m({{1}}), m({{1}}), m({{1}}), m({{1}})};
    idmaps[{4, 2, 2}] = {Matrix(0, 1), m({{1}}), Matrix(0, 0), Matrix(0, 1)};
    CHECK(manin_sequence_check(RealizedSquare(r, deg, idmaps)).holds());
}

TEST_CASE("descent property at class level") {
    const auto r = registry();
    const auto rel = relations(r);
    const VarietyCatalog none(r, {});
    const auto d = descent_D_check(r, rel, none, {"P2", "pt", "Bl_pt_P2", "P1"});
    CHECK(d.holds());
    CHECK(d.defect.is_zero());
    // (1+L+L^2) - 1 - (1+2L+L^2) + (1+L) = 0 by polynomial arithmetic
    auto poly = oracle::lpoly_add(subst.at("P2"), subst.at("pt"), -1);
    poly = oracle::lpoly_add(poly, {{0, 1}, {1, 2}, {2, 1}}, -1);
    poly = oracle::lpoly_add(poly, subst.at("P1"));
    CHECK(poly.empty());
    const auto wrong = descent_D_check(r, rel, none, {"P2", "pt", "P2", "P1"});
    CHECK_FALSE(wrong.holds());
    CHECK(wrong.defect == MotiveClass::lefschetz());
}

TEST_CASE("Euler characteristics of pairs") {
    const auto r = registry();
    const auto rel = relations(r);
    const SNCPair p1(r, "P1", {"p"}, {{{1}, "pt"}});
    CHECK(rel.normalize(chi_c_open(p1)) == MotiveClass::lefschetz());
    CHECK(rel.normalize(chi_open(p1)) == MotiveClass::one());
    CHECK(chi_open(SNCPair(r, "P2", {}, {})) == MotiveClass::term("P2"));
    CHECK(chi_c_open(SNCPair(r, "P2", {}, {})) == MotiveClass::term("P2"));
    const auto two = p2_two_lines(r);
    CHECK(rel.normalize(chi_open(two)) == parse_class("1 - L"));
    CHECK(rel.normalize(chi_c_open(two)) == parse_class("L^2 - L"));
    CHECK(oracle::evaluate(chi_open(two), subst) == oracle::LPoly{{0, 1}, {1, -1}});
    CHECK(oracle::evaluate(chi_c_open(two), subst) == oracle::LPoly{{1, -1}, {2, 1}});
    // divisor relation for one smooth component
    const SNCPair line(r, "P2", {"line"}, {{{1}, "P1"}});
    CHECK(chi_open(line) == MotiveClass::term("P2") - MotiveClass::term("P1", 1));
}

TEST_CASE("duality bridge on random pairs") {
    gen::Rng rng(59);
    for (int trial = 0; trial < 100; ++trial) {
        AtomRegistry r;
        const int rank = static_cast<int>(gen::uniform(rng, 0, 4));
        const int dim = static_cast<int>(gen::uniform(rng, std::max(1, rank), 5));
        const auto pair = gen::random_snc_pair(rng, r, rank, dim);
        CHECK(dual(r, chi_open(pair)) == twist(chi_c_open(pair), -dim));
    }
}

TEST_CASE("compactification independence") {
    const auto r = registry();
    const auto rel = relations(r);
    const SNCPair zero(r, "P1", {"zero"}, {{{1}, "pt"}});
    const SNCPair inf(r, "P1", {"infinity"}, {{{1}, "pt"}});
    CHECK(compactification_independence(rel, "A1", zero, "A1", inf).equal());
    const SNCPair line(r, "P2", {"line"}, {{{1}, "P1"}});
    const SNCPair rulings(r, "P1xP1", {"h", "v"}, {{{1}, "P1"}, {{2}, "P1"}, {{1, 2}, "pt"}});
    const auto a2 = compactification_independence(rel, "A2", line, "A2", rulings);
    CHECK(a2.equal());
    CHECK(a2.chi_open_a == MotiveClass::one());
    CHECK(a2.chi_c_open_a == MotiveClass::lefschetz(2));
    CHECK(compactification_independence(rel, "A2", line, "A2", line).equal());
    const auto control = compactification_independence(rel, "A2", rulings, "A2", p2_two_lines(r));
    CHECK_FALSE(control.equal());
    CHECK_THROWS_AS(compactification_independence(rel, "A2", line, "A1", zero), InvariantViolation);
}
